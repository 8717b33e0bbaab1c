#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxdom/dihedral.hpp"
#include "coxdom/dominance.hpp"
#include "coxdom/element.hpp"
#include "coxdom/error.hpp"
#include "coxdom/rootstore.hpp"

namespace coxdom {

enum class ConeStatus { member, not_member, inconclusive };

inline const char* cone_status_name(ConeStatus s) {
  switch (s) {
    case ConeStatus::member: return "member";
    case ConeStatus::not_member: return "not_member";
    case ConeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

template <class S>
struct ConeVerdict {
  ConeStatus status = ConeStatus::inconclusive;
  std::optional<GroupElement<S>> witness;
  std::string certificate;
};

/*
  Constructive witness for a dominated pair: some w with wx positive,
  wy negative and (w(x-y), z) <= 0 for every simple root z (hence for
  every positive root).  Two stages:

    1. Inside the dihedral subgroup generated by r_x and r_y, walk the
       pair down the chain with the subgroup's two canonical reflections
       until it straddles the sign change; the dominance is minimal with
       respect to that subgroup, so the walk lands exactly on the
       canonical arrangement {a0, -b0} with (a0, b0) <= -1.
    2. While some simple root c pairs positively with a0 + b0, reflect
       the pair by r_c.  The coefficient sum of the pair drops at each
       step while supports never grow, so the loop terminates; at exit
       all simple pairings are <= 0.

  The iteration cap exists as a bug trap only; the argument above bounds
  both stages.
*/
template <class S>
GroupElement<S> key_witness(RootStore<S>& store, Vec<S> x, Vec<S> y,
                            std::size_t cap = 10000) {
  if (!dominates(store, x, y).holds)
    fail(ErrorKind::not_dominant, "key witness requires x dom y");
  if (vec_eq(x, y))
    fail(ErrorKind::not_dominant, "key witness requires x != y");
  const CoxeterDatum<S>& d = store.datum();

  GroupElement<S> u = GroupElement<S>::identity(d);
  Vec<S> p = x, q = y;

  // Stage 1.
  if (!(vec_sign(p) == VecSign::positive && vec_sign(q) == VecSign::negative)) {
    GeneratedDihedral<S> gen = generated_dihedral_canonicals(store, x, y);
    const GroupElement<S> ra = reflection_word_for(d, gen.alpha);
    const GroupElement<S> rb = reflection_word_for(d, gen.beta);
    auto at_center = [&] {
      if (vec_sign(p) != VecSign::positive) return false;
      if (vec_sign(q) != VecSign::negative) return false;
      const Vec<S> nq = vec_neg(q);
      return (vec_eq(p, gen.alpha) && vec_eq(nq, gen.beta)) ||
             (vec_eq(p, gen.beta) && vec_eq(nq, gen.alpha));
    };
    std::size_t steps = 0;
    while (!at_center()) {
      if (++steps > cap)
        fail(ErrorKind::cap_exceeded,
             "chain walk did not reach the canonical arrangement (bug signal)");
      // Descend whichever image is still on the wrong side of the center.
      Vec<S> target;
      if (vec_sign(q) == VecSign::positive) {
        target = q;
      } else if (vec_sign(p) == VecSign::negative) {
        target = vec_neg(p);
      } else {
        fail(ErrorKind::internal,
             "mixed-sign pair away from the chain center (bug signal)");
      }
      const bool use_alpha = sign_of(d.bilinear(target, gen.alpha)) > 0;
      const Vec<S>& mirror = use_alpha ? gen.alpha : gen.beta;
      const GroupElement<S>& r = use_alpha ? ra : rb;
      p = d.reflect_in(mirror, p);
      q = d.reflect_in(mirror, q);
      u = compose(d, r, u);
    }
  }

  // Stage 2.
  Vec<S> a = p, b = vec_neg(q);
  std::size_t steps = 0;
  for (;;) {
    Vec<S> s = vec_add(a, b);
    std::optional<unsigned> pivot;
    for (unsigned c = 0; c < d.rank(); ++c) {
      if (sign_of(d.pair_with_simple(s, c)) > 0) {
        pivot = c;
        break;
      }
    }
    if (!pivot) break;
    if (++steps > cap)
      fail(ErrorKind::cap_exceeded,
           "support descent did not terminate (bug signal)");
    a = d.reflect_simple(*pivot, a);
    b = d.reflect_simple(*pivot, b);
    u = compose(d, GroupElement<S>::generator(d, *pivot), u);
  }
  return u;
}

/*
  Membership of a root difference in the imaginary cone is equivalent to
  dominance, so the verdict is exact; the witness (when x != y) is the
  constructive one above.
*/
template <class S>
ConeVerdict<S> imaginary_cone_contains_difference(RootStore<S>& store,
                                                  Vec<S> x, Vec<S> y) {
  ConeVerdict<S> v;
  const DominanceVerdict dom = dominates(store, x, y);
  if (!dom.holds) {
    v.status = ConeStatus::not_member;
    v.certificate = std::string("x does not dominate y (") +
                    dom_reason_name(dom.reason) + ")";
    return v;
  }
  v.status = ConeStatus::member;
  if (vec_eq(x, y)) {
    v.witness = GroupElement<S>::identity(store.datum());
    v.certificate = "x - y = 0";
  } else {
    v.witness = key_witness(store, x, y);
    v.certificate = "witness maps x - y into the fundamental region";
  }
  return v;
}

/*
  Semi-decision for an arbitrary vector: descend v by any simple
  reflection pairing positively with it.  A vector of the cone never
  leaves the positive coefficient cone and loses one element of its
  (finite) positive-pairing set per step, so membership is confirmed at
  a fixed point with nonnegative coefficients and nonpositive simple
  pairings.  An iterate with a negative coefficient refutes membership;
  hitting the cap is reported as inconclusive, never as a verdict.
*/
template <class S>
ConeVerdict<S> imaginary_cone_contains(const CoxeterDatum<S>& d, Vec<S> v,
                                       std::size_t cap = 10000) {
  if (v.size() != d.rank())
    fail(ErrorKind::dimension_mismatch, "vector length must equal rank");
  ConeVerdict<S> verdict;
  GroupElement<S> w = GroupElement<S>::identity(d);
  for (std::size_t step = 0; step <= cap; ++step) {
    bool nonneg = true;
    for (const S& c : v)
      if (sign_of(c) < 0) nonneg = false;
    if (!nonneg) {
      verdict.status = ConeStatus::not_member;
      verdict.witness = w;
      verdict.certificate =
          "w v = (" + vec_str(v) + ") has a negative coefficient";
      return verdict;
    }
    std::optional<unsigned> pivot;
    for (unsigned a = 0; a < d.rank(); ++a) {
      if (sign_of(d.pair_with_simple(v, a)) > 0) {
        pivot = a;
        break;
      }
    }
    if (!pivot) {
      verdict.status = ConeStatus::member;
      verdict.witness = w;
      verdict.certificate =
          "w v = (" + vec_str(v) +
          ") has nonnegative coefficients and nonpositive simple pairings";
      return verdict;
    }
    v = d.reflect_simple(*pivot, v);
    w = compose(d, GroupElement<S>::generator(d, *pivot), w);
  }
  verdict.status = ConeStatus::inconclusive;
  verdict.certificate = "descent cap reached";
  return verdict;
}

// x - y lies in the dual of the Tits cone exactly when x dominates y.
template <class S>
bool tits_dual_contains(const RootStore<S>& store, const Vec<S>& x,
                        const Vec<S>& y) {
  return dominates(store, x, y).holds;
}

struct ConeCheckReport {
  std::size_t dominated_pairs = 0;
  std::size_t rejected_pairs = 0;
  std::size_t l5_samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/*
  Sweep verification of the cone identities over a depth window:

    - every dominated pair admits a key witness whose output passes the
      all-simple-pairings test (and flips the signs it promises);
    - for every pair of distinct positive roots with pairing < 1 the
      descent refutes membership of the difference;
    - vectors with nonpositive simple pairings and nonnegative
      coefficients stay in the positive cone under w v - v for all short w.
*/
template <class S>
ConeCheckReport verify_cone_identities(RootStore<S>& store, int depth_bound,
                                       std::size_t length_bound) {
  ConeCheckReport rep;
  const CoxeterDatum<S>& d = store.datum();
  store.ensure_depth(depth_bound);
  const int window = std::min(depth_bound, store.max_depth());
  const auto ids = store.roots_up_to(window);
  std::vector<Vec<S>> l5_candidates;

  for (RootId xi : ids) {
    const Vec<S> x = store.root(xi).coeffs;  // copies: sweeps grow the store
    for (RootId yi : ids) {
      if (xi == yi) continue;
      const Vec<S> y = store.root(yi).coeffs;
      const S form = d.bilinear(x, y);
      if (dominates(store, x, y).holds) {
        ++rep.dominated_pairs;
        GroupElement<S> w = key_witness(store, x, y);
        const Vec<S> wx = w.apply(x);
        const Vec<S> wy = w.apply(y);
        if (vec_sign(wx) != VecSign::positive || vec_sign(wy) != VecSign::negative)
          rep.failures.push_back("witness failed sign contract for (" +
                                 vec_str(x) + ")/(" + vec_str(y) + ")");
        const Vec<S> diff = vec_sub(wx, wy);
        for (unsigned a = 0; a < d.rank(); ++a) {
          if (sign_of(d.pair_with_simple(diff, a)) > 0) {
            rep.failures.push_back("witness pairing positive at simple " +
                                   std::to_string(a + 1));
            break;
          }
        }
        l5_candidates.push_back(diff);
      } else if (sc_lt(form, S::one())) {
        ++rep.rejected_pairs;
        ConeVerdict<S> cv = imaginary_cone_contains(d, vec_sub(x, y));
        if (cv.status != ConeStatus::not_member)
          rep.failures.push_back("difference (" + vec_str(x) + ")-(" +
                                 vec_str(y) + ") not rejected: " +
                                 cone_status_name(cv.status));
      }
    }
  }

  // Lemma-style stability samples: w v - v keeps nonnegative coefficients.
  l5_candidates.push_back(vec_zero<S>(d.rank()));
  const auto elements = elements_up_to_length(d, length_bound);
  for (const auto& v : l5_candidates) {
    bool qualifies = true;
    for (unsigned a = 0; a < d.rank() && qualifies; ++a)
      if (sign_of(d.pair_with_simple(v, a)) > 0) qualifies = false;
    for (const S& c : v)
      if (sign_of(c) < 0) qualifies = false;
    if (!qualifies) continue;
    ++rep.l5_samples;
    for (const auto& w : elements) {
      const Vec<S> moved = vec_sub(w.apply(v), v);
      for (const S& c : moved) {
        if (sign_of(c) < 0) {
          rep.failures.push_back("w v - v left the positive cone for v = (" +
                                 vec_str(v) + "), w = " + w.word_str());
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace coxdom
