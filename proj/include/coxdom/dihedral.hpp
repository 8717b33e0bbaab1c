#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxdom/dominance.hpp"
#include "coxdom/error.hpp"
#include "coxdom/rootstore.hpp"

namespace coxdom {

enum class ChainSide { alpha, beta };

/*
  A maximal dihedral reflection subgroup, described by its canonical pair
  of positive roots.  An infinite subsystem carries the chain parameter as
  cosh(theta) = -(alpha, beta) >= 1, which both backends can represent; a
  finite one carries its order label m and the full positive orbit in
  angular order from alpha to beta.
*/
template <class S>
struct DihedralSubsystem {
  Vec<S> alpha, beta;            // canonical pair Delta(W')
  bool infinite = false;
  unsigned m = 2;                // finite kind only
  S cosh_theta = S::one();       // infinite kind only
  Vec<S> plane_x, plane_y;       // the two roots the plane was built from
  bool certified = false;
  int window_depth = 0;
  std::vector<std::string> caveats;
  std::vector<Vec<S>> finite_orbit;  // finite kind: positive roots, alpha first

  // Display-only angle; the infinite case is arccosh of the stored value.
  double theta() const {
    if (infinite) return std::acosh(std::max(1.0, cosh_theta.to_double()));
    return M_PI / static_cast<double>(m);
  }

  KeyVec<S> pair_key() const {
    KeyVec<S> k = vec_key(alpha);
    KeyVec<S> kb = vec_key(beta);
    k.insert(k.end(), kb.begin(), kb.end());
    return k;
  }
};

/*
  Root chains of an infinite dihedral subsystem:

    alpha side, index i:  c_{i+1} alpha + c_i beta
    beta  side, index i:  c_i alpha + c_{i+1} beta

  Nonnegative indices give the positive roots; the chains extend to all
  integers through c_{-i} = -c_i.
*/
template <class S>
Vec<S> chain_root(const DihedralSubsystem<S>& sub, ChainSide side, long i) {
  if (!sub.infinite)
    fail(ErrorKind::finite_subsystem, "chain roots require an infinite subsystem");
  const S ci = chain_coefficient(sub.cosh_theta, i);
  const S ci1 = chain_coefficient(sub.cosh_theta, i + 1);
  const S& sa = (side == ChainSide::alpha) ? ci1 : ci;
  const S& sb = (side == ChainSide::alpha) ? ci : ci1;
  Vec<S> v(sub.alpha.size(), S::zero());
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = sa * sub.alpha[k] + sb * sub.beta[k];
  return v;
}

// Chain coordinates of a positive root of an infinite subsystem, if any.
template <class S>
std::optional<std::pair<ChainSide, long>> chain_position(
    const DihedralSubsystem<S>& sub, const Vec<S>& v, long cap = 100000) {
  if (!sub.infinite)
    fail(ErrorKind::finite_subsystem, "chain positions require an infinite subsystem");
  auto st = solve_in_plane(sub.alpha, sub.beta, v);
  if (!st) return std::nullopt;
  const S& s = st->first;
  const S& t = st->second;
  if (sign_of(s) < 0 || sign_of(t) < 0) return std::nullopt;
  S prev = S::zero();  // c_i
  S cur = S::one();    // c_{i+1}
  const S two_u = sub.cosh_theta + sub.cosh_theta;
  for (long i = 0; i <= cap; ++i) {
    if (sc_eq(cur, s) && sc_eq(prev, t))
      return std::make_pair(ChainSide::alpha, i);
    if (sc_eq(prev, s) && sc_eq(cur, t))
      return std::make_pair(ChainSide::beta, i);
    if (sc_gt(prev, s) && sc_gt(prev, t)) return std::nullopt;  // overshot
    S next = two_u * cur - prev;
    prev = cur;
    cur = std::move(next);
  }
  return std::nullopt;
}

// Reflection-line coordinate of a positive root of an infinite subsystem:
// alpha side i sits at point i, beta side j at point -j-1.
template <class S>
long chain_point(const DihedralSubsystem<S>& sub, const Vec<S>& v) {
  auto pos = chain_position(sub, v);
  if (!pos)
    fail(ErrorKind::not_in_subsystem,
         "(" + vec_str(v) + ") is not in the subsystem chain");
  return pos->first == ChainSide::alpha ? pos->second : -pos->second - 1;
}

namespace detail {

// Positive orbit of a finite dihedral pair under its two reflections,
// sorted angularly from a to b.  Closure instead of trigonometry so the
// exact backend works unchanged.
template <class S>
std::vector<Vec<S>> finite_positive_orbit(const CoxeterDatum<S>& d,
                                          const Vec<S>& a, const Vec<S>& b) {
  // Dedup by tolerance comparison: the same root reappears through
  // different reflection sequences with different rounding noise, and
  // the first representative must win or noise compounds.
  std::vector<Vec<S>> orbit = {a, b};
  std::vector<Vec<S>> queue = {a, b};
  const std::size_t cap = 4096;
  auto known = [&](const Vec<S>& v) {
    for (const auto& r : orbit)
      if (vec_eq(r, v)) return true;
    return false;
  };
  while (!queue.empty()) {
    Vec<S> r = std::move(queue.back());
    queue.pop_back();
    for (const Vec<S>* g : {&a, &b}) {
      Vec<S> img = d.reflect_in(*g, r);
      if (vec_sign(img) == VecSign::negative) img = vec_neg(img);
      if (known(img)) continue;
      if (orbit.size() >= cap)
        fail(ErrorKind::cap_exceeded, "finite orbit closure cap exceeded");
      orbit.push_back(img);
      queue.push_back(std::move(img));
    }
  }
  // Angular order by plane coordinates (s, t): t/s increasing from a to b.
  std::vector<std::pair<S, S>> coords;
  coords.reserve(orbit.size());
  for (const auto& z : orbit) {
    auto st = solve_in_plane(a, b, z);
    if (!st) fail(ErrorKind::internal, "orbit left its own plane");
    coords.push_back(std::move(*st));
  }
  std::vector<std::size_t> order(orbit.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
    // cross > 0  <=>  u is angularly before v
    const S cross = coords[u].first * coords[v].second -
                    coords[u].second * coords[v].first;
    return sign_of(cross) > 0;
  });
  std::vector<Vec<S>> sorted;
  sorted.reserve(orbit.size());
  for (std::size_t i : order) sorted.push_back(std::move(orbit[i]));
  return sorted;
}

}  // namespace detail

/*
  Canonical-pair recovery from a collected set of plane roots: the pair is
  the two extreme rays of the (pointed) cone the roots span, certified by
  the pairing-value condition and by regenerating the subsystem from the
  pair and checking it covers every collected root.  Collection windows
  are the callers' business; an uncertifiable collection is reported, not
  guessed at.
*/
namespace detail {

template <class S>
bool build_from_plane_roots(const CoxeterDatum<S>& datum,
                            const std::vector<Vec<S>>& plane,
                            DihedralSubsystem<S>& sub) {
  if (plane.size() < 2) return false;
  PlaneTest<S> tester(plane[0], plane[1]);
  std::vector<std::pair<S, S>> coords;
  coords.reserve(plane.size());
  for (const auto& z : plane) {
    auto st = tester.coords(z);
    if (!st) return false;
    coords.push_back(std::move(*st));
  }
  auto extreme = [&](int orientation) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < plane.size(); ++c) {
      bool ok = true;
      for (std::size_t z = 0; z < plane.size() && ok; ++z) {
        const S cross = coords[c].first * coords[z].second -
                        coords[c].second * coords[z].first;
        if (sign_of(cross) * orientation < 0) ok = false;
      }
      if (ok) return c;
    }
    return std::nullopt;
  };
  auto lo = extreme(+1);
  auto hi = extreme(-1);
  if (!lo || !hi || *lo == *hi) return false;
  sub.alpha = plane[*lo];
  sub.beta = plane[*hi];
  const S val = datum.bilinear(sub.alpha, sub.beta);
  if (sc_le(val, S::from_int(-1))) {
    sub.infinite = true;
    sub.cosh_theta = -val;
    sub.finite_orbit.clear();
    for (const auto& z : plane)
      if (!chain_position(sub, z)) return false;
    return true;
  }
  if (!sc_le(val, S::zero())) return false;  // extremes pair positively
  sub.infinite = false;
  // Nearest bond label only: for large m the -cos(pi/m) values crowd
  // together, so scanning every label would accept noise.
  unsigned matched = 0;
  const double angle = std::acos(std::clamp(-val.to_double(), -1.0, 1.0));
  if (angle > 1e-6) {
    const long est = std::lround(M_PI / angle);
    if (est >= 2 && est <= 1000) {
      auto c = S::minus_cos_pi_over(static_cast<unsigned>(est));
      if (c && sc_eq(val, *c)) matched = static_cast<unsigned>(est);
    }
  }
  if (!matched) return false;
  sub.m = matched;
  try {
    sub.finite_orbit = finite_positive_orbit(datum, sub.alpha, sub.beta);
  } catch (const Error&) {
    sub.finite_orbit.clear();
    return false;  // runaway closure: the candidate pair was not canonical
  }
  if (sub.finite_orbit.size() != sub.m) return false;
  for (const auto& z : plane) {
    bool in_orbit = false;
    for (const auto& r : sub.finite_orbit)
      if (vec_eq(z, r)) { in_orbit = true; break; }
    if (!in_orbit) return false;
  }
  return true;
}

}  // namespace detail

/*
  The maximal dihedral reflection subgroup whose root system spans the
  plane of two given roots.  Collects the enumerated plane roots up to a
  depth window starting at dep(x) + dep(y); if certification fails the
  window doubles and the collection retries, and failures that survive the
  retry cap are surfaced via certified = false.
*/
template <class S>
DihedralSubsystem<S> maximal_dihedral(RootStore<S>& store, Vec<S> x,
                                      Vec<S> y) {
  const SignedRoot sx = classify_root(store, x);
  const SignedRoot sy = classify_root(store, y);
  const Vec<S> px = store.root(sx.id).coeffs;
  const Vec<S> py = store.root(sy.id).coeffs;
  if (sx.id == sy.id)
    fail(ErrorKind::not_independent, "roots span a line, not a plane");
  {
    bool dependent = true;
    for (std::size_t i = 0; i < px.size() && dependent; ++i)
      for (std::size_t j = i + 1; j < px.size() && dependent; ++j)
        if (sign_of(px[i] * py[j] - px[j] * py[i]) != 0) dependent = false;
    if (dependent)
      fail(ErrorKind::not_independent, "roots span a line, not a plane");
  }

  DihedralSubsystem<S> sub;
  sub.plane_x = px;
  sub.plane_y = py;

  int window = store.depth_of(sx.id) + store.depth_of(sy.id);
  const int max_retries = 6;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    store.ensure_depth(window);
    const int effective = std::min(window, store.max_depth());
    std::vector<Vec<S>> plane;
    PlaneTest<S> tester(px, py);
    for (RootId id : store.roots_up_to(effective)) {
      const Vec<S>& z = store.root(id).coeffs;
      if (tester.coords(z)) plane.push_back(z);
    }
    if (detail::build_from_plane_roots(store.datum(), plane, sub)) {
      sub.certified = true;
      sub.window_depth = effective;
      return sub;
    }
    if (store.exhausted() && window >= store.max_depth()) break;
    window *= 2;
    sub.caveats.push_back("canonical-pair certification retry, window doubled to " +
                          std::to_string(window));
  }
  sub.certified = false;
  sub.window_depth = std::min(window, store.max_depth());
  sub.caveats.push_back("certification failed after retry cap");
  return sub;
}

// Chain index of a positive root inside the subsystem; this is the
// standard height of its reflection with respect to (W', S(W')).
template <class S>
int subsystem_height(const DihedralSubsystem<S>& sub, const Vec<S>& x) {
  if (sub.infinite) {
    auto pos = chain_position(sub, x);
    if (!pos)
      fail(ErrorKind::not_in_subsystem,
           "(" + vec_str(x) + ") is not a positive root of the subsystem");
    return static_cast<int>(pos->second);
  }
  for (std::size_t k = 0; k < sub.finite_orbit.size(); ++k) {
    if (vec_eq(sub.finite_orbit[k], x)) {
      const std::size_t mirror = sub.finite_orbit.size() - 1 - k;
      return static_cast<int>(std::min(k, mirror));
    }
  }
  fail(ErrorKind::not_in_subsystem,
       "(" + vec_str(x) + ") is not a positive root of the subsystem");
}

/*
  The two dominance chains of an infinite dihedral subsystem.  Writing
  u_i / v_j for the alpha/beta side chain roots, chain one is

    ... dom u_2 dom u_1 dom alpha dom -beta dom -v_1 dom -v_2 dom ...

  and chain two is its mirror image starting from beta.  Returned as a
  window of k consecutive elements centered on the sign change, after
  verifying every consecutive pair under the dominance test.
*/
template <class S>
std::pair<std::vector<Vec<S>>, std::vector<Vec<S>>> dominance_chains(
    RootStore<S>& store, const DihedralSubsystem<S>& sub, int k) {
  if (!sub.infinite)
    fail(ErrorKind::finite_subsystem, "dominance chains require an infinite subsystem");
  if (k < 1) fail(ErrorKind::parse_error, "chain window must be positive");
  auto element = [&](ChainSide side, long h) {
    return h >= 0 ? chain_root(sub, side, h)
                  : vec_neg(chain_root(
                        sub, side == ChainSide::alpha ? ChainSide::beta
                                                      : ChainSide::alpha,
                        -h - 1));
  };
  const long top = k / 2;
  std::vector<Vec<S>> first, second;
  for (long h = top; h > top - k; --h) {
    first.push_back(element(ChainSide::alpha, h));
    second.push_back(element(ChainSide::beta, h));
  }
  for (const auto* chain : {&first, &second}) {
    for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
      const Vec<S>& a = (*chain)[i];
      const Vec<S>& b = (*chain)[i + 1];
      // make both ends known to the store before deciding
      ensure_root(store, vec_sign(a) == VecSign::negative ? vec_neg(a) : a);
      ensure_root(store, vec_sign(b) == VecSign::negative ? vec_neg(b) : b);
      if (!dominates(store, a, b).holds)
        fail(ErrorKind::internal, "chain neighbours failed the dominance test");
    }
  }
  return {std::move(first), std::move(second)};
}

template <class S>
struct Decomposition {
  std::vector<DihedralSubsystem<S>> subsystems;
  std::vector<std::vector<RootId>> members;  // window roots per subsystem, x excluded
  int window_depth = 0;
  bool partition_ok = false;
  std::vector<std::string> caveats;
};

/*
  The maximal dihedral subgroups through a reflection, seen through a depth
  window: every enumerated positive root other than alpha_t is grouped by
  the plane it spans with alpha_t, one maximal subsystem per plane.  M_t
  can be infinite in rank >= 3, so the result is the window's view; the
  report carries the window depth.  The pairwise intersection property
  (two subsystems through t share only alpha_t) holds by plane geometry
  and is re-verified on the collected sets.
*/
template <class S>
Decomposition<S> decompose_reflections(RootStore<S>& store, Vec<S> x,
                                       int depth_bound) {
  const SignedRoot sx = classify_root(store, x);
  const Vec<S> px = store.root(sx.id).coeffs;
  store.ensure_depth(depth_bound);
  Decomposition<S> dec;
  dec.window_depth = std::min(depth_bound, store.max_depth());
  if (dec.window_depth < depth_bound)
    dec.caveats.push_back("window clamped to exhausted depth " +
                          std::to_string(dec.window_depth));

  std::vector<Vec<S>> reps;
  std::vector<PlaneTest<S>> testers;
  for (RootId id : store.roots_up_to(dec.window_depth)) {
    if (id == sx.id) continue;
    const Vec<S>& z = store.root(id).coeffs;
    bool assigned = false;
    for (std::size_t p = 0; p < testers.size() && !assigned; ++p) {
      if (testers[p].coords(z)) {
        dec.members[p].push_back(id);
        assigned = true;
      }
    }
    if (!assigned) {
      reps.push_back(z);
      testers.emplace_back(px, z);
      dec.members.push_back({id});
    }
  }
  // Build each plane's subsystem from the already-collected members; only
  // a failed certification falls back to the widening collector.
  for (std::size_t p = 0; p < reps.size(); ++p) {
    std::vector<Vec<S>> plane = {px};
    for (RootId id : dec.members[p]) plane.push_back(store.root(id).coeffs);
    DihedralSubsystem<S> sub;
    sub.plane_x = px;
    sub.plane_y = reps[p];
    if (detail::build_from_plane_roots(store.datum(), plane, sub)) {
      sub.certified = true;
      sub.window_depth = dec.window_depth;
      dec.subsystems.push_back(std::move(sub));
    } else {
      dec.subsystems.push_back(maximal_dihedral(store, px, reps[p]));
    }
  }

  // rm:l10 check: members are pairwise disjoint and each subsystem
  // contains alpha_t.
  dec.partition_ok = true;
  std::map<RootId, int> owner;
  for (std::size_t p = 0; p < dec.members.size(); ++p) {
    for (RootId id : dec.members[p]) {
      if (owner.count(id)) dec.partition_ok = false;
      owner[id] = static_cast<int>(p);
    }
  }
  for (const auto& sub : dec.subsystems) {
    if (!sub.certified) {
      dec.partition_ok = false;
      dec.caveats.push_back("an uncertified subsystem entered the decomposition");
      continue;
    }
    bool contains_x = sub.infinite
                          ? chain_position(sub, px).has_value()
                          : [&] {
                              for (const auto& r : sub.finite_orbit)
                                if (vec_eq(r, px)) return true;
                              return false;
                            }();
    if (!contains_x) dec.partition_ok = false;
  }
  return dec;
}

/*
  Canonical pair of the dihedral subgroup generated by two reflections,
  located through the chain of the maximal subsystem containing them:
  if the two roots sit at reflection-line points p and q, the generated
  subgroup owns exactly the points congruent to p modulo d = |p - q|, and
  its canonical roots are the two chain roots adjacent to the sign change
  within that sublattice.
*/
template <class S>
struct GeneratedDihedral {
  Vec<S> alpha, beta;        // Delta(<r_x, r_y>)
  DihedralSubsystem<S> max;  // the ambient maximal subsystem
  long step = 1;             // point spacing d
};

template <class S>
GeneratedDihedral<S> generated_dihedral_canonicals(RootStore<S>& store,
                                                   Vec<S> x, Vec<S> y) {
  const SignedRoot sx = classify_root(store, x);
  const SignedRoot sy = classify_root(store, y);
  const Vec<S> px = store.root(sx.id).coeffs;
  const Vec<S> py = store.root(sy.id).coeffs;
  GeneratedDihedral<S> gen;
  gen.max = maximal_dihedral(store, px, py);
  if (!gen.max.certified)
    fail(ErrorKind::certification_failed,
         "maximal dihedral subsystem could not be certified");
  if (!gen.max.infinite)
    fail(ErrorKind::finite_subsystem,
         "generated-pair canonicals are implemented for infinite subsystems");
  const long ptx = chain_point(gen.max, px);
  const long pty = chain_point(gen.max, py);
  const long d = ptx > pty ? ptx - pty : pty - ptx;
  if (d == 0) fail(ErrorKind::not_independent, "equal chain points");
  const long p0 = ((ptx % d) + d) % d;
  gen.step = d;
  gen.alpha = chain_root(gen.max, ChainSide::alpha, p0);
  gen.beta = chain_root(gen.max, ChainSide::beta, d - p0 - 1);
  return gen;
}

}  // namespace coxdom
