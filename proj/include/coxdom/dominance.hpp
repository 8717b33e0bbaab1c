#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxdom/error.hpp"
#include "coxdom/parallel.hpp"
#include "coxdom/rootstore.hpp"

namespace coxdom {

/*
  Dominance: x dominates y when every group element sending x negative
  also sends y negative.  For a pair of positive roots this is decided by
  the pairing/depth test ((x,y) >= 1 and dep(x) >= dep(y)); the remaining
  sign combinations reduce to it:

    x+ y+ : (x,y) >= 1 and dep(x) >= dep(y)
    x+ y- : (x,y) >= 1            (the identity kills the other direction)
    x- y+ : never
    x- y- : dominates(-y, -x)     (negation duality)
*/

enum class DomReason {
  positive,                // holds
  inner_product_below_1,   // fails: (x,y) < 1
  depth_order,             // fails: (x,y) >= 1 but dep(x) < dep(y)
  sign_rule,               // fails: x negative, y positive
};

inline const char* dom_reason_name(DomReason r) {
  switch (r) {
    case DomReason::positive: return "positive";
    case DomReason::inner_product_below_1: return "inner-product-below-1";
    case DomReason::depth_order: return "depth-order";
    case DomReason::sign_rule: return "sign-rule";
  }
  return "?";
}

struct DominanceVerdict {
  bool holds = false;
  DomReason reason = DomReason::positive;
};

template <class S>
DominanceVerdict dominates(const RootStore<S>& store, const Vec<S>& x,
                           const Vec<S>& y) {
  const SignedRoot sx = classify_root(store, x);
  const SignedRoot sy = classify_root(store, y);
  const S form = store.datum().bilinear(x, y);
  if (!sx.negative && !sy.negative) {
    if (sc_lt(form, S::one()))
      return {false, DomReason::inner_product_below_1};
    if (store.depth_of(sx.id) < store.depth_of(sy.id))
      return {false, DomReason::depth_order};
    return {true, DomReason::positive};
  }
  if (!sx.negative && sy.negative) {
    if (sc_lt(form, S::one()))
      return {false, DomReason::inner_product_below_1};
    return {true, DomReason::positive};
  }
  if (sx.negative && !sy.negative) return {false, DomReason::sign_rule};
  // both negative: x dom y  <=>  -y dom -x
  return dominates(store, vec_neg(y), vec_neg(x));
}

/*
  D(x) = { y in Phi^+ : y != x, x dom y }.  Every dominated root has depth
  at most dep(x), so the scan over the store is exhaustive, not truncated.
  Results are cached on the store.
*/
template <class S>
const std::vector<RootId>& dominated_set(RootStore<S>& store, RootId x) {
  if (const auto* cached = store.cached_dominated(x)) return *cached;
  const Root<S>& rx = store.root(x);
  if (store.max_depth() < rx.depth && !store.exhausted())
    fail(ErrorKind::insufficient_depth, "store shallower than dep(x)");
  std::vector<RootId> out;
  const S one = S::one();
  for (RootId y : store.roots_up_to(rx.depth)) {
    if (y == x) continue;
    if (sc_ge(store.datum().bilinear(rx.coeffs, store.root(y).coeffs), one))
      out.push_back(y);
  }
  store.cache_dominated(x, std::move(out));
  return *store.cached_dominated(x);
}

template <class S>
bool is_elementary(RootStore<S>& store, RootId x) {
  return dominated_set(store, x).empty();
}

struct DnReport {
  std::map<int, std::vector<RootId>> sets;  // n -> D_n (only n <= n_max)
  int complete_up_to = -1;                  // certified for all n <= this
  int depth_scanned = 0;
  bool exhausted = false;                   // finite group, whole system seen
  std::vector<std::string> caveats;
};

/*
  Level-synchronized sweep for the partition (D_n).  After committing a
  level, #D is computed for each new root against the already-committed
  store.  Termination: if a full level has min #D > n_max, every deeper
  level does too, because a BFS edge x -> r_a x (depth increasing) has
  (x, alpha_a) < 0, hence alpha_a is not in D(x), hence y -> r_a y injects
  D(x) into D(r_a x); so #D never drops along BFS edges and a qualifying
  level exists because each D_m is finite.  (Property-tested against the
  brute-force scan.)
*/
template <class S>
DnReport enumerate_Dn(RootStore<S>& store, int n_max) {
  if (n_max < 0) fail(ErrorKind::parse_error, "n_max must be >= 0");
  DnReport rep;
  int d = 0;
  for (;;) {
    ++d;
    store.ensure_depth(d);
    if (store.max_depth() < d) {
      // enumeration exhausted: the whole finite system has been classified
      rep.exhausted = true;
      rep.depth_scanned = store.max_depth();
      rep.complete_up_to = n_max;
      return rep;
    }
    const auto& level = store.level(d);
    // #D for the new roots (pure scans over the committed store).
    std::vector<std::vector<RootId>> dsets(level.size());
    parallel_for(level.size(), store.threads(), [&](std::size_t i) {
      const Root<S>& rx = store.root(level[i]);
      const S one = S::one();
      for (RootId y : store.roots_up_to(rx.depth)) {
        if (y == level[i]) continue;
        if (sc_ge(store.datum().bilinear(rx.coeffs, store.root(y).coeffs), one))
          dsets[i].push_back(y);
      }
    });
    std::size_t level_min = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const std::size_t count = dsets[i].size();
      level_min = std::min(level_min, count);
      store.cache_dominated(level[i], std::move(dsets[i]));
      if (count <= static_cast<std::size_t>(n_max))
        rep.sets[static_cast<int>(count)].push_back(level[i]);
    }
    rep.depth_scanned = d;
    if (level_min > static_cast<std::size_t>(n_max)) {
      rep.complete_up_to = n_max;
      return rep;
    }
  }
}

}  // namespace coxdom
