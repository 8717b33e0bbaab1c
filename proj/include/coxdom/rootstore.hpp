#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxdom/datum.hpp"
#include "coxdom/element.hpp"
#include "coxdom/error.hpp"
#include "coxdom/linalg.hpp"
#include "coxdom/parallel.hpp"

namespace coxdom {

using RootId = std::size_t;

template <class S>
struct Root {
  Vec<S> coeffs;
  int depth = 0;  // BFS level, 1 = simple roots
  RootId id = 0;
};

/*
  Depth-stratified store of positive roots, built breadth first:

    level 1      = the simple roots;
    level d+1    = { rho_a x : x in level d, (x, alpha_a) < 0 },
                   deduplicated against everything shallower.

  The level rule is exactly the depth recursion for simple reflections,
  so the BFS level of a root is its depth.  Levels are committed in a
  deterministic order (new roots sorted by coefficient key), and per-root
  work inside a level may run on several threads; results are merged in
  index order so the store is identical for any thread count.
*/
template <class S>
class RootStore {
 public:
  struct Options {
    std::size_t max_roots = 100000;  // CapExceeded beyond this
    unsigned threads = 1;
  };

  explicit RootStore(const CoxeterDatum<S>& datum, Options opts = {})
      : datum_(&datum), opts_(opts) {
    std::vector<RootId> level1;
    for (unsigned a = 0; a < datum.rank(); ++a) {
      Root<S> r;
      r.coeffs = basis_vector<S>(datum.rank(), a);
      r.depth = 1;
      r.id = roots_.size();
      index_.emplace(vec_key(r.coeffs), r.id);
      level1.push_back(r.id);
      roots_.push_back(std::move(r));
    }
    levels_.push_back(std::move(level1));
  }

  const CoxeterDatum<S>& datum() const { return *datum_; }
  const Options& options() const { return opts_; }
  unsigned threads() const { return opts_.threads; }

  std::size_t size() const { return roots_.size(); }
  int max_depth() const { return static_cast<int>(levels_.size()); }

  // True once a level came out empty: the positive system is finite and
  // fully enumerated.
  bool exhausted() const { return exhausted_; }

  const Root<S>& root(RootId id) const {
    if (id >= roots_.size()) fail(ErrorKind::unknown_root, "root id out of range");
    return roots_[id];
  }

  const std::vector<RootId>& level(int d) const {
    if (d < 1 || d > max_depth())
      fail(ErrorKind::insufficient_depth,
           "level " + std::to_string(d) + " not enumerated");
    return levels_[static_cast<std::size_t>(d - 1)];
  }

  std::optional<RootId> find(const Vec<S>& coeffs) const {
    if (coeffs.size() != datum_->rank()) return std::nullopt;
    auto it = index_.find(vec_key(coeffs));
    if (it != index_.end()) return it->second;
    // vectors produced by other computation paths can round to a
    // neighbouring key; fall back to a tolerance scan
    for (const auto& r : roots_)
      if (vec_eq(r.coeffs, coeffs)) return r.id;
    return std::nullopt;
  }

  // Id of a positive root known to the store; UnknownRoot otherwise.
  RootId require(const Vec<S>& coeffs) const {
    auto id = find(coeffs);
    if (!id)
      fail(ErrorKind::unknown_root,
           "(" + vec_str(coeffs) + ") is not an enumerated positive root");
    return *id;
  }

  int depth_of(RootId id) const { return root(id).depth; }

  RootId simple_root(unsigned a) const {
    if (a >= datum_->rank()) fail(ErrorKind::index_out_of_range, "generator index");
    return static_cast<RootId>(a);
  }

  // Enumerates levels 1..d_max (stops early if the system is finite).
  void ensure_depth(int d_max) {
    while (max_depth() < d_max && !exhausted_) grow_one_level();
  }

  // Ids of all roots of depth <= d, in id order.
  std::vector<RootId> roots_up_to(int d) const {
    std::vector<RootId> out;
    for (const auto& r : roots_) {
      if (r.depth <= d) out.push_back(r.id);
    }
    return out;
  }

  // Dominated-set cache, filled by the dominance module.
  const std::vector<RootId>* cached_dominated(RootId id) const {
    auto it = dominated_.find(id);
    return it == dominated_.end() ? nullptr : &it->second;
  }
  void cache_dominated(RootId id, std::vector<RootId> set) {
    dominated_[id] = std::move(set);
  }

 private:
  void grow_one_level() {
    const auto& parents = levels_.back();
    const unsigned rank = static_cast<unsigned>(datum_->rank());
    // Children are generated per parent (parallelizable, pure), then
    // merged in parent/generator order and committed sorted by key.
    std::vector<std::vector<std::pair<KeyVec<S>, Vec<S>>>> slots(parents.size());
    parallel_for(parents.size(), opts_.threads, [&](std::size_t p) {
      const Vec<S>& x = roots_[parents[p]].coeffs;
      for (unsigned a = 0; a < rank; ++a) {
        if (sign_of(datum_->pair_with_simple(x, a)) >= 0) continue;
        Vec<S> child = datum_->reflect_simple(a, x);
        slots[p].emplace_back(vec_key(child), std::move(child));
      }
    });
    std::map<KeyVec<S>, Vec<S>> fresh;
    for (auto& slot : slots) {
      for (auto& [key, vec] : slot) {
        if (index_.count(key)) continue;
        if (fresh.count(key)) continue;
        // key misses can still be duplicates arriving with different
        // rounding noise; settle them by tolerance comparison
        bool dup = false;
        for (const auto& r : roots_)
          if (vec_eq(r.coeffs, vec)) { dup = true; break; }
        for (auto it = fresh.begin(); it != fresh.end() && !dup; ++it)
          if (vec_eq(it->second, vec)) dup = true;
        if (dup) continue;
        fresh.emplace(std::move(key), std::move(vec));
      }
    }
    std::vector<RootId> level;
    const int depth = max_depth() + 1;
    for (auto& [key, vec] : fresh) {
      if (roots_.size() >= opts_.max_roots)
        fail(ErrorKind::cap_exceeded,
             "root cap (" + std::to_string(opts_.max_roots) + ") exceeded");
      Root<S> r;
      r.coeffs = std::move(vec);
      r.depth = depth;
      r.id = roots_.size();
      index_.emplace(key, r.id);
      level.push_back(r.id);
      roots_.push_back(std::move(r));
    }
    if (level.empty()) {
      exhausted_ = true;
      return;
    }
    levels_.push_back(std::move(level));
  }

  const CoxeterDatum<S>* datum_;
  Options opts_;
  // deques/maps: references into the store stay valid while it grows
  std::deque<Root<S>> roots_;
  std::deque<std::vector<RootId>> levels_;
  std::map<KeyVec<S>, RootId> index_;
  bool exhausted_ = false;
  std::map<RootId, std::vector<RootId>> dominated_;
};

// Classification of an arbitrary coefficient vector against the store.
// Roots handed to the CLI may be negated; mixed-sign vectors are rejected.
struct SignedRoot {
  RootId id;       // the positive representative
  bool negative;   // true if the input was the negated root
};

template <class S>
SignedRoot classify_root(const RootStore<S>& store, const Vec<S>& v) {
  switch (vec_sign(v)) {
    case VecSign::positive:
      return {store.require(v), false};
    case VecSign::negative:
      return {store.require(vec_neg(v)), true};
    default:
      fail(ErrorKind::unknown_root,
           "(" + vec_str(v) + ") has mixed or zero sign and is not a root");
  }
}

// Locates a positive root, growing the store if necessary (bounded).
template <class S>
RootId ensure_root(RootStore<S>& store, Vec<S> v,
                   int extra_depth_cap = 64) {
  if (auto id = store.find(v)) return *id;
  if (vec_sign(v) != VecSign::positive)
    fail(ErrorKind::unknown_root, "(" + vec_str(v) + ") is not a positive root");
  for (int k = 0; k < extra_depth_cap && !store.exhausted(); ++k) {
    store.ensure_depth(store.max_depth() + 1);
    if (auto id = store.find(v)) return *id;
  }
  fail(ErrorKind::unknown_root,
       "(" + vec_str(v) + ") was not reached by enumeration");
}

/*
  r_x as a palindromic reduced word w a w^{-1}: follow a depth-decreasing
  path from x to a simple root (any generator with (x, alpha_a) > 0 steps
  one level down), so the word has length 2 dep(x) - 1.
*/
template <class S>
GroupElement<S> reflection_word_for(const CoxeterDatum<S>& d, Vec<S> x) {
  if (vec_sign(x) != VecSign::positive)
    fail(ErrorKind::unknown_root, "reflection word requires a positive root");
  std::vector<unsigned> prefix;
  // Descend until simple.  Guard against non-root input: depth paths of a
  // root of depth k take exactly k-1 steps, so anything that fails to
  // reach a simple root within a generous bound is not a root.
  const std::size_t guard = 4 * d.rank() * 64 + 64;
  for (std::size_t step = 0; step <= guard; ++step) {
    // simple?
    std::optional<unsigned> simple;
    bool is_simple = false;
    for (unsigned a = 0; a < d.rank() && !is_simple; ++a) {
      Vec<S> e = basis_vector<S>(d.rank(), a);
      if (vec_eq(x, e)) {
        is_simple = true;
        simple = a;
      }
    }
    if (is_simple) {
      std::vector<unsigned> word(prefix);
      word.push_back(*simple);
      word.insert(word.end(), prefix.rbegin(), prefix.rend());
      return reduce_word(d, word);
    }
    std::optional<unsigned> down;
    for (unsigned a = 0; a < d.rank(); ++a) {
      if (sign_of(d.pair_with_simple(x, a)) > 0) {
        down = a;
        break;
      }
    }
    if (!down)
      fail(ErrorKind::unknown_root,
           "(" + vec_str(x) + ") admits no depth descent; not a positive root");
    prefix.push_back(*down);
    x = d.reflect_simple(*down, x);
    if (vec_sign(x) != VecSign::positive)
      fail(ErrorKind::unknown_root, "descent left the positive cone; not a root");
  }
  fail(ErrorKind::unknown_root, "descent did not terminate; not a root");
}

template <class S>
GroupElement<S> reflection_word(const RootStore<S>& store, RootId id) {
  return reflection_word_for(store.datum(), store.root(id).coeffs);
}

/*
  N(g) = { x in Phi^+ : g x in Phi^- }.  Every inversion of g has depth at
  most l(g), so the store must be enumerated at least that deep (or be
  complete).  #N(g) = l(g).
*/
template <class S>
std::vector<RootId> inversion_set(const RootStore<S>& store,
                                  const GroupElement<S>& g) {
  const int need = static_cast<int>(g.length());
  if (store.max_depth() < need && !store.exhausted())
    fail(ErrorKind::insufficient_depth,
         "inversion set needs depth " + std::to_string(need) +
             ", store has " + std::to_string(store.max_depth()));
  std::vector<RootId> out;
  for (RootId id : store.roots_up_to(std::min(need, store.max_depth()))) {
    Vec<S> image = g.apply(store.root(id).coeffs);
    if (vec_sign(image) == VecSign::negative) out.push_back(id);
  }
  return out;
}

}  // namespace coxdom
