#pragma once

#include <optional>
#include <string>
#include <utility>

#include "coxdom/cone.hpp"
#include "coxdom/dominance.hpp"
#include "coxdom/error.hpp"
#include "coxdom/rootstore.hpp"

namespace coxdom {

template <class S>
struct CoverResult {
  bool is_cover = false;
  std::optional<GroupElement<S>> witness;  // maps x into D0 and y into -D0
  std::optional<Vec<S>> between;           // strictly-between certificate
};

/*
  Cover detection for a dominated pair: x covers y exactly when some w
  sends x into the elementary set and y into its negative.  The key
  witness w decides this outright: if wx or -wy dominates some z, then
  w^{-1}z (resp. w^{-1}(-z)) lies strictly between x and y, because the
  witness pairing property turns (wx, z) >= 1 into (wy, z) >= 1 and vice
  versa.  So the answer is exact and always carries a certificate: the
  witness for a cover, a between root for a non-cover.
*/
template <class S>
CoverResult<S> dominance_cover(RootStore<S>& store, Vec<S> x, Vec<S> y) {
  if (vec_eq(x, y)) fail(ErrorKind::not_dominant, "cover requires x != y");
  if (!dominates(store, x, y).holds)
    fail(ErrorKind::not_dominant, "cover requires x dom y");
  GroupElement<S> w = key_witness(store, x, y);
  const Vec<S> wx = w.apply(x);
  const Vec<S> wy = w.apply(y);
  const RootId a = ensure_root(store, wx);
  const RootId b = ensure_root(store, vec_neg(wy));
  const GroupElement<S> winv = w.inverse(store.datum());

  CoverResult<S> res;
  const auto& da = dominated_set(store, a);
  if (!da.empty()) {
    res.is_cover = false;
    res.between = winv.apply(store.root(da.front()).coeffs);
    return res;
  }
  const auto& db = dominated_set(store, b);
  if (!db.empty()) {
    res.is_cover = false;
    res.between = winv.apply(vec_neg(store.root(db.front()).coeffs));
    return res;
  }
  res.is_cover = true;
  res.witness = std::move(w);
  return res;
}

}  // namespace coxdom
