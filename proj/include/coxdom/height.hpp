#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxdom/dihedral.hpp"
#include "coxdom/dominance.hpp"
#include "coxdom/error.hpp"
#include "coxdom/rootstore.hpp"

namespace coxdom {

// Standard height of the reflection with positive root x:
// h(t) = dep(alpha_t) - 1 = (l(t) - 1)/2.
template <class S>
int standard_height(RootStore<S>& store, Vec<S> x) {
  const SignedRoot sx = classify_root(store, x);
  return store.depth_of(sx.id) - 1;
}

template <class S>
struct SubsystemHeight {
  DihedralSubsystem<S> subsystem;
  int height = 0;
};

template <class S>
struct HeightReport {
  RootId reflection_root = 0;
  int standard = 0;
  int infinity_via_dominance = 0;
  int infinity_via_decomposition = 0;
  bool methods_agree = false;
  std::vector<SubsystemHeight<S>> per_subsystem;  // decomposition route
  std::vector<std::string> caveats;
};

/*
  Infinity height by both routes.  The dominance route counts D(alpha_t),
  which is exact: dominated roots are never deeper than alpha_t.  The
  decomposition route sums the chain positions of alpha_t over the
  infinite maximal dihedral subgroups through it; a window of depth
  dep(alpha_t) sees every subgroup that contributes, because a positive
  contribution forces a dominated (hence shallower) root in the plane.
*/
template <class S>
HeightReport<S> infinity_height(RootStore<S>& store, Vec<S> x) {
  const SignedRoot sx = classify_root(store, x);
  const Vec<S> px = store.root(sx.id).coeffs;
  HeightReport<S> rep;
  rep.reflection_root = sx.id;
  rep.standard = store.depth_of(sx.id) - 1;
  rep.infinity_via_dominance =
      static_cast<int>(dominated_set(store, sx.id).size());

  Decomposition<S> dec =
      decompose_reflections(store, px, store.depth_of(sx.id));
  if (!dec.partition_ok)
    rep.caveats.push_back("decomposition window failed the partition check");
  int sum = 0;
  for (auto& sub : dec.subsystems) {
    if (!sub.certified) {
      rep.caveats.push_back("uncertified subsystem in decomposition");
      continue;
    }
    const int h = subsystem_height(sub, px);
    if (sub.infinite) sum += h;
    rep.per_subsystem.push_back({std::move(sub), h});
  }
  rep.infinity_via_decomposition = sum;
  rep.methods_agree =
      rep.infinity_via_dominance == rep.infinity_via_decomposition;
  return rep;
}

struct TnReport {
  std::map<int, std::vector<RootId>> sets;  // n -> roots alpha_t with h^inf(t) = n
  int complete_up_to = -1;
  int depth_scanned = 0;
  bool exhausted = false;
  std::vector<std::string> caveats;
};

// T_n corresponds to D_n under t <-> alpha_t, so the enumeration and its
// completeness certificate are inherited from the dominance sweep.
template <class S>
TnReport enumerate_Tn(RootStore<S>& store, int n_max) {
  DnReport dn = enumerate_Dn(store, n_max);
  TnReport rep;
  rep.sets = std::move(dn.sets);
  rep.complete_up_to = dn.complete_up_to;
  rep.depth_scanned = dn.depth_scanned;
  rep.exhausted = dn.exhausted;
  rep.caveats = std::move(dn.caveats);
  return rep;
}

struct HeightIdentityReport {
  std::size_t reflections_checked = 0;
  std::size_t height_sum_checks = 0;
  bool tn_bounds_checked = false;  // skipped for finite groups
  std::size_t conjugation_decompositions = 0;
  std::map<int, std::size_t> tn_sizes;
  bool window_widened = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/*
  h(t) equals the sum of the subsystem heights of t over its maximal
  dihedral subgroups.  The inversions of t all have depth at most l(t), and
  they partition across the subgroups through t; a plane meeting no
  inversion has subsystem length 1 and contributes nothing, so only planes
  holding an inversion are built, and their contributions come from the
  structural route (chain or orbit position of alpha_t).  If a plane fails
  to certify from the l(t) window, the widening collector takes over.
*/
template <class S>
HeightIdentityReport verify_height_sums(RootStore<S>& store,
                                        int max_reflection_length) {
  HeightIdentityReport rep;
  const CoxeterDatum<S>& d = store.datum();
  const int max_depth = (max_reflection_length + 1) / 2;
  store.ensure_depth(max_depth);
  const int window_roots = std::min(max_depth, store.max_depth());

  for (RootId id : store.roots_up_to(window_roots)) {
    ++rep.reflections_checked;
    const Vec<S> x = store.root(id).coeffs;  // copy: the store may grow
    const int h = store.depth_of(id) - 1;
    const int window = 2 * store.depth_of(id) - 1;
    store.ensure_depth(window);
    const Mat<S> t_matrix = d.reflection_matrix_in(x);

    // Inversions of t other than alpha_t, grouped by plane through x.
    std::vector<Vec<S>> plane_reps;
    std::vector<PlaneTest<S>> testers;
    const auto window_ids = store.roots_up_to(std::min(window, store.max_depth()));
    for (RootId rid : window_ids) {
      if (rid == id) continue;
      const Vec<S>& z = store.root(rid).coeffs;
      if (vec_sign(t_matrix.apply(z)) != VecSign::negative) continue;
      bool assigned = false;
      for (const auto& tester : testers)
        if (tester.coords(z)) { assigned = true; break; }
      if (!assigned) {
        plane_reps.push_back(z);
        testers.emplace_back(x, z);
      }
    }

    int sum = 0;
    bool certified = true;
    for (std::size_t p = 0; p < plane_reps.size() && certified; ++p) {
      std::vector<Vec<S>> plane = {x};
      for (RootId rid : window_ids) {
        if (rid == id) continue;
        const Vec<S>& z = store.root(rid).coeffs;
        if (testers[p].coords(z)) plane.push_back(z);
      }
      DihedralSubsystem<S> sub;
      sub.plane_x = x;
      sub.plane_y = plane_reps[p];
      if (!detail::build_from_plane_roots(d, plane, sub)) {
        sub = maximal_dihedral(store, x, plane_reps[p]);
        rep.window_widened = true;
        if (!sub.certified) {
          certified = false;
          break;
        }
      }
      sum += subsystem_height(sub, x);
    }

    if (certified && sum == h) {
      ++rep.height_sum_checks;
    } else if (certified) {
      rep.failures.push_back("height sum " + std::to_string(sum) +
                             " != " + std::to_string(h) + " for (" +
                             vec_str(x) + ")");
    } else {
      rep.failures.push_back("uncertifiable plane through (" + vec_str(x) +
                             ")");
    }
  }
  return rep;
}

/*
  Combinatorics of the T_n partition: for infinite groups the sizes obey
  0 < #T_n <= (#T_0)^{n+1} - (#T_0)^n, and every T_n element with n >= 1
  factors as t0 t' t0 with t0 of height zero and t' of strictly smaller
  infinity height.  Elements are compared through their matrices.
*/
template <class S>
HeightIdentityReport verify_tn_combinatorics(RootStore<S>& store, int n_max) {
  HeightIdentityReport rep;
  const CoxeterDatum<S>& d = store.datum();
  TnReport tn = enumerate_Tn(store, n_max);
  for (const auto& [n, set] : tn.sets)
    rep.tn_sizes[n] = set.size();
  if (!tn.exhausted) {
    rep.tn_bounds_checked = true;
    const unsigned long long t0 = rep.tn_sizes.count(0) ? rep.tn_sizes[0] : 0;
    if (t0 == 0) rep.failures.push_back("T_0 is empty");
    unsigned long long power = t0;  // t0^n
    for (int n = 1; n <= n_max && t0 > 0; ++n) {
      const unsigned long long bound = power * t0 - power;  // t0^{n+1} - t0^n
      const unsigned long long size =
          rep.tn_sizes.count(n) ? rep.tn_sizes[n] : 0;
      if (size == 0)
        rep.failures.push_back("T_" + std::to_string(n) + " is empty");
      if (size > bound)
        rep.failures.push_back("T_" + std::to_string(n) + " exceeds its bound");
      power *= t0;
    }
  }

  std::map<int, std::vector<Mat<S>>> mats;
  for (const auto& [n, set] : tn.sets)
    for (RootId id : set)
      mats[n].push_back(d.reflection_matrix_in(store.root(id).coeffs));
  for (const auto& [n, set] : tn.sets) {
    if (n == 0) continue;
    for (std::size_t i = 0; i < set.size(); ++i) {
      const Mat<S>& target = mats[n][i];
      bool found = false;
      for (const Mat<S>& t0 : mats[0]) {
        for (int m = 0; m < n && !found; ++m) {
          if (!mats.count(m)) continue;
          for (const Mat<S>& tp : mats[m]) {
            if (mat_eq(t0 * tp * t0, target)) {
              found = true;
              break;
            }
          }
        }
        if (found) break;
      }
      if (found) {
        ++rep.conjugation_decompositions;
      } else {
        rep.failures.push_back(
            "no t0 t' t0 decomposition for a T_" + std::to_string(n) +
            " element (" + vec_str(store.root(set[i]).coeffs) + ")");
      }
    }
  }
  return rep;
}

// Full identity sweep: height sums plus T_n combinatorics, merged.
template <class S>
HeightIdentityReport verify_height_identities(RootStore<S>& store,
                                              int max_reflection_length,
                                              int n_max) {
  HeightIdentityReport rep = verify_height_sums(store, max_reflection_length);
  HeightIdentityReport tn = verify_tn_combinatorics(store, n_max);
  rep.tn_bounds_checked = tn.tn_bounds_checked;
  rep.conjugation_decompositions = tn.conjugation_decompositions;
  rep.tn_sizes = std::move(tn.tn_sizes);
  for (auto& f : tn.failures) rep.failures.push_back(std::move(f));
  return rep;
}

}  // namespace coxdom
