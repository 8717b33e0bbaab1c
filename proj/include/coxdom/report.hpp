#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "coxdom/cone.hpp"
#include "coxdom/cover.hpp"
#include "coxdom/datum.hpp"
#include "coxdom/dihedral.hpp"
#include "coxdom/dominance.hpp"
#include "coxdom/height.hpp"
#include "coxdom/rootstore.hpp"

namespace coxdom {

// All report output uses ordered JSON with string-formatted scalars so a
// document is byte-identical for fixed inputs, backend, and bounds,
// regardless of the thread count.
using Json = nlohmann::ordered_json;

struct ReportBounds {
  int depth = 10;   // enumeration depth
  int n_max = 3;    // D_n / T_n classification bound
  unsigned threads = 1;
};

template <class S>
Json json_root(const RootStore<S>& store, RootId id) {
  Json j;
  j["coeffs"] = vec_str(store.root(id).coeffs);
  j["depth"] = store.root(id).depth;
  return j;
}

template <class S>
Json json_subsystem(const DihedralSubsystem<S>& sub) {
  Json j;
  j["alpha"] = vec_str(sub.alpha);
  j["beta"] = vec_str(sub.beta);
  j["kind"] = sub.infinite ? "infinite" : ("finite(" + std::to_string(sub.m) + ")");
  if (sub.infinite) j["cosh_theta"] = sub.cosh_theta.str();
  j["certified"] = sub.certified;
  return j;
}

template <class S>
Json json_datum(const CoxeterDatum<S>& d) {
  Json j;
  j["rank"] = d.rank();
  Json bonds = Json::array();
  for (const auto& [pair, m] : d.bonds()) {
    Json b;
    b["i"] = pair.first + 1;
    b["j"] = pair.second + 1;
    b["m"] = (m == kInfiniteBond) ? Json("inf") : Json(m);
    if (m == kInfiniteBond) b["value"] = d.gram().at(pair.first, pair.second).str();
    bonds.push_back(std::move(b));
  }
  j["bonds"] = std::move(bonds);
  j["fingerprint"] = d.fingerprint();
  return j;
}

/*
  The verification dossier: enumerates roots, classifies D_n / T_n, and
  runs the height and cone identity sweeps, aggregating results and every
  caveat into a single document.
*/
template <class S>
Json report_all(const CoxeterDatum<S>& datum, const ReportBounds& bounds) {
  typename RootStore<S>::Options opts;
  opts.threads = bounds.threads;
  RootStore<S> store(datum, opts);
  std::vector<std::string> caveats;

  Json rep;
  rep["command"] = "report";
  rep["schema"] = 1;
  rep["backend"] = S::backend_name();
  rep["datum"] = json_datum(datum);
  rep["bounds"] = Json{{"depth", bounds.depth}, {"n", bounds.n_max}};

  store.ensure_depth(bounds.depth);
  {
    Json roots;
    roots["count"] = store.size();
    roots["complete"] = store.exhausted();
    Json levels = Json::array();
    for (int d = 1; d <= store.max_depth(); ++d) {
      Json level = Json::array();
      for (RootId id : store.level(d)) level.push_back(vec_str(store.root(id).coeffs));
      levels.push_back(std::move(level));
    }
    roots["levels"] = std::move(levels);
    rep["roots"] = std::move(roots);
  }

  {
    DnReport dn = enumerate_Dn(store, bounds.n_max);
    Json j;
    j["complete_up_to"] = dn.complete_up_to;
    j["depth_scanned"] = dn.depth_scanned;
    j["exhausted"] = dn.exhausted;
    Json sets;
    for (int n = 0; n <= bounds.n_max; ++n) {
      Json set = Json::array();
      if (dn.sets.count(n))
        for (RootId id : dn.sets.at(n)) set.push_back(vec_str(store.root(id).coeffs));
      sets["D" + std::to_string(n)] = std::move(set);
    }
    j["sets"] = std::move(sets);
    rep["dominance"] = std::move(j);
    for (const auto& c : dn.caveats) caveats.push_back(c);
  }

  {
    // T_n mirrors D_n; report reflections as root plus reduced word.
    TnReport tn = enumerate_Tn(store, bounds.n_max);
    Json sets;
    for (int n = 0; n <= bounds.n_max; ++n) {
      Json set = Json::array();
      if (tn.sets.count(n)) {
        for (RootId id : tn.sets.at(n)) {
          Json t;
          t["root"] = vec_str(store.root(id).coeffs);
          t["word"] = reflection_word(store, id).word_str();
          set.push_back(std::move(t));
        }
      }
      sets["T" + std::to_string(n)] = std::move(set);
    }
    Json j;
    j["complete_up_to"] = tn.complete_up_to;
    j["sets"] = std::move(sets);
    rep["reflections"] = std::move(j);
  }

  {
    const int len = 2 * std::min(bounds.depth, 6) - 1;
    HeightIdentityReport h = verify_height_identities(store, len, bounds.n_max);
    Json j;
    j["reflections_checked"] = h.reflections_checked;
    j["height_sum_checks"] = h.height_sum_checks;
    j["tn_bounds_checked"] = h.tn_bounds_checked;
    j["conjugation_decompositions"] = h.conjugation_decompositions;
    j["ok"] = h.ok();
    j["failures"] = h.failures;
    rep["height_identities"] = std::move(j);
    if (h.window_widened) caveats.push_back("height sum window was widened");
  }

  {
    ConeCheckReport c = verify_cone_identities(store, std::min(bounds.depth, 6),
                                               std::min(bounds.n_max + 2, 4));
    Json j;
    j["dominated_pairs"] = c.dominated_pairs;
    j["rejected_pairs"] = c.rejected_pairs;
    j["stability_samples"] = c.l5_samples;
    j["ok"] = c.ok();
    j["failures"] = c.failures;
    rep["cone_identities"] = std::move(j);
  }

  rep["caveats"] = caveats;
  return rep;
}

}  // namespace coxdom
