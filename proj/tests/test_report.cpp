#include "helpers.hpp"

using namespace coxdom;
using namespace coxtest;

TEST_CASE("the dossier aggregates every section") {
  auto d = load_datum<Tol>(kAtilde1);
  ReportBounds b;
  b.depth = 8;
  b.n_max = 2;
  Json rep = report_all(d, b);
  CHECK(rep["backend"] == "float");
  CHECK(rep["roots"]["count"] == 16);
  CHECK(rep["dominance"]["sets"]["D0"].size() == 2);
  CHECK(rep["dominance"]["complete_up_to"] == 2);
  CHECK(rep["reflections"]["sets"]["T1"].size() == 2);
  CHECK(rep["height_identities"]["ok"] == true);
  CHECK(rep["cone_identities"]["ok"] == true);
  CHECK(rep["datum"]["fingerprint"] == d.fingerprint());
}

TEST_CASE("finite groups report exhaustion and empty dominance") {
  auto d = load_datum<Tol>(kA2);
  ReportBounds b;
  b.depth = 6;
  b.n_max = 1;
  Json rep = report_all(d, b);
  CHECK(rep["roots"]["count"] == 3);
  CHECK(rep["roots"]["complete"] == true);
  CHECK(rep["dominance"]["sets"]["D0"].size() == 3);
  CHECK(rep["dominance"]["sets"]["D1"].empty());
  CHECK(rep["cone_identities"]["dominated_pairs"] == 0);
}

TEST_CASE("dossiers are byte-identical across runs and thread counts") {
  auto d = load_datum<Tol>(kAtilde2);
  ReportBounds b;
  b.depth = 6;
  b.n_max = 1;
  std::vector<std::string> dumps;
  for (unsigned threads : {1u, 8u, 1u, 8u}) {
    ReportBounds bt = b;
    bt.threads = threads;
    dumps.push_back(report_all(d, bt).dump());
  }
  for (const auto& dump : dumps) CHECK(dump == dumps.front());
}

TEST_CASE("rational and float dossiers agree on the combinatorics") {
  ReportBounds b;
  b.depth = 6;
  b.n_max = 1;
  Json f = report_all(load_datum<Tol>(kAtilde2), b);
  Json r = report_all(load_datum<Rat>(kAtilde2), b);
  CHECK(f["roots"]["count"] == r["roots"]["count"]);
  CHECK(f["dominance"]["sets"]["D0"].size() ==
        r["dominance"]["sets"]["D0"].size());
  CHECK(r["backend"] == "rational");
  CHECK(r["height_identities"]["ok"] == true);
  CHECK(r["cone_identities"]["ok"] == true);
}
