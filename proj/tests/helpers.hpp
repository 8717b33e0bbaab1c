#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "coxdom/coxdom.hpp"

namespace coxtest {

// Datum texts used across the suites.
inline constexpr const char* kAtilde1 = "rank 2\nbond 1 2 inf\n";
inline constexpr const char* kA2 = "rank 2\nbond 1 2 3\n";
inline constexpr const char* kB2 = "rank 2\nbond 1 2 4\n";
inline constexpr const char* kI25 = "rank 2\nbond 1 2 5\n";
inline constexpr const char* kG2 = "rank 2\nbond 1 2 6\n";
inline constexpr const char* kAtilde2 =
    "rank 3\nbond 1 2 3\nbond 1 3 3\nbond 2 3 3\n";
inline constexpr const char* kTri337 =
    "rank 3\nbond 1 2 3\nbond 1 3 3\nbond 2 3 7\n";

template <class F>
coxdom::ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const coxdom::Error& e) {
    return e.kind();
  }
  FAIL("expected a coxdom::Error");
  return coxdom::ErrorKind::internal;
}

// Shorthand for float-backend coefficient vectors.
inline coxdom::Vec<coxdom::Tol> tv(std::initializer_list<double> cs) {
  coxdom::Vec<coxdom::Tol> v;
  for (double c : cs) v.push_back(coxdom::Tol(c));
  return v;
}

inline coxdom::Vec<coxdom::Rat> rv(std::initializer_list<long long> cs) {
  coxdom::Vec<coxdom::Rat> v;
  for (long long c : cs) v.push_back(coxdom::Rat::from_int(c));
  return v;
}

}  // namespace coxtest
