#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxdom/error.hpp"
#include "coxdom/linalg.hpp"
#include "coxdom/scalar.hpp"

namespace coxdom {

// Bond label sentinel: m_ab = infinity.
inline constexpr unsigned kInfiniteBond = 0;

template <class S>
struct BondSpec {
  unsigned i = 0, j = 0;        // 0-based generator indices, i != j
  unsigned m = 2;               // >= 2, or kInfiniteBond
  std::optional<S> value;       // Gram entry for infinite bonds, <= -1
};

/*
  A Coxeter datum in the coordinate model: the simple roots are the
  standard basis of R^rank and the bilinear form is given by the Gram
  matrix.  Because the basis is linearly independent by construction,
  condition (C2) holds automatically and canonical coefficients are
  literal vector entries.

  Immutable after construction; reflection matrices are precomputed.
*/
template <class S>
class CoxeterDatum {
 public:
  static CoxeterDatum from_bonds(std::size_t rank,
                                 const std::vector<BondSpec<S>>& bonds) {
    if (rank == 0) fail(ErrorKind::parse_error, "rank must be positive");
    CoxeterDatum d;
    d.rank_ = rank;
    d.gram_ = Mat<S>::identity(rank);
    for (const auto& b : bonds) {
      if (b.i >= rank || b.j >= rank || b.i == b.j)
        fail(ErrorKind::invalid_bond, "bond indices out of range");
      const auto key = ordered(b.i, b.j);
      if (d.bonds_.count(key))
        fail(ErrorKind::invalid_bond, "duplicate bond for pair (" +
                                          std::to_string(b.i + 1) + "," +
                                          std::to_string(b.j + 1) + ")");
      S entry = S::zero();
      if (b.m == kInfiniteBond) {
        entry = b.value ? *b.value : S::from_int(-1);
        if (!sc_le(entry, S::from_int(-1)))
          fail(ErrorKind::invalid_bond,
               "infinite bond requires a form value <= -1");
      } else {
        if (b.m < 2) fail(ErrorKind::invalid_bond, "bond label must be >= 2");
        if (b.value)
          fail(ErrorKind::invalid_bond,
               "form value is only allowed on infinite bonds");
        auto e = S::minus_cos_pi_over(b.m);
        if (!e)
          fail(ErrorKind::backend_unsupported,
               "bond label " + std::to_string(b.m) +
                   " is not representable in the exact-rational backend");
        entry = *e;
      }
      d.bonds_[key] = b.m;
      d.gram_.at(b.i, b.j) = entry;
      d.gram_.at(b.j, b.i) = entry;
    }
    d.build_reflections();
    return d;
  }

  // For validation tests and programmatic use: wraps an explicit Gram
  // matrix without deriving it from bond labels.
  static CoxeterDatum from_gram(Mat<S> gram) {
    CoxeterDatum d;
    d.rank_ = gram.size();
    if (d.rank_ == 0) fail(ErrorKind::parse_error, "rank must be positive");
    d.gram_ = std::move(gram);
    d.build_reflections();
    return d;
  }

  std::size_t rank() const { return rank_; }
  const Mat<S>& gram() const { return gram_; }

  // Bond label for a pair, m=2 if never mentioned.
  unsigned bond(unsigned i, unsigned j) const {
    auto it = bonds_.find(ordered(i, j));
    return it == bonds_.end() ? 2u : it->second;
  }

  const std::map<std::pair<unsigned, unsigned>, unsigned>& bonds() const {
    return bonds_;
  }

  S bilinear(const Vec<S>& u, const Vec<S>& v) const {
    if (u.size() != rank_ || v.size() != rank_)
      fail(ErrorKind::dimension_mismatch,
           "bilinear form arguments must have length rank");
    S acc = S::zero();
    for (std::size_t i = 0; i < rank_; ++i) {
      if (sign_of(u[i]) == 0) continue;
      S row = S::zero();
      for (std::size_t j = 0; j < rank_; ++j) row += gram_.at(i, j) * v[j];
      acc += u[i] * row;
    }
    return acc;
  }

  // (v, alpha_a) without building the basis vector.
  S pair_with_simple(const Vec<S>& v, unsigned a) const {
    if (a >= rank_) fail(ErrorKind::index_out_of_range, "generator index");
    if (v.size() != rank_)
      fail(ErrorKind::dimension_mismatch, "vector length must equal rank");
    S acc = S::zero();
    for (std::size_t j = 0; j < rank_; ++j) acc += gram_.at(a, j) * v[j];
    return acc;
  }

  const Mat<S>& reflection(unsigned a) const {
    if (a >= rank_) fail(ErrorKind::index_out_of_range, "generator index");
    return reflections_[a];
  }

  // rho_a v = v - 2 (v, alpha_a) alpha_a, evaluated directly.
  Vec<S> reflect_simple(unsigned a, const Vec<S>& v) const {
    S p = pair_with_simple(v, a);
    Vec<S> r(v);
    r[a] -= (p + p);
    return r;
  }

  // General reflection in a root x (unit norm): v - 2 (v, x) x.
  Vec<S> reflect_in(const Vec<S>& x, const Vec<S>& v) const {
    S p = bilinear(v, x);
    Vec<S> r(v);
    const S two_p = p + p;
    for (std::size_t i = 0; i < rank_; ++i) r[i] -= two_p * x[i];
    return r;
  }

  Mat<S> reflection_matrix_in(const Vec<S>& x) const {
    Mat<S> m(rank_);
    for (std::size_t j = 0; j < rank_; ++j) {
      Vec<S> col = reflect_in(x, basis_vector<S>(rank_, j));
      for (std::size_t i = 0; i < rank_; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  // Stable content hash used to tag reports (FNV-1a over the canonical
  // serialization of the Gram matrix).
  std::string fingerprint() const {
    std::string payload = std::to_string(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j)
        payload += ";" + gram_.at(i, j).str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

 private:
  CoxeterDatum() = default;

  static std::pair<unsigned, unsigned> ordered(unsigned i, unsigned j) {
    return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  }

  void build_reflections() {
    reflections_.clear();
    reflections_.reserve(rank_);
    for (unsigned a = 0; a < rank_; ++a) {
      Mat<S> m = Mat<S>::identity(rank_);
      // row a of the Gram matrix enters row a of the reflection
      for (std::size_t j = 0; j < rank_; ++j) {
        S g = gram_.at(a, j);
        m.at(a, j) -= (g + g);
      }
      reflections_.push_back(std::move(m));
    }
  }

  std::size_t rank_ = 0;
  std::map<std::pair<unsigned, unsigned>, unsigned> bonds_;
  Mat<S> gram_;
  std::vector<Mat<S>> reflections_;
};

/*
  Datum file format (line oriented, UTF-8):

    rank N
    bond i j m          # m integer >= 2, or "inf"
    bond i j inf -1.5   # optional form value <= -1 for infinite bonds
    # comment

  Indices are 1-based; unmentioned pairs default to m = 2.
*/
template <class S>
CoxeterDatum<S> load_datum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t rank = 0;
  bool have_rank = false;
  std::vector<BondSpec<S>> bonds;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (tok == "rank") {
      long n = 0;
      if (have_rank) fail(ErrorKind::parse_error, "duplicate rank line" + where);
      if (!(ls >> n) || n <= 0)
        fail(ErrorKind::parse_error, "rank must be a positive integer" + where);
      std::string extra;
      if (ls >> extra) fail(ErrorKind::parse_error, "trailing tokens" + where);
      rank = static_cast<std::size_t>(n);
      have_rank = true;
    } else if (tok == "bond") {
      if (!have_rank)
        fail(ErrorKind::parse_error, "bond before rank line" + where);
      long i = 0, j = 0;
      std::string mtok;
      if (!(ls >> i >> j >> mtok))
        fail(ErrorKind::parse_error, "malformed bond line" + where);
      if (i < 1 || j < 1 || i > static_cast<long>(rank) ||
          j > static_cast<long>(rank) || i == j)
        fail(ErrorKind::parse_error, "bond indices out of range" + where);
      BondSpec<S> b;
      b.i = static_cast<unsigned>(i - 1);
      b.j = static_cast<unsigned>(j - 1);
      if (mtok == "inf") {
        b.m = kInfiniteBond;
        std::string vtok;
        if (ls >> vtok) {
          auto v = S::parse(vtok);
          if (!v) fail(ErrorKind::parse_error, "bad form value" + where);
          if (!sc_le(*v, S::from_int(-1)))
            fail(ErrorKind::invalid_bond,
                 "infinite bond form value must be <= -1" + where);
          b.value = *v;
        }
      } else {
        char* end = nullptr;
        const long m = std::strtol(mtok.c_str(), &end, 10);
        if (*end != '\0')
          fail(ErrorKind::parse_error, "bad bond label '" + mtok + "'" + where);
        if (m < 2)
          fail(ErrorKind::invalid_bond, "bond label must be >= 2" + where);
        b.m = static_cast<unsigned>(m);
        std::string extra;
        if (ls >> extra)
          fail(ErrorKind::invalid_bond,
               "form value is only allowed on infinite bonds" + where);
      }
      std::string extra;
      if (ls >> extra) fail(ErrorKind::parse_error, "trailing tokens" + where);
      bonds.push_back(std::move(b));
    } else {
      fail(ErrorKind::parse_error,
           "unknown directive '" + tok + "' (line " + std::to_string(lineno) + ")");
    }
  }
  if (!have_rank) fail(ErrorKind::parse_error, "missing rank line");
  return CoxeterDatum<S>::from_bonds(rank, bonds);
}

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::string note;
};

// Checks condition (C1) on the Gram matrix: unit diagonal, symmetry, and
// every off-diagonal entry equal to -cos(pi/m) for some integer m >= 2 or
// else <= -1.  (C2) needs no check in the coordinate model: the simple
// roots form a basis, so 0 is not a positive combination of them.
template <class S>
ValidationReport validate_datum(const CoxeterDatum<S>& d) {
  ValidationReport rep;
  rep.note =
      "(C2) holds by construction: the simple roots are a linearly "
      "independent basis in the coordinate model";
  const std::size_t n = d.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (!sc_eq(d.gram().at(i, i), S::one())) {
      rep.ok = false;
      rep.violations.push_back("gram[" + std::to_string(i + 1) + "][" +
                               std::to_string(i + 1) + "] != 1");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const S& e = d.gram().at(i, j);
      if (!sc_eq(e, d.gram().at(j, i))) {
        rep.ok = false;
        rep.violations.push_back("gram not symmetric at (" +
                                 std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
        continue;
      }
      if (sc_le(e, S::from_int(-1))) continue;  // infinite bond
      bool matched = false;
      for (unsigned m = 2; m <= 1000 && !matched; ++m) {
        auto c = S::minus_cos_pi_over(m);
        if (c && sc_eq(e, *c)) matched = true;
      }
      if (!matched) {
        rep.ok = false;
        rep.violations.push_back(
            "gram[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
            "] = " + e.str() + " is not -cos(pi/m) for any m <= 1000 and not <= -1");
      }
    }
  }
  return rep;
}

/*
  Chain coefficients c_i for dihedral root chains, parameterized by
  u = cosh(theta) >= 1 so that the exact-rational backend can evaluate
  them:

      c_0 = 0, c_1 = 1, c_{i+1} = 2u c_i - c_{i-1},

  which equals sinh(i theta)/sinh(theta) when u = cosh(theta) > 1 and
  equals i when u = 1 (theta = 0).  Defined for all integers i via
  c_{-i} = -c_i.
*/
template <class S>
S chain_coefficient(const S& cosh_theta, long i) {
  if (i < 0) return -chain_coefficient(cosh_theta, -i);
  if (i == 0) return S::zero();
  S prev = S::zero();
  S cur = S::one();
  const S two_u = cosh_theta + cosh_theta;
  for (long k = 1; k < i; ++k) {
    S next = two_u * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// cosh(i*theta), same recurrence with e_0 = 1, e_1 = cosh(theta).
template <class S>
S cosh_multiple(const S& cosh_theta, long i) {
  if (i < 0) i = -i;
  if (i == 0) return S::one();
  S prev = S::one();
  S cur = cosh_theta;
  const S two_u = cosh_theta + cosh_theta;
  for (long k = 1; k < i; ++k) {
    S next = two_u * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// The angle form, float only; used to cross-check the recurrence.
inline double chain_coefficient_angle(double theta, long i) {
  if (theta <= 0) return static_cast<double>(i);
  return std::sinh(static_cast<double>(i) * theta) / std::sinh(theta);
}

}  // namespace coxdom
