#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxdom/error.hpp"
#include "coxdom/scalar.hpp"

namespace coxdom {

// Coordinate vectors over the simple-root basis and small dense square
// matrices.  Rank is tiny (a handful), so nothing clever is needed; what
// matters is that every operation works for both scalar backends.

template <class S>
using Vec = std::vector<S>;

template <class S>
using KeyVec = std::vector<typename S::Key>;

template <class S>
inline KeyVec<S> vec_key(const Vec<S>& v) {
  KeyVec<S> k;
  k.reserve(v.size());
  for (const S& c : v) k.push_back(c.key());
  return k;
}

template <class S>
inline Vec<S> vec_zero(std::size_t n) {
  return Vec<S>(n, S::zero());
}

template <class S>
inline Vec<S> basis_vector(std::size_t n, std::size_t i) {
  Vec<S> v(n, S::zero());
  v[i] = S::one();
  return v;
}

template <class S>
inline Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class S>
inline Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class S>
inline Vec<S> vec_neg(const Vec<S>& a) {
  Vec<S> r(a);
  for (S& c : r) c = -c;
  return r;
}

template <class S>
inline Vec<S> vec_scale(const S& s, const Vec<S>& a) {
  Vec<S> r(a);
  for (S& c : r) c *= s;
  return r;
}

template <class S>
inline bool vec_eq(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!sc_eq(a[i], b[i])) return false;
  return true;
}

template <class S>
inline S coeff_sum(const Vec<S>& a) {
  S s = S::zero();
  for (const S& c : a) s += c;
  return s;
}

// Sign of a vector whose nonzero coordinates are expected to share a sign
// (true for every root in canonical coefficients).
enum class VecSign { zero, positive, negative, mixed };

template <class S>
inline VecSign vec_sign(const Vec<S>& v) {
  bool pos = false, neg = false;
  for (const S& c : v) {
    switch (sign_of(c)) {
      case 1: pos = true; break;
      case -1: neg = true; break;
      default: break;
    }
  }
  if (pos && neg) return VecSign::mixed;
  if (pos) return VecSign::positive;
  if (neg) return VecSign::negative;
  return VecSign::zero;
}

template <class S>
inline std::string vec_str(const Vec<S>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

// Parses "2,1,1" style coefficient lists.
template <class S>
inline Vec<S> parse_vector(std::string_view text, std::size_t expected_rank) {
  Vec<S> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    auto parsed = S::parse(piece);
    if (!parsed)
      fail(ErrorKind::parse_error,
           "bad coefficient '" + std::string(piece) + "' in vector literal");
    v.push_back(*parsed);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (v.size() != expected_rank)
    fail(ErrorKind::dimension_mismatch,
         "vector literal has " + std::to_string(v.size()) +
             " coefficients, expected " + std::to_string(expected_rank));
  return v;
}

template <class S>
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), a_(n * n, S::zero()) {}

  static Mat identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S::one();
    return m;
  }

  std::size_t size() const { return n_; }

  S& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != n_)
      fail(ErrorKind::dimension_mismatch, "matrix/vector size mismatch");
    Vec<S> r(n_, S::zero());
    for (std::size_t i = 0; i < n_; ++i) {
      S acc = S::zero();
      for (std::size_t j = 0; j < n_; ++j) acc += at(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_)
      fail(ErrorKind::dimension_mismatch, "matrix size mismatch");
    Mat r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const S& aik = a.at(i, k);
        if (sign_of(aik) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  friend bool mat_eq(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!sc_eq(a.a_[i], b.a_[i])) return false;
    return true;
  }

  KeyVec<S> key() const { return vec_key(a_); }

 private:
  std::size_t n_ = 0;
  std::vector<S> a_;
};

// Coplanarity tester with a fixed pivot minor, for testing many vectors
// against one plane.  Requires x, y linearly independent.
template <class S>
class PlaneTest {
 public:
  PlaneTest(Vec<S> x, Vec<S> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        S det = x_[i] * y_[j] - x_[j] * y_[i];
        if (sign_of(det) != 0) {
          pi_ = i;
          pj_ = j;
          det_ = std::move(det);
          return;
        }
      }
    }
    fail(ErrorKind::not_independent, "plane basis vectors are proportional");
  }

  // Coefficients (s, t) with z = s*x + t*y, or nullopt if z is off-plane.
  std::optional<std::pair<S, S>> coords(const Vec<S>& z) const {
    S s = (z[pi_] * y_[pj_] - z[pj_] * y_[pi_]) / det_;
    S t = (x_[pi_] * z[pj_] - x_[pj_] * z[pi_]) / det_;
    for (std::size_t k = 0; k < x_.size(); ++k) {
      if (k == pi_ || k == pj_) continue;
      if (!sc_eq(z[k], s * x_[k] + t * y_[k])) return std::nullopt;
    }
    return std::make_pair(std::move(s), std::move(t));
  }

  const Vec<S>& basis_x() const { return x_; }
  const Vec<S>& basis_y() const { return y_; }

 private:
  Vec<S> x_, y_;
  std::size_t pi_ = 0, pj_ = 0;
  S det_ = S::zero();
};

// One-shot form of the plane solver.
template <class S>
inline std::optional<std::pair<S, S>> solve_in_plane(const Vec<S>& x,
                                                     const Vec<S>& y,
                                                     const Vec<S>& z) {
  return PlaneTest<S>(x, y).coords(z);
}

}  // namespace coxdom
