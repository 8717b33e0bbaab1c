#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coxdom/datum.hpp"
#include "coxdom/error.hpp"
#include "coxdom/linalg.hpp"

namespace coxdom {

/*
  A group element is a reduced word in the generators together with the
  matrix of its action on coordinates.  The representation is faithful,
  so two elements are equal precisely when their matrices agree; the word
  is kept for display and length queries.
*/
template <class S>
class GroupElement {
 public:
  static GroupElement identity(const CoxeterDatum<S>& d) {
    GroupElement g;
    g.matrix_ = Mat<S>::identity(d.rank());
    return g;
  }

  static GroupElement generator(const CoxeterDatum<S>& d, unsigned a) {
    GroupElement g;
    g.word_ = {a};
    g.matrix_ = d.reflection(a);
    return g;
  }

  const std::vector<unsigned>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  const Mat<S>& matrix() const { return matrix_; }

  Vec<S> apply(const Vec<S>& v) const { return matrix_.apply(v); }

  // Reversal of a reduced word is a reduced word for the inverse.
  GroupElement inverse(const CoxeterDatum<S>& d) const {
    std::vector<unsigned> rev(word_.rbegin(), word_.rend());
    GroupElement g;
    g.word_ = std::move(rev);
    g.matrix_ = Mat<S>::identity(d.rank());
    for (unsigned a : g.word_) g.matrix_ = g.matrix_ * d.reflection(a);
    return g;
  }

  // Word in 1-based dot notation, "1.2.1"; empty word prints as "e".
  std::string word_str() const {
    if (word_.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) s += ".";
      s += std::to_string(word_[i] + 1);
    }
    return s;
  }

  friend bool element_eq(const GroupElement& a, const GroupElement& b) {
    return mat_eq(a.matrix_, b.matrix_);
  }

  template <class T>
  friend GroupElement<T> reduce_word(const CoxeterDatum<T>&,
                                     std::span<const unsigned>);

 private:
  GroupElement() = default;

  std::vector<unsigned> word_;  // reduced
  Mat<S> matrix_;
};

/*
  Word reduction by the sign rule: appending generator a to a reduced word
  w either lengthens it (when w alpha_a stays positive) or, by the exchange
  property, deletes the unique earlier letter at which the image of alpha_a
  turns negative.  The result is reduced at every step, so the final length
  is minimal.
*/
template <class S>
GroupElement<S> reduce_word(const CoxeterDatum<S>& d,
                            std::span<const unsigned> word) {
  const std::size_t n = d.rank();
  std::vector<unsigned> red;
  for (unsigned a : word) {
    if (a >= n) fail(ErrorKind::index_out_of_range, "generator index in word");
    // images[j] = s_{j+1} ... s_k alpha_a for the current word s_1..s_k
    const std::size_t k = red.size();
    std::vector<Vec<S>> images(k + 1);
    images[k] = basis_vector<S>(n, a);
    for (std::size_t j = k; j-- > 0;)
      images[j] = d.reflect_simple(red[j], images[j + 1]);
    if (vec_sign(images[0]) == VecSign::positive || k == 0) {
      red.push_back(a);
      continue;
    }
    bool deleted = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (vec_sign(images[j]) == VecSign::negative &&
          vec_sign(images[j + 1]) == VecSign::positive) {
        red.erase(red.begin() + static_cast<std::ptrdiff_t>(j));
        deleted = true;
        break;
      }
    }
    if (!deleted)
      fail(ErrorKind::internal, "sign rule found no deletion point");
  }
  GroupElement<S> g;
  g.word_ = std::move(red);
  g.matrix_ = Mat<S>::identity(n);
  for (unsigned a : g.word_) g.matrix_ = g.matrix_ * d.reflection(a);
  return g;
}

template <class S>
GroupElement<S> reduce_word(const CoxeterDatum<S>& d,
                            const std::vector<unsigned>& word) {
  return reduce_word(d, std::span<const unsigned>(word));
}

// Product a*b as a reduced element.
template <class S>
GroupElement<S> compose(const CoxeterDatum<S>& d, const GroupElement<S>& a,
                        const GroupElement<S>& b) {
  std::vector<unsigned> w(a.word());
  w.insert(w.end(), b.word().begin(), b.word().end());
  return reduce_word(d, w);
}

// All elements of length <= max_length, BFS by length, deduplicated by
// matrix key.  Order is deterministic: parents in discovery order, then
// generators ascending.
template <class S>
std::vector<GroupElement<S>> elements_up_to_length(const CoxeterDatum<S>& d,
                                                   std::size_t max_length,
                                                   std::size_t cap = 200000) {
  std::vector<GroupElement<S>> out;
  out.push_back(GroupElement<S>::identity(d));
  auto known = [&](const GroupElement<S>& g) {
    for (const auto& e : out)
      if (element_eq(e, g)) return true;
    return false;
  };
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (unsigned a = 0; a < d.rank(); ++a) {
        std::vector<unsigned> w(out[p].word());
        w.push_back(a);
        GroupElement<S> g = reduce_word(d, w);
        if (g.length() != len) continue;  // shortened: already seen
        if (known(g)) continue;
        out.push_back(std::move(g));
        if (out.size() > cap)
          fail(ErrorKind::cap_exceeded, "element enumeration cap exceeded");
      }
    }
    if (out.size() == level_end) break;  // group exhausted
    level_begin = level_end;
  }
  return out;
}

}  // namespace coxdom
