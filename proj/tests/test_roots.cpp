#include "helpers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace coxdom;
using namespace coxtest;

TEST_CASE("group action on vectors") {
  auto d = load_datum<Tol>(kAtilde1);
  auto r1 = GroupElement<Tol>::generator(d, 0);
  CHECK(vec_eq(r1.apply(tv({1, 0})), tv({-1, 0})));

  // (r1 r2)^i applied to alpha follows the linear chain when theta = 0
  auto g = reduce_word(d, std::vector<unsigned>{0, 1});
  CHECK(vec_eq(g.apply(tv({1, 0})), tv({3, 2})));

  auto a2 = load_datum<Tol>(kA2);
  auto h = reduce_word(a2, std::vector<unsigned>{0, 1});
  CHECK(vec_eq(h.apply(tv({1, 0})), tv({0, 1})));
}

TEST_CASE("orbit formulas for dihedral pairs") {
  // finite bond: sin ratios
  for (unsigned m : {3u, 4u, 5u, 6u, 7u}) {
    auto d = load_datum<Tol>("rank 2\nbond 1 2 " + std::to_string(m) + "\n");
    const double theta = M_PI / m;
    auto rot = reduce_word(d, std::vector<unsigned>{0, 1});  // r_a r_b
    Vec<Tol> v = tv({1, 0});
    for (int i = 1; i <= 3; ++i) {
      v = rot.apply(v);
      const double ca = std::sin((2 * i + 1) * theta) / std::sin(theta);
      const double cb = std::sin(2 * i * theta) / std::sin(theta);
      CHECK(vec_eq(v, tv({ca, cb})));
    }
    // the rotation has order m
    GroupElement<Tol> power = rot;
    for (unsigned k = 1; k < m; ++k) power = compose(d, power, rot);
    CHECK(element_eq(power, GroupElement<Tol>::identity(d)));
  }
  // infinite bond with (a,b) < -1: sinh ratios
  auto d = load_datum<Tol>("rank 2\nbond 1 2 inf -1.5\n");
  const double theta = std::acosh(1.5);
  auto rot = reduce_word(d, std::vector<unsigned>{0, 1});
  Vec<Tol> v = tv({1, 0});
  for (int i = 1; i <= 4; ++i) {
    v = rot.apply(v);
    const double ca = std::sinh((2 * i + 1) * theta) / std::sinh(theta);
    const double cb = std::sinh(2 * i * theta) / std::sinh(theta);
    CHECK(vec_eq(v, tv({ca, cb})));
  }
}

TEST_CASE("word reduction by the sign rule") {
  auto d = load_datum<Tol>(kAtilde1);
  CHECK(reduce_word(d, std::vector<unsigned>{0, 0}).length() == 0);
  CHECK(reduce_word(d, std::vector<unsigned>{0, 1, 0, 1, 0}).length() == 5);

  auto a2 = load_datum<Tol>(kA2);
  auto g = reduce_word(a2, std::vector<unsigned>{0, 1, 0, 1});
  CHECK(g.length() == 2);
  CHECK(element_eq(g, reduce_word(a2, std::vector<unsigned>{1, 0})));

  // braid relation holds under matrix equality
  CHECK(element_eq(reduce_word(a2, std::vector<unsigned>{0, 1, 0}),
                   reduce_word(a2, std::vector<unsigned>{1, 0, 1})));

  CHECK(thrown_kind([&] { reduce_word(d, std::vector<unsigned>{7}); }) ==
        ErrorKind::index_out_of_range);

  // random words reduce to the same element and minimal length is stable
  // under re-reduction
  std::mt19937 rng(11);
  auto tri = load_datum<Tol>(kTri337);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<unsigned> w;
    const int len = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) w.push_back(rng() % 3);
    auto g1 = reduce_word(tri, w);
    Mat<Tol> prod = Mat<Tol>::identity(3);
    for (unsigned a : w) prod = prod * tri.reflection(a);
    CHECK(mat_eq(prod, g1.matrix()));
    CHECK(reduce_word(tri, g1.word()).length() == g1.length());
  }
}

TEST_CASE("breadth-first enumeration by depth") {
  auto d = load_datum<Tol>(kAtilde1);
  RootStore<Tol> st(d);
  st.ensure_depth(3);
  CHECK(st.level(1).size() == 2);
  CHECK(st.find(tv({2, 1})).has_value());
  CHECK(st.find(tv({1, 2})).has_value());
  CHECK(st.find(tv({3, 2})).has_value());
  CHECK(st.find(tv({2, 3})).has_value());
  CHECK(st.size() == 6);

  auto a2 = load_datum<Tol>(kA2);
  RootStore<Tol> sa(a2);
  sa.ensure_depth(5);
  CHECK(sa.size() == 3);
  CHECK(sa.exhausted());

  auto at2 = load_datum<Tol>(kAtilde2);
  RootStore<Tol> s2(at2);
  s2.ensure_depth(3);
  CHECK(s2.find(tv({2, 1, 1})).has_value());
  CHECK(s2.depth_of(*s2.find(tv({2, 1, 1}))) == 3);

  // every root has unit norm and positive coefficients
  for (RootId id : s2.roots_up_to(3)) {
    const auto& c = s2.root(id).coeffs;
    CHECK(cmp(at2.bilinear(c, c), Tol(1.0)) == Ordering::equal);
    CHECK(vec_sign(c) == VecSign::positive);
  }

  // BFS soundness: every deeper root has a parent one level up
  for (int depth = 2; depth <= 3; ++depth) {
    for (RootId id : s2.level(depth)) {
      const auto& c = s2.root(id).coeffs;
      bool has_parent = false;
      for (unsigned a = 0; a < 3 && !has_parent; ++a) {
        Vec<Tol> back = at2.reflect_simple(a, c);
        if (vec_sign(back) != VecSign::positive) continue;
        auto pid = s2.find(back);
        if (pid && s2.depth_of(*pid) == depth - 1) has_parent = true;
      }
      CHECK(has_parent);
    }
  }
}

TEST_CASE("depth changes by the pairing sign") {
  auto at2 = load_datum<Tol>(kAtilde2);
  RootStore<Tol> s(at2);
  s.ensure_depth(6);
  for (RootId id : s.roots_up_to(5)) {
    const auto& x = s.root(id).coeffs;
    for (unsigned a = 0; a < 3; ++a) {
      Vec<Tol> image = at2.reflect_simple(a, x);
      if (vec_sign(image) != VecSign::positive) continue;  // x = alpha_a
      const int jump = s.depth_of(*s.find(image)) - s.depth_of(id);
      switch (sign_of(at2.pair_with_simple(x, a))) {
        case 1: CHECK(jump == -1); break;
        case 0: CHECK(jump == 0); break;
        case -1: CHECK(jump == 1); break;
      }
    }
  }
}

TEST_CASE("root cap") {
  auto d = load_datum<Tol>(kAtilde1);
  RootStore<Tol>::Options o;
  o.max_roots = 10;
  RootStore<Tol> st(d, o);
  CHECK(thrown_kind([&] { st.ensure_depth(50); }) == ErrorKind::cap_exceeded);
}

TEST_CASE("reflection words are palindromic depth descents") {
  auto d = load_datum<Tol>(kAtilde1);
  RootStore<Tol> st(d);
  st.ensure_depth(4);
  CHECK(reflection_word(st, st.simple_root(0)).word() ==
        std::vector<unsigned>{0});
  auto w = reflection_word(st, *st.find(tv({2, 1})));
  CHECK(w.word() == std::vector<unsigned>{0, 1, 0});

  auto at2 = load_datum<Tol>(kAtilde2);
  RootStore<Tol> s2(at2);
  s2.ensure_depth(4);
  auto r = reflection_word(s2, *s2.find(tv({1, 1, 0})));
  CHECK(r.length() == 3);
  CHECK(mat_eq(r.matrix(), at2.reflection_matrix_in(tv({1, 1, 0}))));

  // r_x x = -x and l(r_x) = 2 dep(x) - 1, for every enumerated root
  for (RootId id : s2.roots_up_to(4)) {
    auto rx = reflection_word(s2, id);
    const auto& x = s2.root(id).coeffs;
    CHECK(vec_eq(rx.apply(x), vec_neg(x)));
    CHECK(static_cast<int>(rx.length()) == 2 * s2.depth_of(id) - 1);
    // palindrome
    auto word = rx.word();
    std::vector<unsigned> rev(word.rbegin(), word.rend());
    CHECK(word == rev);
  }

  CHECK(thrown_kind([&] { reflection_word_for(at2, tv({1, 1, 1})); }) ==
        ErrorKind::unknown_root);
}

TEST_CASE("inversion sets") {
  auto d = load_datum<Tol>(kAtilde1);
  RootStore<Tol> st(d);
  st.ensure_depth(12);

  CHECK(inversion_set(st, GroupElement<Tol>::identity(d)).empty());
  auto n1 = inversion_set(st, GroupElement<Tol>::generator(d, 0));
  REQUIRE(n1.size() == 1);
  CHECK(vec_eq(st.root(n1[0]).coeffs, tv({1, 0})));

  auto g = reduce_word(d, std::vector<unsigned>{0, 1});
  auto n = inversion_set(st, g);
  REQUIRE(n.size() == 2);
  std::set<std::string> strs;
  for (RootId id : n) strs.insert(vec_str(st.root(id).coeffs));
  CHECK(strs == std::set<std::string>{"0,1", "1,2"});

  // #N(w) = l(w) for every element up to length 8
  for (const auto& w : elements_up_to_length(d, 8))
    CHECK(inversion_set(st, w).size() == w.length());

  RootStore<Tol> shallow(d);
  shallow.ensure_depth(2);
  auto deep = reduce_word(d, std::vector<unsigned>{0, 1, 0, 1, 0});
  CHECK(thrown_kind([&] { inversion_set(shallow, deep); }) ==
        ErrorKind::insufficient_depth);

  // a complete finite store answers any length
  auto a2 = load_datum<Tol>(kA2);
  RootStore<Tol> sa(a2);
  sa.ensure_depth(2);
  auto w0 = reduce_word(a2, std::vector<unsigned>{0, 1, 0});
  CHECK(inversion_set(sa, w0).size() == 3);
}

TEST_CASE("length equals inversion count on deeper data") {
  auto at2 = load_datum<Tol>(kAtilde2);
  RootStore<Tol> s(at2);
  s.ensure_depth(12);
  for (const auto& w : elements_up_to_length(at2, 5))
    CHECK(inversion_set(s, w).size() == w.length());
}

TEST_CASE("rational backend enumerates the same roots") {
  auto df = load_datum<Tol>(kAtilde2);
  auto dr = load_datum<Rat>(kAtilde2);
  RootStore<Tol> sf(df);
  RootStore<Rat> sr(dr);
  sf.ensure_depth(6);
  sr.ensure_depth(6);
  REQUIRE(sf.size() == sr.size());
  for (RootId id = 0; id < sf.size(); ++id) {
    CHECK(sf.depth_of(id) == sr.depth_of(id));
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(cmp(Tol(sr.root(id).coeffs[k].to_double()),
                sf.root(id).coeffs[k]) == Ordering::equal);
  }
}
