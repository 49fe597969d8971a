#include "doctest.h"

#include <set>

#include "klr/rootsys.hpp"

using namespace klr;

TEST_CASE("cartan data") {
  const auto a1 = CartanData::build("A1~");
  CHECK(a1.matrix() == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  CHECK(a1.delta() == RootVector{1, 1});

  const auto a2 = CartanData::build("A_2^(1)");
  CHECK(a2.delta() == RootVector{1, 1, 1});
  CHECK(a2.finite_positive_roots().size() == 3);

  const auto d4 = CartanData::build("D4~");
  CHECK(d4.finite_positive_roots().size() == 12);
  CHECK(d4.delta_height() == 6);
  CHECK(d4.delta() == RootVector{1, 1, 2, 1, 1});

  CHECK_THROWS_AS(CartanData::build("B3~"), std::invalid_argument);
  CHECK_THROWS_AS(CartanData::build("D3~"), std::invalid_argument);
  CHECK_THROWS_AS(CartanData::build("E9~"), std::invalid_argument);
}

TEST_CASE("exceptional and larger types") {
  struct Case {
    const char* label;
    std::size_t finite_roots;
    int delta_height;
  };
  // |Phi'_+| and the Coxeter number h = ht(delta).
  for (const Case c : {Case{"A3~", 6, 4}, Case{"A5~", 15, 6}, Case{"D5~", 20, 8}, Case{"D6~", 30, 10},
                       Case{"E6~", 36, 12}, Case{"E7~", 63, 18}, Case{"E8~", 120, 30}}) {
    CAPTURE(c.label);
    const auto cd = CartanData::build(c.label);
    CHECK(cd.finite_positive_roots().size() == c.finite_roots);
    CHECK(cd.delta_height() == c.delta_height);
    for (std::size_t i = 0; i < cd.num_vertices(); ++i) {
      CHECK(cd.form(cd.delta(), cd.simple_root(i)) == 0);
      for (std::size_t j = 0; j < cd.num_vertices(); ++j) {
        CHECK(cd.cartan(i, j) == cd.cartan(j, i));
        if (cd.cartan(i, j) < 0) CHECK(cd.epsilon(i, j) * cd.epsilon(j, i) == -1);
      }
    }
  }
}

TEST_CASE("bilinear form") {
  const auto a1 = CartanData::build("A1~");
  const auto a2 = CartanData::build("A2~");
  CHECK(a2.form(a2.simple_root(0), a2.simple_root(0)) == 2);
  CHECK(a1.form(a1.simple_root(0), a1.simple_root(1)) == -2);
  for (const auto& beta : a2.positive_roots_upto(9)) CHECK(a2.form(a2.delta(), beta) == 0);
  CHECK_THROWS_AS(a2.form(a2.delta(), RootVector{1, 1}), std::invalid_argument);
}

TEST_CASE("positive roots up to a height") {
  const auto a1 = CartanData::build("A1~");
  const auto h2 = a1.positive_roots_upto(2);
  CHECK(h2 == std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}});
  const auto h4 = a1.positive_roots_upto(4);
  CHECK(h4.size() == 6);
  CHECK(std::find(h4.begin(), h4.end(), RootVector{2, 1}) != h4.end());
  CHECK(std::find(h4.begin(), h4.end(), RootVector{1, 2}) != h4.end());
  CHECK(std::find(h4.begin(), h4.end(), RootVector{2, 2}) != h4.end());

  const auto a2 = CartanData::build("A2~");
  // Height 1: three simples; height 2: a1+a2, a0+a1, a0+a2; height 3: delta.
  CHECK(a2.positive_roots_upto(3).size() == 7);
}

TEST_CASE("root shapes") {
  for (const char* label : {"A1~", "A2~", "A3~", "D4~", "E6~"}) {
    CAPTURE(std::string(label));
    const auto cd = CartanData::build(label);
    const int h = cd.delta_height();
    for (int m = 1; m <= 3; ++m) {
      int imaginary = 0;
      for (const auto& beta : cd.positive_roots_upto(h * m)) {
        CHECK(cd.is_root(beta));
        CHECK(cd.form(beta, beta) == (cd.is_real_root(beta) ? 2 : 0));
        if (cd.is_imaginary_root(beta)) ++imaginary;
      }
      CHECK(imaginary == m);
      // Each height window [kh+1, (k+1)h] holds exactly 2|Phi'_+| real roots.
      int real = 0;
      for (const auto& beta : cd.positive_roots_upto(h * m))
        if (cd.is_real_root(beta)) ++real;
      CHECK(real == static_cast<int>(2 * cd.finite_positive_roots().size()) * m);
    }
  }
}

TEST_CASE("projection and lift") {
  const auto a1 = CartanData::build("A1~");
  const auto a2 = CartanData::build("A2~");
  CHECK(a2.project(a2.delta()).is_zero());
  CHECK(a2.project(RootVector{1, 2, 1}) == RootVector{0, 1, 0});
  CHECK(a2.project(a2.simple_root(0)) == RootVector{0, -1, -1});
  CHECK_THROWS_AS(a2.project(RootVector{2, 1, 0}), std::invalid_argument);

  CHECK(a1.hat_lift(RootVector{0, 1}) == RootVector{0, 1});
  CHECK(a1.hat_lift(RootVector{0, -1}) == RootVector{1, 0});
  CHECK(a2.hat_lift(RootVector{0, -1, -1}) == RootVector{1, 0, 0});
  CHECK_THROWS_AS(a2.hat_lift(RootVector{0, 2, 0}), std::invalid_argument);

  for (const char* label : {"A3~", "D4~", "E6~"}) {
    const auto cd = CartanData::build(label);
    for (const auto& beta : cd.finite_positive_roots()) {
      CHECK(cd.project(cd.hat_lift(beta)) == beta);
      CHECK(cd.project(cd.hat_lift(-beta)) == -beta);
    }
  }
}

TEST_CASE("root sums agree with the form criterion") {
  for (const char* label : {"A2~", "A3~", "D4~"}) {
    CAPTURE(std::string(label));
    const auto cd = CartanData::build(label);
    const auto roots = cd.positive_roots_upto(2 * cd.delta_height());
    std::set<RootVector> all(roots.begin(), roots.end());
    for (const auto& b : roots) {
      if (!cd.is_real_root(b)) continue;
      for (const auto& g : roots) {
        if (!cd.is_real_root(g)) continue;
        const RootVector s = b + g;
        if (s.height() > 2 * cd.delta_height()) continue;
        const bool closure = all.count(s) > 0;
        const bool real_sum = cd.is_real_root(s);
        CHECK(closure == cd.is_root(s));
        // For real roots, b + g is a real root iff (b, g) = -1.
        CHECK(real_sum == (cd.form(b, g) == -1));
      }
    }
  }
}

TEST_CASE("parsing root expressions") {
  const auto a2 = CartanData::build("A2~");
  CHECK(a2.parse("a0+a1") == RootVector{1, 1, 0});
  CHECK(a2.parse("delta") == RootVector{1, 1, 1});
  CHECK(a2.parse("2delta+a1") == RootVector{2, 3, 2});
  CHECK(a2.parse("delta - a2") == RootVector{1, 1, 0});
  CHECK(a2.parse("3*a2") == RootVector{0, 0, 3});
  CHECK(a2.parse("[1,0,2]") == RootVector{1, 0, 2});
  CHECK_THROWS_AS(a2.parse("a5"), std::invalid_argument);
  CHECK_THROWS_AS(a2.parse("a1+"), std::invalid_argument);
  CHECK_THROWS_AS(a2.parse("x"), std::invalid_argument);
  CHECK(RootVector{2, -1, 0}.to_string() == "2a0-a1");
}
