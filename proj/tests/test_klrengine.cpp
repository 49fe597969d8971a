#include "doctest.h"

#include "klr/klrengine.hpp"

using namespace klr;

namespace {

std::shared_ptr<const CartanData> type(const char* label) {
  return std::make_shared<const CartanData>(CartanData::build(label));
}

Exponents ex(std::initializer_list<int> e) { return Exponents(e); }

}  // namespace

TEST_CASE("permutation helpers") {
  const Perm s0 = left_mul_simple(0, identity_perm(3));
  CHECK(s0 == Perm{1, 0, 2});
  CHECK(perm_length(s0) == 1);
  CHECK(act(s0, make_word({0, 1, 2})) == make_word({1, 0, 2}));
  const Perm w = perm_of_word(std::string{0, 1}, 3);  // s_0 s_1
  CHECK(perm_length(w) == 2);
  CHECK(act(w, make_word({0, 1, 2})) == act(s0, act(left_mul_simple(1, identity_perm(3)), make_word({0, 1, 2}))));
}

TEST_CASE("canonical reduced words are lexicographically smallest") {
  KlrEngine e(type("A2~"), RootVector{1, 1, 2});
  for (const auto& w : e.permutations()) {
    const auto& word = e.reduced_word(w);
    CHECK(static_cast<int>(word.size()) == perm_length(w));
    CHECK(perm_of_word(word, e.n()) == w);
    // Suffixes are canonical too.
    if (!word.empty()) CHECK(e.reduced_word(perm_of_word(word.substr(1), e.n())) == word.substr(1));
  }
  CHECK(e.reduced_word(Perm{3, 2, 1, 0}) == std::string{0, 1, 0, 2, 1, 0});
}

TEST_CASE("quadratic relation examples") {
  const auto a1 = type("A1~");
  KlrEngine e(a1, RootVector{2, 0});
  const Word ii = make_word({0, 0});
  // psi_1^2 1_i = 0 when i_1 = i_2.
  CHECK(e.multiply(e.psi(0), e.multiply(e.psi(0), e.idempotent(ii))).is_zero());
  // (y_t psi_1 - psi_1 y_{s_1 t}) 1_i = (delta_{t,2} - delta_{t,1}) 1_i when i_1 = i_2.
  const auto lhs = e.multiply(e.y(0), e.multiply(e.psi(0), e.idempotent(ii))) -
                   e.multiply(e.psi(0), e.multiply(e.y(1), e.idempotent(ii)));
  CHECK(lhs == Integer(-1) * e.idempotent(ii));
  const auto lhs2 = e.multiply(e.y(1), e.multiply(e.psi(0), e.idempotent(ii))) -
                    e.multiply(e.psi(0), e.multiply(e.y(0), e.idempotent(ii)));
  CHECK(lhs2 == e.idempotent(ii));

  KlrEngine f(a1, RootVector{1, 1});
  const Word ij = make_word({0, 1});
  const auto sq = f.multiply(f.psi(0), f.multiply(f.psi(0), f.idempotent(ij)));
  // (y1 - y2)(y2 - y1) = -y1^2 + 2 y1 y2 - y2^2
  AlgebraElement expected;
  const Perm id = identity_perm(2);
  expected.add({id, ex({2, 0}), ij}, -1);
  expected.add({id, ex({1, 1}), ij}, 2);
  expected.add({id, ex({0, 2}), ij}, -1);
  CHECK(sq == expected);
  CHECK(f.degree(sq) == 4);
  CHECK(f.psi_degree(left_mul_simple(0, id), ij) == 2);
}

TEST_CASE("degree is additive under multiplication") {
  const auto a2 = type("A2~");
  KlrEngine e(a2, RootVector{1, 1, 1});
  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto a = e.random_element(rng, 1, 2);
    const auto b = e.random_element(rng, 1, 2);
    const auto ab = e.multiply(a, b);
    if (ab.is_zero()) continue;
    CHECK(e.degree(ab) == e.degree(a) + e.degree(b));
  }
}

TEST_CASE("polynomial representation satisfies the relations") {
  for (const char* label : {"A1~", "A2~"}) {
    CAPTURE(std::string(label));
    const auto cd = type(label);
    for (int h = 1; h <= 3; ++h)
      for (const auto& theta : lattice_box(RootVector(std::vector<int>(cd->num_vertices(), h)))) {
        if (theta.height() != h) continue;
        const auto rep = oracle_relation_check(cd, theta, 3);
        CHECK_MESSAGE(rep.passed, rep.first_failure());
        if (h >= 2) CHECK(rep.checks > 0);
      }
  }
}

TEST_CASE("identity acts as the identity in the oracle") {
  const auto cd = type("A2~");
  KlrEngine e(cd, RootVector{1, 1, 1});
  PolyRep rho(cd, 3);
  const PolyVector v{{make_word({2, 0, 1}), Poly::monomial(ex({1, 0, 2}), 5)}};
  CHECK(rho.apply(e, e.one(), v) == v);
}

TEST_CASE("braid relation on 1_(i,j,i) matches the oracle") {
  const auto cd = type("A2~");
  KlrEngine e(cd, RootVector{2, 1, 0});
  const Word w = make_word({0, 1, 0});
  const auto lhs = e.multiply(e.psi(1), e.multiply(e.psi(0), e.multiply(e.psi(1), e.idempotent(w)))) -
                   e.multiply(e.psi(0), e.multiply(e.psi(1), e.multiply(e.psi(0), e.idempotent(w))));
  const auto rhs = e.multiply(e.poly(braid_correction(*cd, 0, 1, 0, 3)), e.idempotent(w));
  CHECK(lhs == rhs);
  CHECK_FALSE(rhs.is_zero());
  CHECK(oracle_equal(e, lhs, rhs, 4));
}

TEST_CASE("engine products agree with the oracle") {
  for (const char* label : {"A1~", "A2~"}) {
    CAPTURE(std::string(label));
    const auto cd = type(label);
    for (const auto& theta : {cd->delta(), cd->delta() + cd->simple_root(1)}) {
      KlrEngine e(cd, theta);
      const auto rep = engine_oracle_check(e, 60, 2, 2, 17);
      CHECK_MESSAGE(rep.passed, rep.first_failure());
    }
  }
}

TEST_CASE("graded dimension examples") {
  const auto a1 = type("A1~");
  KlrEngine single(a1, RootVector{0, 1});
  const auto inv = geometric_inverse(LaurentPoly(1) - LaurentPoly::q(2), 20);
  CHECK(single.graded_dim(make_word({1}), make_word({1}), 20).agrees_with(inv));
  KlrEngine d(a1, a1->delta());
  const Word i = make_word({0, 1}), j = make_word({1, 0});
  CHECK(d.graded_dim(i, i, 20).agrees_with(inv * inv));
  CHECK(d.graded_dim(i, j, 20).agrees_with(LaurentSeries(LaurentPoly::q(2)) * inv * inv));
  // Symmetry dim 1_j R 1_i = dim 1_i R 1_j.
  const auto a2 = type("A2~");
  KlrEngine e(a2, RootVector{1, 2, 1});
  for (const auto& x : e.words())
    for (const auto& y : e.words()) CHECK(e.graded_dim(x, y, 12).agrees_with(e.graded_dim(y, x, 12)));
}

TEST_CASE("graded dimension matches the rank of the oracle image") {
  const auto a1 = type("A1~");
  CHECK(dimension_rank_check(a1, RootVector{1, 1}, 8).passed);
  CHECK(dimension_rank_check(a1, RootVector{2, 0}, 8).passed);
  const auto a2 = type("A2~");
  const auto rep = dimension_rank_check(a2, RootVector{1, 1, 0}, 8);
  CHECK_MESSAGE(rep.passed, rep.first_failure());
}

TEST_CASE("central element") {
  const auto a1 = type("A1~");
  KlrEngine e(a1, a1->delta());
  CHECK(central_element_check(e, central_element(e, 0)).passed);
  const auto a2 = type("A2~");
  KlrEngine f(a2, a2->delta());
  const auto z = central_element(f, 0);
  CHECK(central_element_check(f, z).passed);
  // Dropping one summand breaks centrality.
  const Word drop = make_word({0, 1, 2});
  const auto bad = central_element_check(f, central_element(f, 0, &drop));
  CHECK_FALSE(bad.passed);
  CHECK(bad.failure_count > 0);
}
