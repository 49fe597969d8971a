#include "doctest.h"

#include <random>

#include "klr/charalg.hpp"
#include "oracles.hpp"

using namespace klr;

namespace {

const LaurentSeries one{LaurentPoly(1)};

LaurentSeries qs(int e) { return LaurentSeries(LaurentPoly::q(e)); }

Character word_char(const CartanData& cd, std::initializer_list<int> letters) {
  return Character::word(cd, make_word(letters));
}

// Random single-block character of weight theta: a handful of words with small
// Laurent polynomial coefficients.
Character random_char(const CartanData& cd, const RootVector& theta, std::mt19937& rng) {
  Word base;
  for (std::size_t i = 0; i < theta.size(); ++i) base.append(static_cast<std::size_t>(theta[i]), static_cast<char>(i));
  std::vector<Word> perms;
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  Character x({theta});
  std::uniform_int_distribution<int> coef(-2, 3), exp(-3, 3), count(1, 3);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const Word& w = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
    x.add(w, LaurentSeries(LaurentPoly::monomial(coef(rng), exp(rng)) + LaurentPoly::q(exp(rng))));
  }
  return x;
}

RootVector random_weight(const CartanData& cd, int height, std::mt19937& rng) {
  RootVector v = cd.zero();
  std::uniform_int_distribution<std::size_t> pick(0, cd.num_vertices() - 1);
  for (int k = 0; k < height; ++k) v[pick(rng)] += 1;
  return v;
}

// Splits a weight into `parts` pieces in Q_+ (some possibly zero).
std::vector<RootVector> random_split(const RootVector& theta, std::size_t parts, std::mt19937& rng) {
  std::vector<RootVector> out(parts, RootVector(theta.size()));
  std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
  for (std::size_t i = 0; i < theta.size(); ++i)
    for (int k = 0; k < theta[i]; ++k) out[pick(rng)][i] += 1;
  return out;
}

// Independent q=1 shuffle count: number of position subsets of w spelling u
// whose complement spells v.
long interleavings(const Word& u, const Word& v, const Word& w) {
  const std::size_t n = w.size(), k = u.size();
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Word a, b;
    for (std::size_t p = 0; p < n; ++p) ((mask >> p) & 1u ? a : b).push_back(w[p]);
    if (a == u && b == v) ++count;
  }
  return count;
}

std::vector<Word> all_words(std::size_t letters, std::size_t length) {
  std::vector<Word> out{Word()};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t c = 0; c < letters; ++c) next.push_back(w + static_cast<char>(c));
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("word helpers round-trip") {
  const auto cd = CartanData::build("A2~");
  const Word w = make_word({0, 2, 1, 1});
  CHECK(word_to_string(w) == "0,2,1,1");
  CHECK(word_from_string("0,2,1,1") == w);
  CHECK(word_weight(cd, w) == RootVector{1, 2, 1});
  CHECK_THROWS_AS(word_weight(cd, make_word({3})), std::invalid_argument);
}

TEST_CASE("shuffle examples") {
  const auto a1 = CartanData::build("A1~");
  const auto x = shuffle(a1, word_char(a1, {1}), word_char(a1, {0}));
  Character expected({RootVector{1, 1}});
  expected.add(make_word({1, 0}), one);
  expected.add(make_word({0, 1}), qs(2));
  CHECK(x == expected);
  CHECK(shuffle(a1, x, Character::unit(a1)) == x);
  CHECK(shuffle(a1, Character::unit(a1), x) == x);

  const auto a2 = CartanData::build("A2~");
  const auto y = shuffle(a2, word_char(a2, {1}), word_char(a2, {2}));
  CHECK(y.coeff(make_word({1, 2})) == one);
  CHECK(y.coeff(make_word({2, 1})) == qs(1));
  CHECK(y.entries().size() == 2);
  // Equal letters: (0)o(0) = (1 + q^-2)(0,0).
  const auto z = shuffle(a1, word_char(a1, {0}), word_char(a1, {0}));
  CHECK(z.coeff(make_word({0, 0})).known_part() == LaurentPoly(1) + LaurentPoly::q(-2));
}

TEST_CASE("shuffle with truncated coefficients keeps the smaller window") {
  const auto a1 = CartanData::build("A1~");
  const LaurentSeries inv = geometric_inverse(LaurentPoly(1) - LaurentPoly::q(2), 10);
  const auto d1 = inv * word_char(a1, {1});
  const auto d0 = inv * word_char(a1, {0});
  const auto x = shuffle(a1, d1, d0);
  CHECK_FALSE(x.is_exact());
  // (1)/(1-q^2) o (0)/(1-q^2) at the word (0,1) is q^2/(1-q^2)^2.
  const LaurentSeries c = x.coeff(make_word({0, 1}));
  CHECK(c.coeff(2) == 1);
  CHECK(c.coeff(4) == 2);
  CHECK(c.coeff(10) == 5);
}

TEST_CASE("deconcat examples") {
  const auto a1 = CartanData::build("A1~");
  const RootVector a0{1, 0}, al1{0, 1};
  const auto x = shuffle(a1, word_char(a1, {1}), word_char(a1, {0}));
  const auto r = deconcat(a1, x, al1, a0);
  CHECK(r.blocks() == std::vector{al1, a0});
  CHECK(r.entries().size() == 1);
  CHECK(r.coeff(make_word({1, 0})) == one);
  CHECK(r == tensor(word_char(a1, {1}), word_char(a1, {0})));

  const auto s = deconcat(a1, x, a0, al1);
  CHECK(s.entries().size() == 1);
  CHECK(s.coeff(make_word({0, 1})) == qs(2));

  const auto t = deconcat(a1, x, x.theta(), a1.zero());
  CHECK(t.entries() == x.entries());
  CHECK_THROWS_AS(deconcat(a1, x, a0, a0), std::invalid_argument);
}

TEST_CASE("dual examples") {
  const auto a1 = CartanData::build("A1~");
  Character x({RootVector{1, 1}});
  x.add(make_word({0, 1}), qs(2));
  CHECK(dual(x).coeff(make_word({0, 1})) == qs(-2));
  CHECK(dual(dual(x)) == x);
  Character y({RootVector{2, 0}});
  y.add(make_word({0, 0}), LaurentSeries(LaurentPoly::q(1) + LaurentPoly::q(-1)));
  CHECK(y.is_bar_invariant());
  CHECK(dual(y) == y);
}

TEST_CASE("duality shift examples") {
  const auto a1 = CartanData::build("A1~");
  const auto a = word_char(a1, {1}), b = word_char(a1, {0});
  const auto rep = duality_shift_check(a1, a, b);
  CHECK(rep.passed);
  // Both sides equal (1,0) + q^-2 (0,1).
  const auto lhs = dual(shuffle(a1, a, b));
  CHECK(lhs.coeff(make_word({1, 0})) == one);
  CHECK(lhs.coeff(make_word({0, 1})) == qs(-2));
  CHECK(duality_shift_check(a1, a, Character::unit(a1)).passed);
  CHECK(duality_shift_check(a1, Character::unit(a1), b).passed);
}

TEST_CASE("mackey examples") {
  const auto a1 = CartanData::build("A1~");
  const RootVector a0{1, 0}, al1{0, 1};
  const auto m = tensor(word_char(a1, {1}), word_char(a1, {0}));
  const auto rhs = mackey_rhs(a1, m, {a0, al1});
  CHECK(rhs.entries().size() == 1);
  CHECK(rhs.coeff(make_word({0, 1})) == qs(2));
  CHECK(mackey_check(a1, m, {a0, al1}).passed);
  CHECK(mackey_check(a1, m, {al1, a0}).passed);
  CHECK(block_matrices({a0, al1}, {al1, a0}).size() == 1);
}

TEST_CASE("block matrices have the prescribed margins") {
  const RootVector r1{1, 1}, r2{1, 0}, c1{1, 0}, c2{1, 1};
  const auto ks = block_matrices({r1, r2}, {c1, c2});
  REQUIRE_FALSE(ks.empty());
  for (const auto& k : ks) {
    CHECK(k[0][0] + k[0][1] == r1);
    CHECK(k[1][0] + k[1][1] == r2);
    CHECK(k[0][0] + k[1][0] == c1);
    CHECK(k[0][1] + k[1][1] == c2);
  }
  // Coordinatewise count: 2x2 contingency tables per coordinate, multiplied.
  // coordinate 0: rows (1,1), cols (1,1) -> 2; coordinate 1: rows (1,0), cols (0,1) -> 1.
  CHECK(ks.size() == 2);
}

TEST_CASE("q=1 shuffle multiplicities match the interleaving count") {
  for (const char* label : {"A1~", "A2~"}) {
    CAPTURE(std::string(label));
    const auto cd = CartanData::build(label);
    for (std::size_t n1 = 0; n1 <= 4; ++n1)
      for (std::size_t n2 = 0; n1 + n2 <= 4; ++n2)
        for (const auto& u : all_words(cd.num_vertices(), n1))
          for (const auto& v : all_words(cd.num_vertices(), n2)) {
            const auto sh = shuffle_words(cd, u, v);
            long total = 0;
            for (const auto& [w, p] : sh) {
              const long c = p.at_one().get_si();
              CHECK(c == interleavings(u, v, w));
              CHECK(p.is_nonnegative());
              total += c;
            }
            CHECK(total == oracle::factorial(n1 + n2) / (oracle::factorial(n1) * oracle::factorial(n2)));
          }
  }
}

TEST_CASE("shuffle is associative") {
  std::mt19937 rng(7);
  for (const char* label : {"A1~", "A2~"}) {
    const auto cd = CartanData::build(label);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_char(cd, random_weight(cd, 1 + trial % 2, rng), rng);
      const auto b = random_char(cd, random_weight(cd, 1, rng), rng);
      const auto c = random_char(cd, random_weight(cd, 1 + trial % 3 / 2, rng), rng);
      CHECK(shuffle(cd, shuffle(cd, a, b), c) == shuffle(cd, a, shuffle(cd, b, c)));
    }
  }
}

TEST_CASE("restriction of a shuffle contains the identity term") {
  const auto cd = CartanData::build("A2~");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_char(cd, random_weight(cd, 2, rng), rng);
    const auto b = random_char(cd, random_weight(cd, 2, rng), rng);
    const auto r = deconcat(cd, shuffle(cd, a, b), a.theta(), b.theta());
    const auto t = tensor(a, b);
    // r - t is what the crossings contribute; it has the Mackey form.
    const auto cross = r - t;
    const auto mackey = mackey_rhs(cd, t, {a.theta(), b.theta()}) - t;
    CHECK(cross == mackey);
    // With disjoint letter supports nothing crosses back.
    if ((a.theta()[0] == 0 || b.theta()[0] == 0) && (a.theta()[1] == 0 || b.theta()[1] == 0) &&
        (a.theta()[2] == 0 || b.theta()[2] == 0))
      CHECK(r == t);
  }
}

TEST_CASE("randomized duality shift suite") {
  std::mt19937 rng(2024);
  for (const char* label : {"A1~", "A2~"}) {
    CAPTURE(std::string(label));
    const auto cd = CartanData::build(label);
    int passed = 0;
    for (int trial = 0; trial < 120; ++trial) {
      std::uniform_int_distribution<int> h(0, 4);
      const int total = h(rng);
      const int ha = std::uniform_int_distribution<int>(0, total)(rng);
      const auto a = random_char(cd, random_weight(cd, ha, rng), rng);
      const auto b = random_char(cd, random_weight(cd, total - ha, rng), rng);
      const auto rep = duality_shift_check(cd, a, b);
      CHECK_MESSAGE(rep.passed, rep.first_failure());
      passed += rep.passed;
    }
    CHECK(passed == 120);
  }
}

TEST_CASE("randomized mackey suite") {
  std::mt19937 rng(99);
  for (const char* label : {"A1~", "A2~"}) {
    CAPTURE(std::string(label));
    const auto cd = CartanData::build(label);
    int passed = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const int height = std::uniform_int_distribution<int>(1, 4)(rng);
      const RootVector theta = random_weight(cd, height, rng);
      const auto eta = random_split(theta, 2 + trial % 2, rng);
      Character m = random_char(cd, eta[0], rng);
      for (std::size_t k = 1; k < eta.size(); ++k) m = tensor(m, random_char(cd, eta[k], rng));
      const auto target = random_split(theta, 2 + (trial / 2) % 2, rng);
      const auto rep = mackey_check(cd, m, target);
      CHECK_MESSAGE(rep.passed, rep.first_failure());
      passed += rep.passed;
    }
    CHECK(passed == 120);
  }
}
