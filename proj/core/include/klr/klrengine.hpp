#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "klr/charalg.hpp"
#include "klr/polynomial.hpp"
#include "klr/qseries.hpp"
#include "klr/report.hpp"
#include "klr/rootsys.hpp"

namespace klr {

/// One-line notation, 0-based: p[k] = w(k).
using Perm = std::vector<int>;
/// Reduced word: letter r stands for s_r = (r, r+1), 0-based.
using ReducedWord = std::string;

Perm identity_perm(std::size_t n);
int perm_length(const Perm& w);
/// s_r o w.
Perm left_mul_simple(std::size_t r, const Perm& w);
Perm perm_of_word(const ReducedWord& letters, std::size_t n);
/// Place action: (w.j)_{w(p)} = j_p.
Word act(const Perm& w, const Word& j);

/// psi_w y^m 1_j for the fixed reduced word of w.
struct BasisTerm {
  Perm w;
  Exponents m;
  Word j;
  friend auto operator<=>(const BasisTerm&, const BasisTerm&) = default;
  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  [[nodiscard]] const std::map<BasisTerm, Integer>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Integer coeff(const BasisTerm& t) const;
  void add(const BasisTerm& t, const Integer& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Integer& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<BasisTerm, Integer> terms_;
};

/// Generators of R_theta. Indices are 0-based; psi has index r in [0, n-2].
struct Generator {
  enum Kind { Y, Psi } kind;
  std::size_t index;
};

/// Normal-form arithmetic in R_theta on the basis psi_w y^m 1_j, where psi_w
/// uses the lexicographically smallest reduced word of w. Products are
/// straightened by the defining relations; results are memoized per engine.
class KlrEngine {
 public:
  KlrEngine(std::shared_ptr<const CartanData> cartan, RootVector theta);

  [[nodiscard]] const CartanData& cartan() const { return *cartan_; }
  [[nodiscard]] std::shared_ptr<const CartanData> cartan_ptr() const { return cartan_; }
  [[nodiscard]] const RootVector& theta() const { return theta_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::vector<Word>& words() const { return words_; }
  [[nodiscard]] const std::vector<Perm>& permutations() const { return perms_; }
  [[nodiscard]] const ReducedWord& reduced_word(const Perm& w) const { return canon_.at(w); }

  /// deg(psi_w 1_j).
  [[nodiscard]] int psi_degree(const Perm& w, const Word& j) const;
  [[nodiscard]] int degree(const BasisTerm& t) const;
  /// Degree of a homogeneous element; throws if inhomogeneous or zero.
  [[nodiscard]] int degree(const AlgebraElement& a) const;

  [[nodiscard]] AlgebraElement basis(const Perm& w, const Exponents& m, const Word& j) const;
  [[nodiscard]] AlgebraElement one() const;
  [[nodiscard]] AlgebraElement idempotent(const Word& j) const;
  [[nodiscard]] AlgebraElement y(std::size_t t) const;
  [[nodiscard]] AlgebraElement psi(std::size_t r) const;
  /// Sum over words of P(y) 1_j.
  [[nodiscard]] AlgebraElement poly(const Poly& p) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement left_mul(const Generator& g, const AlgebraElement& a);
  AlgebraElement left_psi(std::size_t r, const AlgebraElement& a);
  AlgebraElement left_y(std::size_t t, const AlgebraElement& a);
  AlgebraElement left_poly(const Poly& p, const AlgebraElement& a);
  /// Product g_1 ... g_k 1_j of a generator sequence.
  AlgebraElement word_product(const std::vector<Generator>& gens, const Word& j);
  /// psi_{letters} y^m 1_j for an arbitrary (possibly non-reduced) word.
  AlgebraElement psi_word(const ReducedWord& letters, const Exponents& m, const Word& j);

  /// (psi_a - psi_b) y^m 1_j for two reduced words of the same permutation.
  AlgebraElement reduced_word_difference(const ReducedWord& a, const ReducedWord& b, const Exponents& m,
                                         const Word& j);

  /// dim_q 1_j R_theta 1_i truncated at degree D.
  [[nodiscard]] LaurentSeries graded_dim(const Word& i, const Word& j, int D) const;

  /// Random element: a few basis terms, each with total y-degree <= max_y_degree.
  AlgebraElement random_element(std::mt19937& rng, int max_terms, int max_y_degree) const;

  [[nodiscard]] std::string to_string(const AlgebraElement& a) const;
  [[nodiscard]] std::size_t rewrite_steps() const { return steps_; }
  void set_step_budget(std::size_t b) { budget_ = b; }

 private:
  AlgebraElement left_psi_basis(std::size_t r, const BasisTerm& t);
  AlgebraElement left_y_basis(std::size_t t, const BasisTerm& b);
  const std::vector<ReducedWord>& braid_path(const ReducedWord& a, const ReducedWord& b);
  void tick();

  std::shared_ptr<const CartanData> cartan_;
  RootVector theta_;
  std::size_t n_ = 0;
  std::vector<Word> words_;
  std::vector<Perm> perms_;
  std::map<Perm, ReducedWord> canon_;
  std::map<std::pair<std::size_t, BasisTerm>, AlgebraElement> psi_memo_, y_memo_;
  std::map<std::tuple<ReducedWord, ReducedWord, Exponents, Word>, AlgebraElement> diff_memo_;
  std::map<std::pair<ReducedWord, ReducedWord>, std::vector<ReducedWord>> path_memo_;
  std::size_t steps_ = 0;
  std::size_t budget_ = 50'000'000;
};

/// All words in I^theta, sorted.
std::vector<Word> words_of_weight(const CartanData& cd, const RootVector& theta);

// ------------------------------------------------------------ polynomial oracle

/// A vector in the faithful polynomial representation: one polynomial per word.
using PolyVector = std::map<Word, Poly>;

/// The standard polynomial representation of R_theta on the direct sum of
/// Z[x_1..x_n] 1_i. Independent of the normal-form engine.
class PolyRep {
 public:
  PolyRep(std::shared_ptr<const CartanData> cartan, std::size_t n) : cartan_(std::move(cartan)), n_(n) {}
  [[nodiscard]] PolyVector apply_y(std::size_t t, const PolyVector& v) const;
  [[nodiscard]] PolyVector apply_psi(std::size_t r, const PolyVector& v) const;
  [[nodiscard]] PolyVector apply_poly(const Poly& p, const PolyVector& v) const;
  /// Applies psi_{letters} y^m 1_j: the y-monomial first, then letters right to left.
  [[nodiscard]] PolyVector apply_term(const ReducedWord& letters, const Exponents& m, const Word& j,
                                      const PolyVector& v) const;
  [[nodiscard]] PolyVector apply(const KlrEngine& e, const AlgebraElement& a, const PolyVector& v) const;
  [[nodiscard]] std::size_t n() const { return n_; }

 private:
  std::shared_ptr<const CartanData> cartan_;
  std::size_t n_;
};

PolyVector& operator+=(PolyVector& a, const PolyVector& b);
PolyVector operator-(const PolyVector& a, const PolyVector& b);
bool is_zero(const PolyVector& v);

/// Every defining relation, applied to x^e 1_i for all words i in I^theta and all
/// monomials of total degree <= max_degree.
Report oracle_relation_check(std::shared_ptr<const CartanData> cartan, const RootVector& theta, int max_degree);

/// Compares a and b on x^e 1_i for all words i and monomials of degree <= max_degree.
bool oracle_equal(const KlrEngine& e, const AlgebraElement& a, const AlgebraElement& b, int max_degree);

/// Engine-vs-oracle agreement on `count` random products.
Report engine_oracle_check(KlrEngine& e, int count, int max_y_degree, int test_degree, unsigned seed);

/// Degree-by-degree comparison of graded_dim against the rank of the oracle image
/// of all psi-words (reduced or not, up to the longest length) times y-monomials.
Report dimension_rank_check(std::shared_ptr<const CartanData> cartan, const RootVector& theta, int D);

/// z = sum_j (sum_{p : j_p = i0} y_p) 1_j; `drop_word` removes one summand to
/// inject a fault.
AlgebraElement central_element(const KlrEngine& e, int i0, const Word* drop_word = nullptr);
/// [z, g] = 0 for every generator, in normal form and under the oracle.
Report central_element_check(KlrEngine& e, const AlgebraElement& z, int test_degree = 3);

}  // namespace klr
