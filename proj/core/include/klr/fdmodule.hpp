#pragma once

#include <memory>
#include <vector>

#include "klr/charalg.hpp"
#include "klr/klrengine.hpp"
#include "klr/linalg.hpp"
#include "klr/report.hpp"

namespace klr {

/// Finite-dimensional graded R_theta-module over Q. Every basis vector sits in
/// one weight space 1_i V and one degree; generators act by matrices.
struct FdModule {
  std::shared_ptr<const CartanData> cartan;
  RootVector theta;
  std::vector<Word> word;    // per basis vector
  std::vector<int> degree;   // per basis vector
  std::vector<QMatrix> y;    // y_1..y_n
  std::vector<QMatrix> psi;  // psi_1..psi_{n-1}

  [[nodiscard]] std::size_t dim() const { return word.size(); }
  [[nodiscard]] std::size_t n() const { return static_cast<std::size_t>(theta.height()); }
  [[nodiscard]] Character character() const;
  /// Projection onto 1_i V.
  [[nodiscard]] QMatrix idempotent(const Word& i) const;
  /// Matrix of psi_{letters} y^m (letters applied right to left after y^m).
  [[nodiscard]] QMatrix term_matrix(const ReducedWord& letters, const Exponents& m) const;
  /// Matrix of P(y_1, ..., y_n).
  [[nodiscard]] QMatrix poly_matrix(const Poly& p) const;
  /// Matrix of an engine element.
  [[nodiscard]] QMatrix element_matrix(const KlrEngine& e, const AlgebraElement& a) const;
  [[nodiscard]] FdModule shifted(int d) const;
};

/// L(alpha_i): one-dimensional, word (i), y acting by zero.
FdModule letter_module(std::shared_ptr<const CartanData> cd, int i);
/// One-dimensional module on a single word with y and psi acting by zero. Only a
/// module when the relations allow it; check with module_relation_check.
FdModule one_dimensional(std::shared_ptr<const CartanData> cd, const Word& w, int degree = 0);
/// The weight-zero module k.
FdModule unit_module(std::shared_ptr<const CartanData> cd);

/// Ind(m1 x m2) with basis psi_d (x) b1 (x) b2, d running over minimal left coset
/// representatives (identity first). Basis index is (d * dim1 + b1) * dim2 + b2.
FdModule induce(const FdModule& m1, const FdModule& m2);
/// The vector 1 (x) v1 (x) v2 in induce(m1, m2).
QVector induced_vector(const FdModule& m1, const QVector& v1, const FdModule& m2, const QVector& v2,
                       std::size_t induced_dim);

/// V^* with the transposed action (the anti-automorphism fixes all generators);
/// degrees are negated.
FdModule dual(const FdModule& m);

/// Every defining relation as a matrix identity, plus grading and nilpotency of y.
Report module_relation_check(const FdModule& m);

/// Dimension of the submodule generated by the given vectors.
std::size_t generated_dim(const FdModule& m, const std::vector<QVector>& gens);

/// Head V / rad(A) V, where A is the image of R_theta in End(V) and rad(A) is the
/// kernel of the trace form. Throws std::invalid_argument unless gen generates V.
FdModule head(const FdModule& m, const QVector& gen);
Character head_character(const FdModule& m, const QVector& gen);

/// Basis vector e_k.
QVector unit_vector(std::size_t dim, std::size_t k);

}  // namespace klr
