#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace klr {

/// Element of the root lattice, written in the simple-root basis alpha_0..alpha_l.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t rank_plus_one) : coords_(rank_plus_one, 0) {}
  explicit RootVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  RootVector(std::initializer_list<int> coords) : coords_(coords) {}

  static RootVector simple(std::size_t size, std::size_t i);

  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  [[nodiscard]] const std::vector<int>& coords() const { return coords_; }

  [[nodiscard]] int height() const;
  [[nodiscard]] bool is_zero() const;
  /// Every coordinate >= 0.
  [[nodiscard]] bool is_nonnegative() const;
  /// Nonzero with all coordinates >= 0, i.e. an element of Q_+ \ {0}.
  [[nodiscard]] bool is_positive() const { return is_nonnegative() && !is_zero(); }
  /// Componentwise <=.
  [[nodiscard]] bool fits_in(const RootVector& other) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(RootVector a);
  friend RootVector operator*(int k, RootVector a);
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  /// "a0+2a1" style; "0" for the zero vector.
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<int> coords_;
};

struct RootVectorHash {
  std::size_t operator()(const RootVector& v) const noexcept;
};

enum class AffineType { A, D, E };

/// Cartan data of an untwisted affine simply-laced type with vertex 0 affine.
class CartanData {
 public:
  /// Accepts "A1~", "A_2^(1)", "D4~", "E6~", ... Throws std::invalid_argument.
  static CartanData build(const std::string& type_label);

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] AffineType family() const { return family_; }
  /// l, the rank of the underlying finite type; the index set is {0,...,l}.
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::size_t num_vertices() const { return static_cast<std::size_t>(rank_) + 1; }
  [[nodiscard]] int cartan(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  [[nodiscard]] const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  /// Sign choice eps_ij for c_ij < 0: +1 if i < j, -1 if i > j.
  [[nodiscard]] int epsilon(std::size_t i, std::size_t j) const;
  [[nodiscard]] const RootVector& delta() const { return delta_; }
  [[nodiscard]] int delta_height() const { return delta_.height(); }
  [[nodiscard]] RootVector simple_root(std::size_t i) const {
    return RootVector::simple(num_vertices(), i);
  }
  [[nodiscard]] RootVector zero() const { return RootVector(num_vertices()); }

  /// (beta, gamma) = beta^T C gamma.
  [[nodiscard]] int form(const RootVector& beta, const RootVector& gamma) const;
  /// (alpha_i, alpha_j).
  [[nodiscard]] int letter_form(int i, int j) const { return matrix_[i][j]; }

  /// Positive roots of the finite root system Phi'_+ (alpha_0 coordinate zero),
  /// sorted by height then coordinates.
  [[nodiscard]] const std::vector<RootVector>& finite_positive_roots() const { return finite_pos_; }
  [[nodiscard]] bool is_finite_root(const RootVector& beta) const;

  [[nodiscard]] bool is_real_root(const RootVector& beta) const;
  [[nodiscard]] bool is_imaginary_root(const RootVector& beta) const;
  [[nodiscard]] bool is_root(const RootVector& beta) const {
    return is_real_root(beta) || is_imaginary_root(beta);
  }
  /// Real positive roots together with delta.
  [[nodiscard]] bool is_indivisible(const RootVector& beta) const {
    return is_real_root(beta) || beta == delta_;
  }

  /// All positive roots of height <= max_height, sorted by height then coordinates.
  [[nodiscard]] std::vector<RootVector> positive_roots_upto(int max_height) const;
  /// Indivisible positive roots (Psi) of height <= max_height.
  [[nodiscard]] std::vector<RootVector> indivisible_roots_upto(int max_height) const;

  /// Projection Phi -> Phi' killing delta. Throws if beta is not a root.
  [[nodiscard]] RootVector project(const RootVector& beta) const;
  /// Minimal-height real positive root projecting to the finite root beta.
  [[nodiscard]] RootVector hat_lift(const RootVector& beta) const;

  /// Simple reflection s_i (i in 1..l) on the root lattice.
  [[nodiscard]] RootVector reflect(std::size_t i, const RootVector& beta) const;

  /// Parses "a0+2a1", "delta", "2delta-a1", "3*a2" and "[1,2,0]".
  [[nodiscard]] RootVector parse(const std::string& expr) const;

 private:
  std::string label_;
  AffineType family_ = AffineType::A;
  int rank_ = 0;
  std::vector<std::vector<int>> matrix_;
  RootVector delta_;
  std::vector<RootVector> finite_pos_;
  std::unordered_set<RootVector, RootVectorHash> finite_all_;
};

/// Strips delta multiples: the coefficient of alpha_0 times delta is removed.
/// Works on any lattice element (linear map Q -> Q').
RootVector strip_delta(const CartanData& cartan, const RootVector& beta);

/// Vectors v in Q_+ with v <= bound componentwise (including 0 and bound).
std::vector<RootVector> lattice_box(const RootVector& bound);

}  // namespace klr
