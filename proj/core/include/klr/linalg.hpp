#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace klr {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] const std::vector<Rational>& data() const { return data_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] QMatrix transposed() const;
  [[nodiscard]] QVector apply(const QVector& v) const;
  [[nodiscard]] QVector column(std::size_t c) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(Rational c, QMatrix a) { return a *= c; }
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Incremental row echelon form. Rows are kept fully reduced so membership
/// tests are a single pass.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  /// Adds v; returns true if it was independent of the rows so far.
  bool add(QVector v);
  /// v minus its projection along the pivots; zero iff v is in the span.
  [[nodiscard]] QVector reduce(QVector v) const;
  [[nodiscard]] bool contains(const QVector& v) const;
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<QVector>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<QVector>& rows, std::size_t dim);
/// Basis of {x : M x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);
/// Solves M x = b; returns false if inconsistent.
bool solve(const QMatrix& m, const QVector& b, QVector& x);
bool is_zero(const QVector& v);

}  // namespace klr
