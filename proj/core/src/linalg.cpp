#include "klr/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace klr {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

QVector RowSpace::reduce(QVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = v[pivots_[k]];
    if (f == 0) continue;
    const QVector& row = rows_[k];
    for (std::size_t c = 0; c < dim_; ++c)
      if (row[c] != 0) v[c] -= f * row[c];
  }
  return v;
}

bool RowSpace::contains(const QVector& v) const { return is_zero(reduce(v)); }

bool RowSpace::add(QVector v) {
  if (v.size() != dim_) throw std::invalid_argument("row size mismatch");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (v[c] != 0) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::size_t rank(const std::vector<QVector>& rows, std::size_t dim) {
  RowSpace s(dim);
  for (const auto& r : rows) s.add(r);
  return s.rank();
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<QVector> nullspace(const QMatrix& m) {
  RowSpace s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    QVector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    s.add(std::move(row));
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < s.rank(); ++k) x[s.pivots()[k]] = -s.rows()[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

bool solve(const QMatrix& m, const QVector& b, QVector& x) {
  // Augmented elimination.
  const std::size_t n = m.cols();
  RowSpace s(n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    QVector row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
    row[n] = b[r];
    s.add(std::move(row));
  }
  x.assign(n, 0);
  for (std::size_t k = 0; k < s.rank(); ++k) {
    if (s.pivots()[k] == n) return false;
    x[s.pivots()[k]] = s.rows()[k][n];
  }
  return true;
}

}  // namespace klr
