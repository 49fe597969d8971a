#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <stdexcept>
#include <string>

namespace klr {

using Integer = mpz_class;

/// Raised when a division that the theory claims to be exact leaves a remainder.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would need coefficients outside a known window.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default truncation degree for series computations. Overridable through the
/// KLR_TRUNCATION_DEGREE environment variable.
inline constexpr int kDefaultTruncation = 20;
int default_truncation();

/// Exact element of Z[q, q^-1]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Integer& c);  // NOLINT
  explicit LaurentPoly(std::map<int, Integer> coeffs);

  static LaurentPoly monomial(const Integer& c, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::map<int, Integer>& coefficients() const { return coeffs_; }
  [[nodiscard]] Integer coeff(int exponent) const;
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] Integer at_one() const;
  [[nodiscard]] bool is_nonnegative() const;
  [[nodiscard]] bool is_bar_invariant() const;
  [[nodiscard]] LaurentPoly shifted(int d) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Adds c*q^e in place.
  void add_term(int exponent, const Integer& c);

  [[nodiscard]] std::string to_string() const;

 private:
  std::map<int, Integer> coeffs_;
};

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
LaurentPoly quantum_int(int n);
/// [n]! = [1][2]...[n].
LaurentPoly quantum_factorial(int n);
/// q -> q^-1.
LaurentPoly bar(const LaurentPoly& x);
/// Polynomial long division; throws InexactDivision on a nonzero remainder.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// Outcome of comparing two series on the intersection of their known windows.
struct SeriesComparison {
  bool equal = true;
  int window_low = 0;
  int window_high = 0;  // INT_MAX when both sides are exact
  int first_mismatch = 0;
};

/// Element of Z((q)) known on exponents <= truncation_degree. Coefficients
/// above the truncation degree are unknown, never zero. A series with
/// truncation degree kExact is an exact Laurent polynomial.
class LaurentSeries {
 public:
  static constexpr int kExact = INT_MAX;

  LaurentSeries() = default;  // exact zero
  LaurentSeries(const LaurentPoly& p);  // NOLINT: exact embedding
  LaurentSeries(const LaurentPoly& p, int truncation_degree);
  /// Builds from raw data, discarding anything outside [lower_bound, truncation_degree].
  LaurentSeries(const std::map<int, Integer>& coeffs, int lower_bound, int truncation_degree);

  [[nodiscard]] bool is_exact() const { return trunc_ == kExact; }
  [[nodiscard]] int truncation_degree() const { return trunc_; }
  [[nodiscard]] int lower_bound() const { return lower_; }
  [[nodiscard]] const std::map<int, Integer>& coefficients() const { return coeffs_; }
  /// Coefficient at an exponent inside the known window; throws above it.
  [[nodiscard]] Integer coeff(int exponent) const;
  /// True when every known coefficient is zero.
  [[nodiscard]] bool is_known_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_nonnegative() const;
  /// The known part as a polynomial (exact only if is_exact()).
  [[nodiscard]] LaurentPoly known_part() const;
  [[nodiscard]] LaurentSeries truncated(int degree) const;
  [[nodiscard]] LaurentSeries shifted(int d) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a);

  [[nodiscard]] SeriesComparison compare(const LaurentSeries& o) const;
  /// Agreement on the common known window.
  [[nodiscard]] bool agrees_with(const LaurentSeries& o) const { return compare(o).equal; }
  /// Strict structural equality (same window, same coefficients).
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  std::map<int, Integer> coeffs_;
  int lower_ = 0;
  int trunc_ = kExact;
};

/// Series s with s*poly == 1 on every exponent <= degree.
LaurentSeries geometric_inverse(const LaurentPoly& poly, int degree);
/// Series quotient num/den. For exact numerators the remainder must vanish.
LaurentSeries exact_divide(const LaurentSeries& num, const LaurentPoly& den);
/// Bar involution on an exact series; throws TruncationError otherwise.
LaurentSeries bar(const LaurentSeries& x);

}  // namespace klr
