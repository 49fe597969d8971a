#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/qseries.hpp"
#include "klr/rootsys.hpp"

namespace klr {

/// Exponent vector of a monomial y_1^{e_1} ... y_n^{e_n}.
using Exponents = std::vector<int>;

/// Integer polynomial in a fixed number of commuting variables.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Integer& c);
  static Poly variable(std::size_t nvars, std::size_t k);
  static Poly monomial(Exponents e, const Integer& c = 1);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Exponents, Integer>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Integer coeff(const Exponents& e) const;
  /// Highest total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const;

  void add_term(const Exponents& e, const Integer& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Integer& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Integer c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Multiplies by the monomial y^e.
  [[nodiscard]] Poly times_monomial(const Exponents& e) const;
  /// Swaps the variables a and b.
  [[nodiscard]] Poly swapped(std::size_t a, std::size_t b) const;
  /// (f - s_ab f) / (y_a - y_b), always a polynomial.
  [[nodiscard]] Poly divided_difference(std::size_t a, std::size_t b) const;

  /// "y1^2*y3 - 2*y2"; variables are 1-indexed.
  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Integer> terms_;
};

/// Q_{ij}(y_u, y_v) as a polynomial in nvars variables.
Poly q_polynomial(const CartanData& cd, int i, int j, std::size_t u, std::size_t v, std::size_t nvars);

/// The braid correction (Q_{ij}(y_{r+2},y_{r+1}) - Q_{ij}(y_r,y_{r+1})) / (y_{r+2} - y_r)
/// for 0-based r. Callers apply it only when i_r = i_{r+2}.
Poly braid_correction(const CartanData& cd, int i, int j, std::size_t r, std::size_t nvars);

/// All exponent vectors in nvars variables with total degree exactly d.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d);

}  // namespace klr
