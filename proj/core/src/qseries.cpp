#include "klr/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace klr {

int default_truncation() {
  if (const char* env = std::getenv("KLR_TRUNCATION_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < 100000) return static_cast<int>(v);
  }
  return kDefaultTruncation;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.emplace(0, c);
}

LaurentPoly::LaurentPoly(std::map<int, Integer> coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.coeffs_.emplace(exponent, c);
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (coeffs_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (coeffs_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool LaurentPoly::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

bool LaurentPoly::is_bar_invariant() const { return *this == bar(*this); }

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), e + d, c);
  return r;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly quantum_int(int n) {
  if (n < 0) throw std::invalid_argument("quantum_int: n must be nonnegative");
  LaurentPoly r;
  for (int k = 0; k < n; ++k) r.add_term(n - 1 - 2 * k, 1);
  return r;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: n must be nonnegative");
  LaurentPoly r(1);
  for (int k = 2; k <= n; ++k) r *= quantum_int(k);
  return r;
}

LaurentPoly bar(const LaurentPoly& x) {
  std::map<int, Integer> m;
  for (const auto& [e, c] : x.coefficients()) m.emplace(-e, c);
  return LaurentPoly(std::move(m));
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (num.is_zero()) return {};
  const int dlow = den.min_degree();
  const int dhigh = den.max_degree();
  const Integer lead = den.coeff(dlow);
  LaurentPoly rem = num;
  LaurentPoly quot;
  // Cancel from the lowest exponent upward; the quotient cannot extend past
  // max(num) - max(den).
  const int qmax = num.max_degree() - dhigh;
  while (!rem.is_zero()) {
    const int e = rem.min_degree();
    const int qe = e - dlow;
    if (qe > qmax) throw InexactDivision("exact_divide: nonzero remainder " + rem.to_string());
    Integer c = rem.coeff(e);
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw InexactDivision("exact_divide: coefficient not divisible by leading term");
    Integer t = c / lead;
    quot.add_term(qe, t);
    rem -= den * LaurentPoly::monomial(t, qe);
  }
  return quot;
}

// -------------------------------------------------------------- LaurentSeries

LaurentSeries::LaurentSeries(const LaurentPoly& p) : coeffs_(p.coefficients()) {
  lower_ = coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

LaurentSeries::LaurentSeries(const LaurentPoly& p, int truncation_degree)
    : coeffs_(p.coefficients()), trunc_(truncation_degree) {
  lower_ = coeffs_.empty() ? std::min(0, trunc_) : coeffs_.begin()->first;
  normalize();
}

LaurentSeries::LaurentSeries(const std::map<int, Integer>& coeffs, int lower_bound,
                             int truncation_degree)
    : lower_(lower_bound), trunc_(truncation_degree) {
  for (const auto& [e, c] : coeffs)
    if (e >= lower_bound && e <= truncation_degree && c != 0) coeffs_.emplace(e, c);
}

void LaurentSeries::normalize() {
  if (trunc_ != kExact) {
    auto it = coeffs_.upper_bound(trunc_);
    coeffs_.erase(it, coeffs_.end());
  }
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
  if (!coeffs_.empty()) lower_ = std::min(lower_, coeffs_.begin()->first);
  if (is_exact()) lower_ = coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

Integer LaurentSeries::coeff(int exponent) const {
  if (exponent > trunc_)
    throw TruncationError("coefficient q^" + std::to_string(exponent) +
                          " is above the truncation degree " + std::to_string(trunc_));
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

bool LaurentSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

LaurentPoly LaurentSeries::known_part() const { return LaurentPoly(coeffs_); }

LaurentSeries LaurentSeries::truncated(int degree) const {
  LaurentSeries r = *this;
  r.trunc_ = std::min(trunc_, degree);
  if (r.trunc_ != kExact) r.lower_ = std::min(lower_, r.trunc_);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::shifted(int d) const {
  LaurentSeries r;
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace_hint(r.coeffs_.end(), e + d, c);
  r.lower_ = lower_ + d;
  r.trunc_ = is_exact() ? kExact : trunc_ + d;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const bool was_exact_zero = is_exact() && coeffs_.empty();
  trunc_ = std::min(trunc_, o.trunc_);
  lower_ = was_exact_zero ? o.lower_ : (o.is_exact() && o.coeffs_.empty() ? lower_ : std::min(lower_, o.lower_));
  for (const auto& [e, c] : o.coeffs_) {
    if (e > trunc_) break;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator-(const LaurentSeries& a) {
  LaurentSeries r = a;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries r;
  const bool a_zero = a.is_exact() && a.coeffs_.empty();
  const bool b_zero = b.is_exact() && b.coeffs_.empty();
  if (a_zero || b_zero) return r;
  long t = LaurentSeries::kExact;
  if (!a.is_exact()) t = std::min<long>(t, static_cast<long>(a.trunc_) + b.lower_);
  if (!b.is_exact()) t = std::min<long>(t, static_cast<long>(b.trunc_) + a.lower_);
  r.trunc_ = static_cast<int>(t);
  r.lower_ = a.lower_ + b.lower_;
  for (const auto& [ea, ca] : a.coeffs_) {
    if (r.trunc_ != LaurentSeries::kExact && ea + b.lower_ > r.trunc_) break;
    for (const auto& [eb, cb] : b.coeffs_) {
      const int e = ea + eb;
      if (e > r.trunc_) break;
      auto [it, inserted] = r.coeffs_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  r.normalize();
  return r;
}

SeriesComparison LaurentSeries::compare(const LaurentSeries& o) const {
  SeriesComparison cmp;
  cmp.window_high = std::min(trunc_, o.trunc_);
  int lo = std::min(lower_, o.lower_);
  cmp.window_low = lo;
  auto check = [&](const std::map<int, Integer>& x, const LaurentSeries& other) {
    for (const auto& [e, c] : x) {
      if (e > cmp.window_high) break;
      if (other.coeff(e) != c) {
        if (cmp.equal || e < cmp.first_mismatch) cmp.first_mismatch = e;
        cmp.equal = false;
        return;
      }
    }
  };
  check(coeffs_, o);
  check(o.coeffs_, *this);
  return cmp;
}

std::string LaurentSeries::to_string() const {
  std::string s = known_part().to_string();
  if (!is_exact()) s += " + O(q^" + std::to_string(trunc_ + 1) + ")";
  return s;
}

LaurentSeries geometric_inverse(const LaurentPoly& poly, int degree) {
  if (poly.is_zero()) throw std::invalid_argument("geometric_inverse: zero polynomial");
  const int m = poly.min_degree();
  const Integer lead = poly.coeff(m);
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("geometric_inverse: lowest coefficient " + lead.get_str() +
                                " is not a unit");
  // s = q^{-m} * sum_k t_k q^k with (sum_k t_k q^k)(poly * q^{-m}) = 1.
  const int top = degree - m;  // keeps s*poly known through `degree`
  std::map<int, Integer> s;
  const auto& pc = poly.coefficients();
  for (int e = -m; e <= top; ++e) {
    // coefficient of q^{e+m} in s*poly must be [e+m == 0]
    Integer acc = (e + m == 0) ? Integer(1) : Integer(0);
    for (const auto& [pe, c] : pc) {
      if (pe == m) continue;
      auto it = s.find(e + m - pe);
      if (it != s.end()) acc -= c * it->second;
    }
    Integer v = acc * lead;  // lead is +-1, so 1/lead == lead
    if (v != 0) s.emplace(e, v);
  }
  return LaurentSeries(s, -m, top);
}

LaurentSeries exact_divide(const LaurentSeries& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (num.is_exact()) return LaurentSeries(exact_divide(num.known_part(), den));
  const int m = den.min_degree();
  const Integer lead = den.coeff(m);
  const int qlow = num.lower_bound() - m;
  const int qtop = num.truncation_degree() - m;
  std::map<int, Integer> quot;
  const auto& dc = den.coefficients();
  for (int e = qlow; e <= qtop; ++e) {
    Integer acc = num.coeff(e + m);
    for (const auto& [de, c] : dc) {
      if (de == m) continue;
      auto it = quot.find(e + m - de);
      if (it != quot.end()) acc -= c * it->second;
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t()))
      throw InexactDivision("exact_divide: coefficient not divisible by leading term");
    Integer v = acc / lead;
    if (v != 0) quot.emplace(e, v);
  }
  return LaurentSeries(quot, qlow, qtop);
}

LaurentSeries bar(const LaurentSeries& x) {
  if (!x.is_exact()) throw TruncationError("bar involution needs an exact series");
  return LaurentSeries(bar(x.known_part()));
}

}  // namespace klr
