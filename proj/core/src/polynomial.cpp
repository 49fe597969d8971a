#include "klr/polynomial.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

Poly Poly::constant(std::size_t nvars, const Integer& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw std::out_of_range("variable index");
  Exponents e(nvars, 0);
  e[k] = 1;
  return monomial(std::move(e));
}

Poly Poly::monomial(Exponents e, const Integer& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Integer Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  if (nvars_ == 0 && terms_.empty()) nvars_ = e.size();
  if (e.size() != nvars_) throw std::invalid_argument("polynomial variable count mismatch");
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::times_monomial(const Exponents& m) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += m[k];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Poly Poly::swapped(std::size_t a, std::size_t b) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[a], f[b]);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Poly Poly::divided_difference(std::size_t a, std::size_t b) const {
  // y_a^p y_b^s - y_a^s y_b^p = (y_a - y_b) y_a^s y_b^s sum_{k<p-s} y_a^k y_b^{p-s-1-k}  (p > s)
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    const int p = e[a], s = e[b];
    if (p == s) continue;
    const int lo = std::min(p, s), gap = std::abs(p - s);
    const Integer sign = p > s ? c : Integer(-c);
    for (int k = 0; k < gap; ++k) {
      Exponents f = e;
      f[a] = lo + k;
      f[b] = lo + gap - 1 - k;
      r.add_term(f, sign);
    }
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    Integer a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (mono.empty()) os << a.get_str();
    else if (a == 1) os << mono;
    else os << a.get_str() << "*" << mono;
  }
  return os.str();
}

Poly q_polynomial(const CartanData& cd, int i, int j, std::size_t u, std::size_t v, std::size_t nvars) {
  Poly r(nvars);
  if (i == j) return r;
  const int cij = cd.cartan(i, j), cji = cd.cartan(j, i);
  if (cij == 0) return Poly::constant(nvars, 1);
  if (cd.rank() == 1) {
    // (u - v)(v - u)
    const Poly d = Poly::variable(nvars, u) - Poly::variable(nvars, v);
    return Integer(-1) * (d * d);
  }
  Exponents eu(nvars, 0), ev(nvars, 0);
  eu[u] = -cij;
  ev[v] = -cji;
  r.add_term(eu, cd.epsilon(i, j));
  r.add_term(ev, -cd.epsilon(i, j));
  return r;
}

Poly braid_correction(const CartanData& cd, int i, int j, std::size_t r, std::size_t nvars) {
  // Q(y_{r+2}, y_{r+1}) - s_{r,r+2} of itself equals the numerator exactly.
  return q_polynomial(cd, i, j, r + 2, r + 1, nvars).divided_difference(r + 2, r);
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == nvars) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = a;
      rec(k + 1, left - a);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace klr
