#include "klr/convex.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klr {

const char* to_symbol(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "<";
    case Ordering::Greater:
      return ">";
    case Ordering::Equivalent:
      return "~";
  }
  return "?";
}

// ------------------------------------------------------------ ConvexPreorder

ConvexPreorder::ConvexPreorder(std::shared_ptr<const CartanData> cartan,
                               std::vector<std::vector<long>> functionals)
    : cartan_(std::move(cartan)), given_(std::move(functionals)) {
  if (!cartan_) throw std::invalid_argument("ConvexPreorder: null Cartan data");
  const std::size_t n = cartan_->num_vertices();
  if (given_.empty()) throw std::invalid_argument("ConvexPreorder: need at least one functional");
  for (const auto& f : given_)
    if (f.size() != n) throw std::invalid_argument("ConvexPreorder: functional has wrong length");
  for (long c : given_.front())
    if (c <= 0) throw std::invalid_argument("ConvexPreorder: first functional must be positive on simple roots");
  all_ = given_;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    all_.push_back(std::move(e));
  }
}

ConvexPreorder ConvexPreorder::slope(std::shared_ptr<const CartanData> cartan,
                                     const std::vector<std::vector<long>>& after_height) {
  std::vector<std::vector<long>> fs;
  fs.emplace_back(cartan->num_vertices(), 1L);
  fs.insert(fs.end(), after_height.begin(), after_height.end());
  return ConvexPreorder(std::move(cartan), std::move(fs));
}

long ConvexPreorder::eval(std::size_t k, const RootVector& beta) const {
  long s = 0;
  const auto& f = all_[k];
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * beta[i];
  return s;
}

Ordering ConvexPreorder::compare_unchecked(const RootVector& beta, const RootVector& gamma) const {
  const long fb = eval(0, beta), fg = eval(0, gamma);
  for (std::size_t k = 1; k < all_.size(); ++k) {
    // f_k(b)/f_1(b) vs f_k(g)/f_1(g), both denominators positive
    const long lhs = eval(k, beta) * fg;
    const long rhs = eval(k, gamma) * fb;
    if (lhs != rhs) return lhs > rhs ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equivalent;
}

Ordering ConvexPreorder::compare(const RootVector& beta, const RootVector& gamma) const {
  if (!cartan_->is_root(beta)) throw std::invalid_argument("compare: " + beta.to_string() + " is not a positive root");
  if (!cartan_->is_root(gamma)) throw std::invalid_argument("compare: " + gamma.to_string() + " is not a positive root");
  return compare_unchecked(beta, gamma);
}

RootComparator ConvexPreorder::comparator() const {
  return [self = *this](const RootVector& b, const RootVector& g) { return self.compare_unchecked(b, g); };
}

void ConvexPreorder::sort_descending(std::vector<RootVector>& roots) const {
  std::stable_sort(roots.begin(), roots.end(),
                   [this](const RootVector& a, const RootVector& b) { return greater(a, b); });
}

// ---------------------------------------------------------------- convexity

Report verify_convexity(const CartanData& cartan, const RootComparator& cmp, int max_height) {
  Report rep;
  rep.name = "convexity";
  rep.window = "height <= " + std::to_string(max_height);
  const auto roots = cartan.positive_roots_upto(max_height);
  const std::size_t n = roots.size();
  std::vector<std::vector<Ordering>> table(n, std::vector<Ordering>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = cmp(roots[a], roots[b]);

  auto name = [&](std::size_t k) { return roots[k].to_string(); };
  std::map<RootVector, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index.emplace(roots[k], k);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Ordering o = table[a][b];
      rep.check(table[b][a] == reverse(o), "inconsistent comparator on (" + name(a) + ", " + name(b) + ")");
      const bool both_im = cartan.is_imaginary_root(roots[a]) && cartan.is_imaginary_root(roots[b]);
      if (a != b)
        rep.check((o == Ordering::Equivalent) == both_im,
                  "equivalence axiom fails on (" + name(a) + ", " + name(b) + ")");
      if (o == Ordering::Greater) continue;
      const RootVector s = roots[a] + roots[b];
      auto it = index.find(s);
      if (it == index.end()) continue;  // not a root, or above the window
      const std::size_t c = it->second;
      rep.check(table[a][c] != Ordering::Greater && table[c][b] != Ordering::Greater,
                "convexity fails on triple (" + name(a) + ", " + name(b) + ", " + name(c) + ")");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == Ordering::Greater) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (table[b][c] == Ordering::Greater) continue;
        if (table[a][c] == Ordering::Greater)
          rep.fail("transitivity fails on (" + name(a) + ", " + name(b) + ", " + name(c) + ")");
      }
    }
  return rep;
}

// --------------------------------------------------------------- gamma data

GammaData gamma_data(const ConvexPreorder& order, int max_height) {
  const CartanData& cd = order.cartan();
  const RootVector& delta = cd.delta();
  if (max_height < cd.delta_height())
    throw std::invalid_argument("gamma_data: height window must reach ht(delta)");
  std::set<RootVector> p_set;
  for (const auto& beta : cd.positive_roots_upto(max_height))
    if (cd.is_real_root(beta) && order.greater(beta, delta)) p_set.insert(cd.project(beta));

  for (const auto& beta : cd.finite_positive_roots()) {
    const bool has_pos = p_set.count(beta) > 0, has_neg = p_set.count(-beta) > 0;
    if (has_pos == has_neg)
      throw std::runtime_error("gamma_data: p(Phi_{>delta}) is not a positive system (at " + beta.to_string() + ")");
  }
  if (p_set.size() != cd.finite_positive_roots().size())
    throw std::runtime_error("gamma_data: p(Phi_{>delta}) has the wrong size");

  GammaData g;
  const std::size_t l = static_cast<std::size_t>(cd.rank());
  const std::size_t cap = cd.finite_positive_roots().size() + 1;
  while (true) {
    std::size_t descent = 0;
    for (std::size_t i = 1; i <= l && descent == 0; ++i)
      if (!p_set.count(cd.simple_root(i))) descent = i;
    if (descent == 0) break;
    if (g.w_word.size() >= cap) throw std::runtime_error("gamma_data: descent did not terminate");
    std::set<RootVector> next;
    for (const auto& v : p_set) next.insert(cd.reflect(descent, v));
    p_set = std::move(next);
    g.w_word.push_back(static_cast<int>(descent));
  }
  for (std::size_t i = 1; i <= l; ++i) {
    RootVector v = cd.simple_root(i);
    for (auto it = g.w_word.rbegin(); it != g.w_word.rend(); ++it) v = cd.reflect(static_cast<std::size_t>(*it), v);
    g.gamma.push_back(v);
    g.gamma_plus.push_back(cd.hat_lift(v));
    g.gamma_minus.push_back(cd.hat_lift(-v));
  }
  return g;
}

Report verify_gamma_data(const ConvexPreorder& order, const GammaData& g, int max_height) {
  const CartanData& cd = order.cartan();
  Report rep;
  rep.name = "gamma-data";
  rep.window = "height <= " + std::to_string(max_height);
  const RootVector& delta = cd.delta();
  for (std::size_t k = 0; k < g.gamma.size(); ++k) {
    const std::string tag = "i=" + std::to_string(k + 1) + ": ";
    const auto& gp = g.gamma_plus[k];
    const auto& gm = g.gamma_minus[k];
    rep.check(gp + gm == delta, tag + "gamma+ + gamma- != delta");
    rep.check(cd.is_real_root(gp) && cd.is_real_root(gm), tag + "gamma+- not real");
    rep.check(order.compare(gp, delta) == Ordering::Greater, tag + "gamma+ not above delta");
    rep.check(order.compare(delta, gm) == Ordering::Greater, tag + "gamma- not below delta");
    rep.check(cd.project(gp) == g.gamma[k], tag + "p(gamma+) != gamma");
  }
  // Balanced iff every projected root above delta is positive.
  bool balanced = true;
  for (const auto& beta : cd.positive_roots_upto(max_height))
    if (cd.is_real_root(beta) && order.greater(beta, delta) && !cd.project(beta).is_nonnegative()) balanced = false;
  rep.check(balanced == g.balanced(), "balanced predicate disagrees with w = e");
  return rep;
}

// ------------------------------------------------------------ special order

namespace {

// Integer inverse of a unimodular matrix (rows = coefficient functionals).
std::vector<std::vector<long>> unimodular_inverse(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw std::invalid_argument("special_order: base vectors are linearly dependent");
    std::swap(a[p], a[col]);
    const mpq_class piv = a[col][col];
    for (auto& v : a[col]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<long>> inv(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i][n + j];
      if (v.get_den() != 1) throw std::invalid_argument("special_order: base is not a Z-basis of the root lattice");
      inv[i][j] = v.get_num().get_si();
    }
  return inv;
}

}  // namespace

ConvexPreorder special_order(std::shared_ptr<const CartanData> cartan, const std::vector<RootVector>& base,
                             const RootVector& alpha, int max_height) {
  const CartanData& cd = *cartan;
  const std::size_t l = static_cast<std::size_t>(cd.rank());
  const std::size_t n = cd.num_vertices();
  if (base.size() != l) throw std::invalid_argument("special_order: base must have l elements");
  std::size_t alpha_pos = l;
  for (std::size_t j = 0; j < l; ++j) {
    if (!cd.is_finite_root(base[j])) throw std::invalid_argument("special_order: base element is not in Phi'");
    if (base[j] == alpha) alpha_pos = j;
  }
  if (alpha_pos == l) throw std::invalid_argument("special_order: alpha is not in the base");

  // B has the base vectors as columns (finite coordinates 1..l); coefficients
  // of a finite vector v in the base are B^{-1} v.
  std::vector<std::vector<long>> b(l, std::vector<long>(l));
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t k = 0; k < l; ++k) b[k][j] = base[j][k + 1];
  const auto inv = unimodular_inverse(b);

  // c_j(beta) = sum_k inv[j][k] (beta_k - beta_0 delta_k): linear, kills delta.
  auto coefficient_functional = [&](std::size_t j) {
    std::vector<long> f(n, 0);
    for (std::size_t k = 0; k < l; ++k) {
      f[k + 1] = inv[j][k];
      f[0] -= inv[j][k] * cd.delta()[k + 1];
    }
    return f;
  };
  std::vector<long> away(n, 0);
  for (std::size_t j = 0; j < l; ++j) {
    if (j == alpha_pos) continue;
    const auto f = coefficient_functional(j);
    for (std::size_t k = 0; k < n; ++k) away[k] += f[k];
  }
  ConvexPreorder order = ConvexPreorder::slope(cartan, {away, coefficient_functional(alpha_pos)});
  Report rep = verify_special_order(order, base, alpha, max_height);
  rep.absorb(verify_convexity(order, max_height));
  if (!rep.passed) throw std::runtime_error("special_order: verification failed: " + rep.first_failure());
  return order;
}

Report verify_special_order(const ConvexPreorder& order, const std::vector<RootVector>& base,
                            const RootVector& alpha, int max_height) {
  const CartanData& cd = order.cartan();
  const RootVector& delta = cd.delta();
  Report rep;
  rep.name = "special-order";
  rep.window = "height <= " + std::to_string(max_height);

  const GammaData g = gamma_data(order, std::max(max_height, cd.delta_height()));
  std::set<RootVector> got(g.gamma.begin(), g.gamma.end());
  std::set<RootVector> want(base.begin(), base.end());
  rep.check(got == want, "Delta_{>delta} differs from the requested base");

  const RootVector top = cd.hat_lift(alpha);
  const RootVector bottom = cd.hat_lift(-alpha);
  // Towers: top > top+delta > ... > delta > ... > bottom+delta > bottom.
  for (RootVector a = top; (a + delta).height() <= max_height; a += delta)
    rep.check(order.greater(a, a + delta), "upper tower not decreasing at " + a.to_string());
  for (RootVector a = bottom; (a + delta).height() <= max_height; a += delta)
    rep.check(order.greater(a + delta, a), "lower tower not increasing at " + a.to_string());
  for (RootVector a = top; a.height() <= max_height; a += delta)
    rep.check(order.greater(a, delta), "upper tower meets delta at " + a.to_string());
  for (RootVector a = bottom; a.height() <= max_height; a += delta)
    rep.check(order.greater(delta, a), "lower tower meets delta at " + a.to_string());

  for (const auto& beta : cd.positive_roots_upto(max_height)) {
    if (!cd.is_real_root(beta)) continue;
    const RootVector pb = cd.project(beta);
    if (pb == alpha || pb == -alpha) continue;
    rep.check(order.greater(beta, top) || order.greater(bottom, beta),
              beta.to_string() + " falls between the towers");
  }
  return rep;
}

// -------------------------------------------------------------- sum oracle

SumOracle::SumOracle(std::vector<RootVector> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (!p.is_positive()) throw std::invalid_argument("SumOracle: parts must be positive");
}

bool SumOracle::representable(const RootVector& target) const {
  if (target.is_zero()) return true;
  if (!target.is_nonnegative()) return false;
  if (auto it = memo_.find(target); it != memo_.end()) return it->second;
  bool ok = false;
  for (const auto& p : parts_) {
    if (p.fits_in(target) && representable(target - p)) {
      ok = true;
      break;
    }
  }
  memo_.emplace(target, ok);
  return ok;
}

std::vector<RootVector> roots_preceq(const ConvexPreorder& order, const RootVector& pivot, int max_height) {
  std::vector<RootVector> out;
  for (auto& b : order.cartan().positive_roots_upto(max_height))
    if (order.preceq(b, pivot)) out.push_back(std::move(b));
  return out;
}

std::vector<RootVector> roots_succeq(const ConvexPreorder& order, const RootVector& pivot, int max_height) {
  std::vector<RootVector> out;
  for (auto& b : order.cartan().positive_roots_upto(max_height))
    if (order.preceq(pivot, b)) out.push_back(std::move(b));
  return out;
}

// ------------------------------------------------------ exhaustive lemmas

Report verify_lemma_diff(const ConvexPreorder& order, const GammaData& g, int i, int max_height) {
  Report rep;
  rep.name = "gamma-difference i=" + std::to_string(i);
  rep.window = "height <= " + std::to_string(max_height);
  const RootVector& gp = g.plus(i);
  const RootVector& gm = g.minus(i);
  if (max_height < std::max(gp.height(), gm.height())) {
    rep.fail("height window below ht(gamma_i^+-)");
    return rep;
  }
  struct Split {
    RootVector eta, theta;
  };
  auto splits = [&](const RootVector& target) {
    SumOracle below(roots_preceq(order, target, max_height));
    SumOracle above(roots_succeq(order, target, max_height));
    std::vector<Split> out;
    for (const auto& eta : lattice_box(target)) {
      const RootVector theta = target - eta;
      if (below.representable(eta) && above.representable(theta)) out.push_back({eta, theta});
    }
    return out;
  };
  const auto plus = splits(gp);
  const auto minus = splits(gm);
  for (const auto& p : plus)
    for (const auto& m : minus) {
      const bool hits = m.eta + p.eta == gm;
      const bool excused = p.eta.is_zero() && m.theta.is_zero();
      rep.check(!hits || excused, "eta^-=" + m.eta.to_string() + ", eta^+=" + p.eta.to_string() +
                                      " sums to gamma_i^-");
    }
  return rep;
}

Report verify_lemma_mgg(const ConvexPreorder& order, const GammaData& g, int i, int n, int max_height) {
  const CartanData& cd = order.cartan();
  const RootVector& delta = cd.delta();
  Report rep;
  rep.name = "delta-splittings i=" + std::to_string(i) + " n=" + std::to_string(n);
  rep.window = "height <= " + std::to_string(max_height);
  if (n < 1) {
    rep.fail("n must be positive");
    return rep;
  }
  if (max_height < cd.delta_height()) {
    rep.fail("height window below ht(delta)");
    return rep;
  }
  SumOracle below(roots_preceq(order, delta, max_height));
  SumOracle above(roots_succeq(order, delta, max_height));
  std::vector<RootVector> minus_parts;
  for (const auto& t : lattice_box(delta))
    if (below.representable(t) && above.representable(delta - t)) minus_parts.push_back(t);

  const RootVector& gm = g.minus(i);
  const RootVector target = n * gm;
  // Nondecreasing index tuples = multisets of splittings.
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  const std::size_t m = minus_parts.size();
  while (true) {
    RootVector sum = cd.zero();
    for (auto k : idx) sum += minus_parts[k];
    if (sum == target) {
      bool forced = true;
      for (auto k : idx) forced = forced && minus_parts[k] == gm;
      std::ostringstream os;
      for (auto k : idx) os << "(" << minus_parts[k].to_string() << ")";
      rep.check(forced, "splitting " + os.str() + " is not forced");
    }
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) --pos;
    if (pos < 0) break;
    const std::size_t v = ++idx[static_cast<std::size_t>(pos)];
    for (std::size_t k = static_cast<std::size_t>(pos) + 1; k < idx.size(); ++k) idx[k] = v;
  }
  if (rep.checks == 0) rep.fail("no splitting found; gamma_i^- itself should qualify");
  return rep;
}

}  // namespace klr
