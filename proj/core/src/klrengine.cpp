#include "klr/klrengine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "klr/linalg.hpp"

namespace klr {

// ------------------------------------------------------------- permutations

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
  return inv;
}

Perm left_mul_simple(std::size_t r, const Perm& w) {
  Perm u = w;
  for (auto& x : u) {
    if (x == static_cast<int>(r)) x = static_cast<int>(r + 1);
    else if (x == static_cast<int>(r + 1)) x = static_cast<int>(r);
  }
  return u;
}

Perm perm_of_word(const ReducedWord& letters, std::size_t n) {
  Perm w = identity_perm(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = left_mul_simple(static_cast<std::size_t>(*it), w);
  return w;
}

Word act(const Perm& w, const Word& j) {
  Word out(j.size(), '\0');
  for (std::size_t p = 0; p < j.size(); ++p) out[static_cast<std::size_t>(w[p])] = j[p];
  return out;
}

std::vector<Word> words_of_weight(const CartanData& cd, const RootVector& theta) {
  if (!theta.is_nonnegative()) throw std::invalid_argument("weight must lie in Q_+");
  Word base;
  for (std::size_t i = 0; i < theta.size(); ++i) base.append(static_cast<std::size_t>(theta[i]), static_cast<char>(i));
  (void)cd;
  std::vector<Word> out;
  do out.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// --------------------------------------------------------- AlgebraElement

Integer AlgebraElement::coeff(const BasisTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Integer(0) : it->second;
}

void AlgebraElement::add(const BasisTerm& t, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

AlgebraElement operator*(const Integer& c, const AlgebraElement& a) {
  AlgebraElement r;
  if (c == 0) return r;
  for (const auto& [t, v] : a.terms_) r.terms_.emplace(t, c * v);
  return r;
}

// ---------------------------------------------------------------- engine

KlrEngine::KlrEngine(std::shared_ptr<const CartanData> cartan, RootVector theta)
    : cartan_(std::move(cartan)), theta_(std::move(theta)) {
  if (theta_.size() != cartan_->num_vertices()) throw std::invalid_argument("weight has wrong length");
  n_ = static_cast<std::size_t>(theta_.height());
  words_ = words_of_weight(*cartan_, theta_);
  Perm p = identity_perm(n_);
  do perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::sort(perms_.begin(), perms_.end(), [](const Perm& a, const Perm& b) {
    const int la = perm_length(a), lb = perm_length(b);
    return la != lb ? la < lb : a < b;
  });
  // Lexicographically smallest reduced word: smallest left descent, then recurse.
  for (const auto& w : perms_) {
    if (perm_length(w) == 0) {
      canon_[w] = "";
      continue;
    }
    std::vector<int> pos(n_);
    for (std::size_t k = 0; k < n_; ++k) pos[static_cast<std::size_t>(w[k])] = static_cast<int>(k);
    for (std::size_t r = 0; r + 1 < n_; ++r)
      if (pos[r] > pos[r + 1]) {
        canon_[w] = static_cast<char>(r) + canon_.at(left_mul_simple(r, w));
        break;
      }
  }
}

void KlrEngine::tick() {
  if (++steps_ > budget_) throw std::runtime_error("rewriting step budget exceeded");
}

int KlrEngine::psi_degree(const Perm& w, const Word& j) const {
  int d = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) d -= cartan_->letter_form(j[a], j[b]);
  return d;
}

int KlrEngine::degree(const BasisTerm& t) const {
  return psi_degree(t.w, t.j) + 2 * std::accumulate(t.m.begin(), t.m.end(), 0);
}

int KlrEngine::degree(const AlgebraElement& a) const {
  if (a.is_zero()) throw std::invalid_argument("zero has no degree");
  const int d = degree(a.terms().begin()->first);
  for (const auto& [t, c] : a.terms())
    if (degree(t) != d) throw std::invalid_argument("element is not homogeneous");
  return d;
}

AlgebraElement KlrEngine::basis(const Perm& w, const Exponents& m, const Word& j) const {
  AlgebraElement a;
  a.add({w, m, j}, 1);
  return a;
}

AlgebraElement KlrEngine::idempotent(const Word& j) const { return basis(identity_perm(n_), Exponents(n_, 0), j); }

AlgebraElement KlrEngine::one() const {
  AlgebraElement a;
  for (const auto& j : words_) a += idempotent(j);
  return a;
}

AlgebraElement KlrEngine::y(std::size_t t) const {
  if (t >= n_) throw std::out_of_range("y index");
  AlgebraElement a;
  Exponents m(n_, 0);
  m[t] = 1;
  for (const auto& j : words_) a.add({identity_perm(n_), m, j}, 1);
  return a;
}

AlgebraElement KlrEngine::psi(std::size_t r) const {
  if (r + 1 >= n_) throw std::out_of_range("psi index");
  AlgebraElement a;
  const Perm s = left_mul_simple(r, identity_perm(n_));
  for (const auto& j : words_) a.add({s, Exponents(n_, 0), j}, 1);
  return a;
}

AlgebraElement KlrEngine::poly(const Poly& p) const {
  AlgebraElement a;
  for (const auto& j : words_)
    for (const auto& [e, c] : p.terms()) a.add({identity_perm(n_), e, j}, c);
  return a;
}

AlgebraElement KlrEngine::left_psi(std::size_t r, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [t, c] : a.terms()) out += c * left_psi_basis(r, t);
  return out;
}

AlgebraElement KlrEngine::left_y(std::size_t t, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [b, c] : a.terms()) out += c * left_y_basis(t, b);
  return out;
}

AlgebraElement KlrEngine::left_poly(const Poly& p, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [e, c] : p.terms()) {
    AlgebraElement x = a;
    for (std::size_t t = 0; t < e.size(); ++t)
      for (int k = 0; k < e[t]; ++k) x = left_y(t, x);
    out += c * x;
  }
  return out;
}

AlgebraElement KlrEngine::left_mul(const Generator& g, const AlgebraElement& a) {
  return g.kind == Generator::Y ? left_y(g.index, a) : left_psi(g.index, a);
}

AlgebraElement KlrEngine::word_product(const std::vector<Generator>& gens, const Word& j) {
  AlgebraElement x = idempotent(j);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) x = left_mul(*it, x);
  return x;
}

AlgebraElement KlrEngine::psi_word(const ReducedWord& letters, const Exponents& m, const Word& j) {
  AlgebraElement x = basis(identity_perm(n_), m, j);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = left_psi(static_cast<std::size_t>(*it), x);
  return x;
}

AlgebraElement KlrEngine::multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ta, ca] : a.terms()) {
    AlgebraElement right;
    for (const auto& [tb, cb] : b.terms())
      if (act(tb.w, tb.j) == ta.j) right.add(tb, cb);
    if (right.is_zero()) continue;
    for (std::size_t t = 0; t < n_; ++t)
      for (int k = 0; k < ta.m[t]; ++k) right = left_y(t, right);
    const ReducedWord& word = canon_.at(ta.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) right = left_psi(static_cast<std::size_t>(*it), right);
    out += ca * right;
  }
  return out;
}

AlgebraElement KlrEngine::left_y_basis(std::size_t t, const BasisTerm& b) {
  const auto key = std::make_pair(t, b);
  if (auto it = y_memo_.find(key); it != y_memo_.end()) return it->second;
  tick();
  AlgebraElement out;
  const ReducedWord& word = canon_.at(b.w);
  if (word.empty()) {
    BasisTerm c = b;
    c.m[t] += 1;
    out.add(c, 1);
  } else {
    // y_t psi_r 1_i = psi_r y_{s_r(t)} 1_i + [i_r = i_{r+1}](delta_{t,r+1} - delta_{t,r}) 1_i
    const auto r = static_cast<std::size_t>(word[0]);
    const BasisTerm rest{left_mul_simple(r, b.w), b.m, b.j};
    const Word i = act(rest.w, rest.j);
    const std::size_t st = t == r ? r + 1 : t == r + 1 ? r : t;
    out = left_psi(r, left_y_basis(st, rest));
    if (i[r] == i[r + 1]) {
      const int c = (t == r + 1) - (t == r);
      if (c) out.add(rest, c);
    }
  }
  y_memo_.emplace(key, out);
  return out;
}

AlgebraElement KlrEngine::left_psi_basis(std::size_t r, const BasisTerm& t) {
  if (r + 1 >= n_) throw std::out_of_range("psi index");
  const auto key = std::make_pair(r, t);
  if (auto it = psi_memo_.find(key); it != psi_memo_.end()) return it->second;
  tick();
  AlgebraElement out;
  const Perm u = left_mul_simple(r, t.w);
  const ReducedWord& wt = canon_.at(t.w);
  if (perm_length(u) > perm_length(t.w)) {
    const ReducedWord lifted = static_cast<char>(r) + wt;
    out.add({u, t.m, t.j}, 1);
    if (lifted != canon_.at(u)) out += reduced_word_difference(lifted, canon_.at(u), t.m, t.j);
  } else {
    // psi_w = psi_r psi_u + (psi_{canon w} - psi_{r canon u}); psi_r^2 1_i = Q(y_r, y_{r+1}) 1_i.
    const ReducedWord target = static_cast<char>(r) + canon_.at(u);
    const AlgebraElement d = wt == target ? AlgebraElement() : reduced_word_difference(wt, target, t.m, t.j);
    const Word i = act(u, t.j);
    const Poly q = q_polynomial(*cartan_, i[r], i[r + 1], r, r + 1, n_);
    out = left_poly(q, basis(u, t.m, t.j));
    if (!d.is_zero()) out += left_psi(r, d);
  }
  psi_memo_.emplace(key, out);
  return out;
}

const std::vector<ReducedWord>& KlrEngine::braid_path(const ReducedWord& a, const ReducedWord& b) {
  const auto key = std::make_pair(a, b);
  if (auto it = path_memo_.find(key); it != path_memo_.end()) return it->second;
  // Breadth-first search over reduced words linked by commutation and braid moves.
  std::map<ReducedWord, ReducedWord> parent{{a, a}};
  std::deque<ReducedWord> queue{a};
  while (!queue.empty()) {
    const ReducedWord x = queue.front();
    queue.pop_front();
    if (x == b) break;
    auto visit = [&](ReducedWord y) {
      if (parent.emplace(y, x).second) queue.push_back(std::move(y));
    };
    for (std::size_t p = 0; p + 1 < x.size(); ++p)
      if (std::abs(x[p] - x[p + 1]) > 1) {
        ReducedWord y = x;
        std::swap(y[p], y[p + 1]);
        visit(std::move(y));
      }
    for (std::size_t p = 0; p + 2 < x.size(); ++p)
      if (x[p] == x[p + 2] && std::abs(x[p] - x[p + 1]) == 1) {
        ReducedWord y = x;
        y[p] = y[p + 2] = x[p + 1];
        y[p + 1] = x[p];
        visit(std::move(y));
      }
  }
  if (!parent.count(b)) throw std::logic_error("reduced words are not braid-connected");
  std::vector<ReducedWord> path{b};
  while (path.back() != a) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path_memo_.emplace(key, std::move(path)).first->second;
}

AlgebraElement KlrEngine::reduced_word_difference(const ReducedWord& a, const ReducedWord& b, const Exponents& m,
                                                  const Word& j) {
  const auto key = std::make_tuple(a, b, m, j);
  if (auto it = diff_memo_.find(key); it != diff_memo_.end()) return it->second;
  tick();
  const std::vector<ReducedWord> path = braid_path(a, b);
  AlgebraElement out;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const ReducedWord& x = path[s];
    const ReducedWord& z = path[s + 1];
    std::size_t p = 0;
    while (x[p] == z[p]) ++p;
    const bool braid = p + 2 < x.size() && x[p] == x[p + 2] && std::abs(x[p] - x[p + 1]) == 1 &&
                       z[p] == x[p + 1] && z[p + 1] == x[p] && z[p + 2] == x[p + 1];
    if (!braid) continue;  // commutation moves are exact
    // x = L T R with T = (c, c +- 1, c); psi_{r+1} psi_r psi_{r+1} - psi_r psi_{r+1} psi_r = [i_r = i_{r+2}] B.
    const auto lo = static_cast<std::size_t>(std::min(x[p], x[p + 1]));
    const ReducedWord R = x.substr(p + 3);
    const Word i = act(perm_of_word(R, n_), j);
    if (i[lo] != i[lo + 2]) continue;
    const Poly B = braid_correction(*cartan_, i[lo], i[lo + 1], lo, n_);
    const int sign = static_cast<std::size_t>(x[p]) == lo + 1 ? 1 : -1;
    AlgebraElement e = psi_word(R, m, j);
    e = left_poly(B, e);
    for (std::size_t k = p; k-- > 0;) e = left_psi(static_cast<std::size_t>(x[k]), e);
    out += Integer(sign) * e;
  }
  diff_memo_.emplace(key, out);
  return out;
}

LaurentSeries KlrEngine::graded_dim(const Word& i, const Word& j, int D) const {
  LaurentPoly num;
  for (const auto& w : perms_)
    if (act(w, i) == j) num += LaurentPoly::q(psi_degree(w, i));
  // Negative psi-degrees eat into the window of 1/(1-q^2), so widen it.
  LaurentSeries s(num);
  const LaurentSeries inv =
      geometric_inverse(LaurentPoly(1) - LaurentPoly::q(2), D + std::max(0, -num.min_degree()));
  for (std::size_t k = 0; k < n_; ++k) s = s * inv;
  return s.truncated(D);
}

AlgebraElement KlrEngine::random_element(std::mt19937& rng, int max_terms, int max_y_degree) const {
  AlgebraElement a;
  std::uniform_int_distribution<int> nterms(1, max_terms), coef(-3, 3), ydeg(0, max_y_degree);
  std::uniform_int_distribution<std::size_t> pw(0, perms_.size() - 1), pj(0, words_.size() - 1), pv(0, n_ ? n_ - 1 : 0);
  const int k = nterms(rng);
  for (int s = 0; s < k; ++s) {
    Exponents m(n_, 0);
    const int d = ydeg(rng);
    for (int q = 0; q < d && n_; ++q) m[pv(rng)] += 1;
    int c = coef(rng);
    if (c == 0) c = 1;
    a.add({perms_[pw(rng)], m, words_[pj(rng)]}, c);
  }
  return a;
}

std::string KlrEngine::to_string(const AlgebraElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : a.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Integer ac = abs(c);
    if (ac != 1) os << ac.get_str() << "*";
    for (char r : canon_.at(t.w)) os << "psi" << static_cast<int>(r) + 1 << "*";
    for (std::size_t k = 0; k < t.m.size(); ++k)
      if (t.m[k]) os << "y" << k + 1 << (t.m[k] > 1 ? "^" + std::to_string(t.m[k]) : "") << "*";
    os << "1_(" << word_to_string(t.j) << ")";
  }
  return os.str();
}

// ------------------------------------------------------------ polynomial oracle

PolyVector& operator+=(PolyVector& a, const PolyVector& b) {
  for (const auto& [w, p] : b) {
    auto it = a.find(w);
    if (it == a.end()) {
      if (!p.is_zero()) a.emplace(w, p);
      continue;
    }
    it->second += p;
    if (it->second.is_zero()) a.erase(it);
  }
  return a;
}

PolyVector operator-(const PolyVector& a, const PolyVector& b) {
  PolyVector r = a;
  for (const auto& [w, p] : b) {
    Poly& x = r[w];
    if (x.nvars() == 0) x = Poly(p.nvars());
    x -= p;
    if (x.is_zero()) r.erase(w);
  }
  return r;
}

bool is_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

PolyVector PolyRep::apply_y(std::size_t t, const PolyVector& v) const {
  PolyVector out;
  Exponents e(n_, 0);
  e[t] = 1;
  for (const auto& [w, p] : v)
    if (!p.is_zero()) out.emplace(w, p.times_monomial(e));
  return out;
}

PolyVector PolyRep::apply_psi(std::size_t r, const PolyVector& v) const {
  PolyVector out;
  for (const auto& [i, f] : v) {
    if (f.is_zero()) continue;
    Word si = i;
    std::swap(si[r], si[r + 1]);
    Poly g;
    if (i[r] == i[r + 1]) {
      g = f.divided_difference(r + 1, r);
    } else if (i[r] < i[r + 1]) {
      g = f.swapped(r, r + 1);
    } else {
      g = q_polynomial(*cartan_, i[r], i[r + 1], r + 1, r, n_) * f.swapped(r, r + 1);
    }
    if (!g.is_zero()) out += PolyVector{{si, g}};
  }
  return out;
}

PolyVector PolyRep::apply_poly(const Poly& p, const PolyVector& v) const {
  PolyVector out;
  for (const auto& [w, f] : v) {
    Poly g = p * f;
    if (!g.is_zero()) out.emplace(w, std::move(g));
  }
  return out;
}

PolyVector PolyRep::apply_term(const ReducedWord& letters, const Exponents& m, const Word& j,
                               const PolyVector& v) const {
  auto it = v.find(j);
  if (it == v.end() || it->second.is_zero()) return {};
  PolyVector x{{j, it->second.times_monomial(m)}};
  for (auto l = letters.rbegin(); l != letters.rend(); ++l) x = apply_psi(static_cast<std::size_t>(*l), x);
  return x;
}

PolyVector PolyRep::apply(const KlrEngine& e, const AlgebraElement& a, const PolyVector& v) const {
  PolyVector out;
  for (const auto& [t, c] : a.terms()) {
    PolyVector x = apply_term(e.reduced_word(t.w), t.m, t.j, v);
    for (auto& [w, p] : x) p *= c;
    out += x;
  }
  return out;
}

namespace {

std::vector<PolyVector> test_vectors(const std::vector<Word>& words, std::size_t n, int max_degree) {
  std::vector<PolyVector> out;
  for (const auto& i : words)
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& e : monomials_of_degree(n, d)) out.push_back({{i, Poly::monomial(e)}});
  return out;
}

}  // namespace

Report oracle_relation_check(std::shared_ptr<const CartanData> cartan, const RootVector& theta, int max_degree) {
  Report rep;
  rep.name = "klr-relations-oracle";
  rep.window = "monomial degree <= " + std::to_string(max_degree);
  const auto n = static_cast<std::size_t>(theta.height());
  const CartanData& cd = *cartan;
  PolyRep rho(cartan, n);
  const auto words = words_of_weight(cd, theta);
  for (const auto& i : words) {
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& e : monomials_of_degree(n, d)) {
        const PolyVector v{{i, Poly::monomial(e)}};
        const std::string at = " at 1_(" + word_to_string(i) + ") deg " + std::to_string(d);
        for (std::size_t r = 0; r + 1 < n; ++r) {
          Word si = i;
          std::swap(si[r], si[r + 1]);
          const PolyVector pv = rho.apply_psi(r, v);
          rep.check(std::all_of(pv.begin(), pv.end(), [&](const auto& kv) { return kv.first == si; }),
                    "psi_r 1_i = 1_{s_r i} psi_r" + at);
          // (y_t psi_r - psi_r y_{s_r t}) 1_i = [i_r = i_{r+1}](delta_{t,r+1} - delta_{t,r}) 1_i
          for (std::size_t t = 0; t < n; ++t) {
            const std::size_t st = t == r ? r + 1 : t == r + 1 ? r : t;
            PolyVector lhs = rho.apply_y(t, pv) - rho.apply_psi(r, rho.apply_y(st, v));
            PolyVector rhs;
            const int c = i[r] == i[r + 1] ? (t == r + 1) - (t == r) : 0;
            if (c) rhs = {{i, Integer(c) * Poly::monomial(e)}};
            rep.check(is_zero(lhs - rhs), "y-psi relation r=" + std::to_string(r + 1) + " t=" +
                                              std::to_string(t + 1) + at);
          }
          // psi_r^2 1_i = Q_{i_r i_{r+1}}(y_r, y_{r+1}) 1_i
          const Poly q = q_polynomial(cd, i[r], i[r + 1], r, r + 1, n);
          rep.check(is_zero(rho.apply_psi(r, pv) - rho.apply_poly(q, v)),
                    "quadratic relation r=" + std::to_string(r + 1) + at);
          for (std::size_t s = r + 2; s + 1 < n; ++s)
            rep.check(is_zero(rho.apply_psi(r, rho.apply_psi(s, v)) - rho.apply_psi(s, pv)),
                      "distant psi commute" + at);
          if (r + 2 < n) {
            const PolyVector a = rho.apply_psi(r + 1, rho.apply_psi(r, rho.apply_psi(r + 1, v)));
            const PolyVector b = rho.apply_psi(r, rho.apply_psi(r + 1, pv));
            PolyVector rhs;
            if (i[r] == i[r + 2]) rhs = rho.apply_poly(braid_correction(cd, i[r], i[r + 1], r, n), v);
            rep.check(is_zero((a - b) - rhs), "braid relation r=" + std::to_string(r + 1) + at);
          }
        }
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t u = t + 1; u < n; ++u)
            rep.check(is_zero(rho.apply_y(t, rho.apply_y(u, v)) - rho.apply_y(u, rho.apply_y(t, v))),
                      "y commute" + at);
      }
  }
  return rep;
}

bool oracle_equal(const KlrEngine& e, const AlgebraElement& a, const AlgebraElement& b, int max_degree) {
  PolyRep rho(e.cartan_ptr(), e.n());
  for (const auto& v : test_vectors(e.words(), e.n(), max_degree))
    if (!is_zero(rho.apply(e, a, v) - rho.apply(e, b, v))) return false;
  return true;
}

Report engine_oracle_check(KlrEngine& e, int count, int max_y_degree, int test_degree, unsigned seed) {
  Report rep;
  rep.name = "engine-vs-oracle";
  rep.window = "theta=" + e.theta().to_string() + " test degree <= " + std::to_string(test_degree);
  std::mt19937 rng(seed);
  PolyRep rho(e.cartan_ptr(), e.n());
  const auto tests = test_vectors(e.words(), e.n(), test_degree);
  for (int k = 0; k < count; ++k) {
    const AlgebraElement a = e.random_element(rng, 3, max_y_degree);
    const AlgebraElement b = e.random_element(rng, 3, max_y_degree);
    const AlgebraElement ab = e.multiply(a, b);
    bool ok = true;
    for (const auto& v : tests)
      if (!is_zero(rho.apply(e, ab, v) - rho.apply(e, a, rho.apply(e, b, v)))) {
        ok = false;
        break;
      }
    rep.check(ok, "product mismatch: a=" + e.to_string(a) + " b=" + e.to_string(b));
  }
  return rep;
}

Report dimension_rank_check(std::shared_ptr<const CartanData> cartan, const RootVector& theta, int D) {
  Report rep;
  rep.name = "graded-dimension-rank";
  rep.window = "q^" + std::to_string(D);
  KlrEngine e(cartan, theta);
  const std::size_t n = e.n();
  PolyRep rho(cartan, n);
  const int longest = static_cast<int>(n * (n - 1) / 2);
  // All psi-words up to the longest length.
  std::vector<ReducedWord> psi_words{""};
  for (std::size_t b = 0; b < psi_words.size(); ++b) {
    if (static_cast<int>(psi_words[b].size()) == longest) continue;
    for (std::size_t r = 0; r + 1 < n; ++r) psi_words.push_back(psi_words[b] + static_cast<char>(r));
  }
  // Probe inputs: all monomials up to a degree that separates operators of this size.
  const int probe = longest + 2;
  std::vector<Exponents> probes;
  for (int d = 0; d <= probe; ++d)
    for (auto& x : monomials_of_degree(n, d)) probes.push_back(std::move(x));
  auto degree_of = [&](const ReducedWord& w, const Word& i) {
    int deg = 0;
    Word cur = i;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto r = static_cast<std::size_t>(*it);
      deg -= cartan->letter_form(cur[r], cur[r + 1]);
      std::swap(cur[r], cur[r + 1]);
    }
    return std::make_pair(deg, cur);
  };
  for (const auto& i : e.words()) {
    // Operators 1_j (psi-word) y^m 1_i grouped by (j, degree).
    std::map<std::pair<Word, int>, std::vector<std::map<std::pair<std::size_t, Exponents>, Integer>>> images;
    for (const auto& w : psi_words) {
      const auto [dpsi, j] = degree_of(w, i);
      for (int ydeg = 0; dpsi + 2 * ydeg <= D; ++ydeg)
        for (const auto& m : monomials_of_degree(n, ydeg)) {
          std::map<std::pair<std::size_t, Exponents>, Integer> img;
          for (std::size_t k = 0; k < probes.size(); ++k) {
            const PolyVector out = rho.apply_term(w, m, i, {{i, Poly::monomial(probes[k])}});
            for (const auto& [word, p] : out)
              for (const auto& [ex, c] : p.terms()) img[{k, ex}] += c;
          }
          std::erase_if(img, [](const auto& kv) { return kv.second == 0; });
          images[{j, dpsi + 2 * ydeg}].push_back(std::move(img));
        }
    }
    for (const auto& j : e.words()) {
      const LaurentSeries dim = e.graded_dim(i, j, D);
      int lowest = 0;
      for (const auto& w : e.permutations()) lowest = std::min(lowest, e.psi_degree(w, i));
      for (int d = lowest; d <= D; ++d) {
        std::size_t r = 0;
        auto it = images.find({j, d});
        if (it != images.end()) {
          std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
          for (const auto& img : it->second)
            for (const auto& [k, c] : img) index.emplace(k, 0);
          std::size_t col = 0;
          for (auto& [k, v] : index) v = col++;
          RowSpace space(col);
          for (const auto& img : it->second) {
            QVector row(col);
            for (const auto& [k, c] : img) row[index.at(k)] = Rational(c);
            space.add(std::move(row));
          }
          r = space.rank();
        }
        const Integer expect = dim.coeff(d);
        rep.check(expect == static_cast<long>(r), "1_(" + word_to_string(j) + ") R 1_(" + word_to_string(i) +
                                                      ") degree " + std::to_string(d) + ": formula " +
                                                      expect.get_str() + " vs rank " + std::to_string(r));
      }
    }
  }
  return rep;
}

AlgebraElement central_element(const KlrEngine& e, int i0, const Word* drop_word) {
  AlgebraElement z;
  for (const auto& j : e.words()) {
    if (drop_word && *drop_word == j) continue;
    for (std::size_t p = 0; p < j.size(); ++p)
      if (j[p] == i0) {
        Exponents m(e.n(), 0);
        m[p] = 1;
        z.add({identity_perm(e.n()), m, j}, 1);
      }
  }
  return z;
}

Report central_element_check(KlrEngine& e, const AlgebraElement& z, int test_degree) {
  Report rep;
  rep.name = "central-element";
  rep.window = "theta=" + e.theta().to_string();
  std::vector<std::pair<std::string, AlgebraElement>> gens;
  for (const auto& j : e.words()) gens.emplace_back("1_(" + word_to_string(j) + ")", e.idempotent(j));
  for (std::size_t t = 0; t < e.n(); ++t) gens.emplace_back("y" + std::to_string(t + 1), e.y(t));
  for (std::size_t r = 0; r + 1 < e.n(); ++r) gens.emplace_back("psi" + std::to_string(r + 1), e.psi(r));
  for (const auto& [name, g] : gens) {
    const AlgebraElement c = e.multiply(z, g) - e.multiply(g, z);
    rep.check(c.is_zero(), "[z, " + name + "] = " + e.to_string(c));
    rep.check(oracle_equal(e, e.multiply(z, g), e.multiply(g, z), test_degree), "oracle: [z, " + name + "] != 0");
  }
  return rep;
}

}  // namespace klr
