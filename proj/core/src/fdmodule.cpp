#include "klr/fdmodule.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace klr {

QVector unit_vector(std::size_t dim, std::size_t k) {
  QVector v(dim);
  v.at(k) = 1;
  return v;
}

Character FdModule::character() const {
  Character c({theta});
  for (std::size_t k = 0; k < dim(); ++k) c.add(word[k], LaurentSeries(LaurentPoly::q(degree[k])));
  return c;
}

QMatrix FdModule::idempotent(const Word& i) const {
  QMatrix p(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (word[k] == i) p(k, k) = 1;
  return p;
}

QMatrix FdModule::term_matrix(const ReducedWord& letters, const Exponents& m) const {
  QMatrix a = QMatrix::identity(dim());
  for (std::size_t t = 0; t < m.size(); ++t)
    for (int k = 0; k < m[t]; ++k) a = y.at(t) * a;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) a = psi.at(static_cast<std::size_t>(*it)) * a;
  return a;
}

QMatrix FdModule::poly_matrix(const Poly& p) const {
  QMatrix out(dim(), dim());
  for (const auto& [e, c] : p.terms()) out += Rational(c) * term_matrix("", e);
  return out;
}

QMatrix FdModule::element_matrix(const KlrEngine& e, const AlgebraElement& a) const {
  QMatrix out(dim(), dim());
  for (const auto& [t, c] : a.terms())
    out += Rational(c) * (term_matrix(e.reduced_word(t.w), t.m) * idempotent(t.j));
  return out;
}

FdModule FdModule::shifted(int d) const {
  FdModule m = *this;
  for (auto& x : m.degree) x += d;
  return m;
}

FdModule one_dimensional(std::shared_ptr<const CartanData> cd, const Word& w, int degree) {
  FdModule m;
  m.theta = word_weight(*cd, w);
  m.cartan = std::move(cd);
  m.word = {w};
  m.degree = {degree};
  m.y.assign(w.size(), QMatrix(1, 1));
  m.psi.assign(w.empty() ? 0 : w.size() - 1, QMatrix(1, 1));
  return m;
}

FdModule letter_module(std::shared_ptr<const CartanData> cd, int i) { return one_dimensional(std::move(cd), make_word({i})); }

FdModule unit_module(std::shared_ptr<const CartanData> cd) { return one_dimensional(std::move(cd), Word()); }

namespace {

// u = d o x with d increasing on both blocks and x preserving them.
std::pair<Perm, Perm> coset_split(const Perm& u, std::size_t n1) {
  const std::size_t n = u.size();
  Perm d(n);
  std::vector<int> a(u.begin(), u.begin() + static_cast<long>(n1)), b(u.begin() + static_cast<long>(n1), u.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::copy(a.begin(), a.end(), d.begin());
  std::copy(b.begin(), b.end(), d.begin() + static_cast<long>(n1));
  std::vector<int> dinv(n);
  for (std::size_t k = 0; k < n; ++k) dinv[static_cast<std::size_t>(d[k])] = static_cast<int>(k);
  Perm x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = dinv[static_cast<std::size_t>(u[k])];
  return {d, x};
}

struct FactoredTerm {
  Perm d;
  Perm x;
  Exponents m;
  friend auto operator<=>(const FactoredTerm&, const FactoredTerm&) = default;
};

// Rewrites psi_{canon u} y^m 1_i as a sum of psi_{canon d} psi_{canon x} y^m 1_i.
void factor_term(KlrEngine& e, const BasisTerm& t, const Integer& c, std::size_t n1,
                 std::map<FactoredTerm, Integer>& out) {
  const auto [d, x] = coset_split(t.w, n1);
  out[{d, x, t.m}] += c;
  const ReducedWord target = e.reduced_word(d) + e.reduced_word(x);
  const ReducedWord& current = e.reduced_word(t.w);
  if (target == current) return;
  const AlgebraElement diff = e.reduced_word_difference(current, target, t.m, t.j);
  for (const auto& [s, cs] : diff.terms()) factor_term(e, s, c * cs, n1, out);
}

}  // namespace

FdModule induce(const FdModule& m1, const FdModule& m2) {
  if (m1.cartan->label() != m2.cartan->label()) throw std::invalid_argument("induce: different Cartan types");
  const std::size_t n1 = m1.n(), n2 = m2.n(), n = n1 + n2;
  KlrEngine e(m1.cartan, m1.theta + m2.theta);
  std::vector<Perm> cosets;
  for (const auto& w : e.permutations()) {
    bool minimal = true;
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (k + 1 != n1 && w[k] > w[k + 1]) minimal = false;
    if (minimal) cosets.push_back(w);
  }
  std::map<Perm, std::size_t> coset_index;
  for (std::size_t k = 0; k < cosets.size(); ++k) coset_index[cosets[k]] = k;
  const std::size_t d1 = m1.dim(), d2 = m2.dim(), dim = cosets.size() * d1 * d2;
  auto index = [&](std::size_t d, std::size_t b1, std::size_t b2) { return (d * d1 + b1) * d2 + b2; };

  FdModule m;
  m.cartan = m1.cartan;
  m.theta = m1.theta + m2.theta;
  m.word.resize(dim);
  m.degree.resize(dim);
  for (std::size_t d = 0; d < cosets.size(); ++d)
    for (std::size_t b1 = 0; b1 < d1; ++b1)
      for (std::size_t b2 = 0; b2 < d2; ++b2) {
        const Word inner = m1.word[b1] + m2.word[b2];
        m.word[index(d, b1, b2)] = act(cosets[d], inner);
        m.degree[index(d, b1, b2)] = e.psi_degree(cosets[d], inner) + m1.degree[b1] + m2.degree[b2];
      }

  // Parabolic action of psi_{canon x} y^m on M1 (x) M2, cached.
  std::map<std::pair<Perm, Exponents>, std::pair<QMatrix, QMatrix>> parabolic;
  auto parabolic_mats = [&](const Perm& x, const Exponents& mm) -> const std::pair<QMatrix, QMatrix>& {
    auto key = std::make_pair(x, mm);
    auto it = parabolic.find(key);
    if (it != parabolic.end()) return it->second;
    ReducedWord w1, w2;
    for (char r : e.reduced_word(x)) {
      if (static_cast<std::size_t>(r) + 1 < n1) w1 += r;
      else w2 += static_cast<char>(static_cast<std::size_t>(r) - n1);
    }
    Exponents e1(mm.begin(), mm.begin() + static_cast<long>(n1)), e2(mm.begin() + static_cast<long>(n1), mm.end());
    return parabolic.emplace(key, std::make_pair(m1.term_matrix(w1, e1), m2.term_matrix(w2, e2))).first->second;
  };

  auto generator_matrix = [&](const Generator& g) {
    QMatrix out(dim, dim);
    for (std::size_t d = 0; d < cosets.size(); ++d)
      for (std::size_t b1 = 0; b1 < d1; ++b1)
        for (std::size_t b2 = 0; b2 < d2; ++b2) {
          const std::size_t col = index(d, b1, b2);
          const Word inner = m1.word[b1] + m2.word[b2];
          const AlgebraElement r = e.left_mul(g, e.basis(cosets[d], Exponents(n, 0), inner));
          std::map<FactoredTerm, Integer> factored;
          for (const auto& [t, c] : r.terms()) factor_term(e, t, c, n1, factored);
          for (const auto& [ft, c] : factored) {
            if (c == 0) continue;
            const auto& [a1, a2] = parabolic_mats(ft.x, ft.m);
            const std::size_t dd = coset_index.at(ft.d);
            for (std::size_t r1 = 0; r1 < d1; ++r1) {
              if (a1(r1, b1) == 0) continue;
              for (std::size_t r2 = 0; r2 < d2; ++r2)
                if (a2(r2, b2) != 0) out(index(dd, r1, r2), col) += Rational(c) * a1(r1, b1) * a2(r2, b2);
            }
          }
        }
    return out;
  };
  for (std::size_t t = 0; t < n; ++t) m.y.push_back(generator_matrix({Generator::Y, t}));
  for (std::size_t r = 0; r + 1 < n; ++r) m.psi.push_back(generator_matrix({Generator::Psi, r}));
  return m;
}

QVector induced_vector(const FdModule& m1, const QVector& v1, const FdModule& m2, const QVector& v2,
                       std::size_t induced_dim) {
  QVector v(induced_dim);
  for (std::size_t b1 = 0; b1 < m1.dim(); ++b1)
    for (std::size_t b2 = 0; b2 < m2.dim(); ++b2) v[b1 * m2.dim() + b2] = v1[b1] * v2[b2];
  return v;
}

FdModule dual(const FdModule& m) {
  FdModule d = m;
  for (auto& x : d.degree) x = -x;
  for (auto& a : d.y) a = a.transposed();
  for (auto& a : d.psi) a = a.transposed();
  return d;
}

Report module_relation_check(const FdModule& m) {
  Report rep;
  rep.name = "module-relations";
  rep.window = "exact";
  const CartanData& cd = *m.cartan;
  const std::size_t n = m.n(), dim = m.dim();
  std::set<Word> present(m.word.begin(), m.word.end());
  auto sr = [](std::size_t r, std::size_t t) { return t == r ? r + 1 : t == r + 1 ? r : t; };
  for (std::size_t k = 0; k < dim; ++k)
    rep.check(word_weight(cd, m.word[k]) == m.theta, "basis vector outside I^theta");
  for (std::size_t t = 0; t < n; ++t) {
    // Grading and weight preservation.
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (m.y[t](r, c) != 0)
          rep.check(m.word[r] == m.word[c] && m.degree[r] == m.degree[c] + 2, "y_" + std::to_string(t + 1) +
                                                                                  " not homogeneous of degree 2");
    QMatrix p = QMatrix::identity(dim);
    for (std::size_t k = 0; k < dim; ++k) p = m.y[t] * p;
    rep.check(p.is_zero(), "y_" + std::to_string(t + 1) + " not nilpotent");
    for (std::size_t u = t + 1; u < n; ++u) rep.check(m.y[t] * m.y[u] == m.y[u] * m.y[t], "y's do not commute");
  }
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t c = 0; c < dim; ++c)
        if (m.psi[r](a, c) != 0) {
          Word sw = m.word[c];
          std::swap(sw[r], sw[r + 1]);
          rep.check(m.word[a] == sw, "psi_" + std::to_string(r + 1) + " breaks weight spaces");
          rep.check(m.degree[a] == m.degree[c] - cd.letter_form(m.word[c][r], m.word[c][r + 1]),
                    "psi_" + std::to_string(r + 1) + " has wrong degree");
        }
    for (std::size_t s = r + 2; s + 1 < n; ++s)
      rep.check(m.psi[r] * m.psi[s] == m.psi[s] * m.psi[r], "distant psi's do not commute");
  }
  for (const auto& i : present) {
    const QMatrix P = m.idempotent(i);
    const std::string at = " on 1_(" + word_to_string(i) + ")";
    for (std::size_t r = 0; r + 1 < n; ++r) {
      for (std::size_t t = 0; t < n; ++t) {
        const QMatrix lhs = (m.y[t] * m.psi[r] - m.psi[r] * m.y[sr(r, t)]) * P;
        QMatrix rhs(dim, dim);
        if (i[r] == i[r + 1]) rhs = Rational((t == r + 1) - (t == r)) * P;
        rep.check(lhs == rhs, "y-psi relation" + at);
      }
      const QMatrix q = m.poly_matrix(q_polynomial(cd, i[r], i[r + 1], r, r + 1, n));
      rep.check(m.psi[r] * m.psi[r] * P == q * P, "quadratic relation r=" + std::to_string(r + 1) + at);
      if (r + 2 < n) {
        const QMatrix lhs = (m.psi[r + 1] * m.psi[r] * m.psi[r + 1] - m.psi[r] * m.psi[r + 1] * m.psi[r]) * P;
        QMatrix rhs(dim, dim);
        if (i[r] == i[r + 2]) rhs = m.poly_matrix(braid_correction(cd, i[r], i[r + 1], r, n)) * P;
        rep.check(lhs == rhs, "braid relation r=" + std::to_string(r + 1) + at);
      }
    }
  }
  return rep;
}

namespace {

std::vector<QMatrix> action_generators(const FdModule& m) {
  std::vector<QMatrix> gens;
  std::set<Word> present(m.word.begin(), m.word.end());
  for (const auto& i : present) gens.push_back(m.idempotent(i));
  for (const auto& a : m.y) gens.push_back(a);
  for (const auto& a : m.psi) gens.push_back(a);
  return gens;
}

QVector flatten(const QMatrix& a) { return a.data(); }

// Basis of the image of R_theta in End(V): closure of the identity under left
// multiplication by generators.
std::vector<QMatrix> image_algebra(const FdModule& m) {
  const auto gens = action_generators(m);
  const std::size_t dim = m.dim();
  RowSpace span(dim * dim);
  std::vector<QMatrix> basis;
  const QMatrix id = QMatrix::identity(dim);
  span.add(flatten(id));
  basis.push_back(id);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& g : gens) {
      QMatrix p = g * basis[k];
      if (span.add(flatten(p))) basis.push_back(std::move(p));
    }
  return basis;
}

}  // namespace

std::size_t generated_dim(const FdModule& m, const std::vector<QVector>& gens) {
  RowSpace span(m.dim());
  std::vector<QVector> queue;
  for (const auto& g : gens)
    if (span.add(g)) queue.push_back(g);
  const auto ops = action_generators(m);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& a : ops) {
      QVector v = a.apply(queue[k]);
      if (span.add(v)) queue.push_back(std::move(v));
    }
  return span.rank();
}

FdModule head(const FdModule& m, const QVector& gen) {
  const std::size_t dim = m.dim();
  if (gen.size() != dim) throw std::invalid_argument("generator has wrong size");
  if (generated_dim(m, {gen}) != dim) throw std::invalid_argument("module is not generated by the given vector");
  const auto A = image_algebra(m);
  // rad A = kernel of the trace form (characteristic zero).
  QMatrix gram(A.size(), A.size());
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = a; b < A.size(); ++b) gram(a, b) = gram(b, a) = (A[a] * A[b]).trace();
  std::vector<QVector> radM;
  for (const auto& coeffs : nullspace(gram)) {
    QMatrix r(dim, dim);
    for (std::size_t a = 0; a < A.size(); ++a)
      if (coeffs[a] != 0) r += coeffs[a] * A[a];
    for (std::size_t k = 0; k < dim; ++k) radM.push_back(r.column(k));
  }
  // rad(A) V is graded, so its projection to each (word, degree) component is its
  // intersection with that component.
  std::map<std::pair<Word, int>, std::vector<std::size_t>> comps;
  for (std::size_t k = 0; k < dim; ++k) comps[{m.word[k], m.degree[k]}].push_back(k);
  std::vector<std::size_t> keep;                 // quotient basis as standard vectors
  std::vector<std::vector<QVector>> comp_basis;  // per component: sub basis then kept vectors
  std::vector<std::vector<std::size_t>> comp_members;
  std::vector<std::size_t> comp_sub_rank;
  for (const auto& [key, members] : comps) {
    RowSpace sub(members.size());
    for (const auto& v : radM) {
      QVector local(members.size());
      for (std::size_t a = 0; a < members.size(); ++a) local[a] = v[members[a]];
      sub.add(std::move(local));
    }
    std::vector<QVector> basis(sub.rows());
    const std::size_t sub_rank = basis.size();
    RowSpace all = sub;
    for (std::size_t a = 0; a < members.size(); ++a)
      if (all.add(unit_vector(members.size(), a))) {
        keep.push_back(members[a]);
        basis.push_back(unit_vector(members.size(), a));
      }
    comp_basis.push_back(std::move(basis));
    comp_members.push_back(members);
    comp_sub_rank.push_back(sub_rank);
  }
  std::map<std::size_t, std::size_t> keep_index;
  for (std::size_t q = 0; q < keep.size(); ++q) keep_index[keep[q]] = q;

  // Coordinates of v modulo rad(A) V on the kept vectors.
  auto reduce = [&](const QVector& v) {
    QVector out(keep.size());
    for (std::size_t cid = 0; cid < comp_basis.size(); ++cid) {
      const auto& members = comp_members[cid];
      QVector local(members.size());
      bool any = false;
      for (std::size_t a = 0; a < members.size(); ++a) {
        local[a] = v[members[a]];
        any = any || local[a] != 0;
      }
      if (!any) continue;
      const auto& basis = comp_basis[cid];
      QMatrix B(members.size(), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < members.size(); ++r) B(r, c) = basis[c][r];
      QVector x;
      if (!solve(B, local, x)) throw std::logic_error("head: component basis is not spanning");
      std::size_t q = comp_sub_rank[cid];
      for (std::size_t a = 0; a < members.size(); ++a)
        if (keep_index.count(members[a])) out[keep_index.at(members[a])] = x[q++];
    }
    return out;
  };

  FdModule h;
  h.cartan = m.cartan;
  h.theta = m.theta;
  for (auto k : keep) {
    h.word.push_back(m.word[k]);
    h.degree.push_back(m.degree[k]);
  }
  auto quotient_matrix = [&](const QMatrix& a) {
    QMatrix out(keep.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
      const QVector image = reduce(a.column(keep[c]));
      for (std::size_t r = 0; r < keep.size(); ++r) out(r, c) = image[r];
    }
    return out;
  };
  for (const auto& a : m.y) h.y.push_back(quotient_matrix(a));
  for (const auto& a : m.psi) h.psi.push_back(quotient_matrix(a));
  return h;
}

Character head_character(const FdModule& m, const QVector& gen) { return head(m, gen).character(); }

}  // namespace klr
