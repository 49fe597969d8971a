#include "klr/strata.hpp"

#include <algorithm>
#include <sstream>

#include "klr/klrengine.hpp"
#include "klr/linalg.hpp"

namespace klr {

// ------------------------------------------------------------ semicuspidal words

SemicuspidalContext::SemicuspidalContext(ConvexPreorder order, RootVector alpha, int n)
    : order_(std::move(order)),
      alpha_(std::move(alpha)),
      n_(n),
      theta_(n * alpha_),
      below_(roots_preceq(order_, alpha_, theta_.height())),
      above_(roots_succeq(order_, alpha_, theta_.height())) {
  if (n < 1 || !order_.cartan().is_indivisible(alpha_))
    throw std::invalid_argument("SemicuspidalContext: needs an indivisible root and n >= 1");
  for (const auto& w : words_of_weight(order_.cartan(), theta_)) (is_semicuspidal(w) ? sc_ : nsc_).push_back(w);
}

bool SemicuspidalContext::is_semicuspidal(const Word& w) const {
  const CartanData& cd = order_.cartan();
  RootVector prefix = cd.zero();
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    prefix += cd.simple_root(static_cast<std::size_t>(w[k]));
    if (!below_.representable(prefix) || !above_.representable(theta_ - prefix)) return false;
  }
  return true;
}

bool is_semicuspidal_word(const SemicuspidalContext& ctx, const Word& w) { return ctx.is_semicuspidal(w); }

namespace {

Exponents zeros(std::size_t n) { return Exponents(n, 0); }

LaurentSeries block_dim(KlrEngine& e, const SemicuspidalContext& ctx, const Word& i, const Word& j, int D) {
  if (!ctx.is_semicuspidal(i) || !ctx.is_semicuspidal(j)) return {};
  const std::size_t n = e.n();
  const auto& perms = e.permutations();
  auto between = [&](const Word& from, const Word& to) {
    std::vector<const Perm*> out;
    for (const auto& w : perms)
      if (act(w, from) == to) out.push_back(&w);
    return out;
  };
  const auto direct = between(i, j);
  if (direct.empty()) return {};
  int lo = INT_MAX;
  for (const Perm* w : direct) lo = std::min(lo, e.psi_degree(*w, i));

  // Factorizations through each non-semicuspidal word k.
  struct Via {
    std::vector<const Perm*> left, right;
    Word k;
  };
  std::vector<Via> via;
  for (const auto& k : ctx.nsc_words()) {
    Via v{between(k, j), between(i, k), k};
    if (!v.left.empty() && !v.right.empty()) via.push_back(std::move(v));
  }

  std::map<int, Integer> coeffs;
  for (int d = lo; d <= D; ++d) {
    std::map<BasisTerm, std::size_t> index;
    for (const Perm* w : direct) {
      const int rest = d - e.psi_degree(*w, i);
      if (rest < 0 || rest % 2 != 0) continue;
      for (const auto& m : monomials_of_degree(n, rest / 2)) index.emplace(BasisTerm{*w, m, i}, index.size());
    }
    if (index.empty()) continue;
    RowSpace ideal(index.size());
    for (const auto& v : via)
      for (const Perm* a : v.left)
        for (const Perm* b : v.right) {
          const int rest = d - e.psi_degree(*a, v.k) - e.psi_degree(*b, i);
          if (rest < 0 || rest % 2 != 0) continue;
          const AlgebraElement left = e.basis(*a, zeros(n), v.k);
          for (const auto& m : monomials_of_degree(n, rest / 2)) {
            const AlgebraElement prod = e.multiply(left, e.basis(*b, m, i));
            if (prod.is_zero()) continue;
            QVector row(index.size());
            for (const auto& [t, c] : prod.terms()) row[index.at(t)] = Rational(c);
            ideal.add(std::move(row));
            if (ideal.rank() == index.size()) break;
          }
        }
    const auto quotient = static_cast<long>(index.size() - ideal.rank());
    if (quotient != 0) coeffs[d] = quotient;
  }
  return LaurentSeries(coeffs, lo, D);
}

}  // namespace

LaurentSeries semicuspidal_block_dim(const SemicuspidalContext& ctx, const Word& i, const Word& j, int D) {
  KlrEngine e(ctx.order().cartan_ptr(), ctx.theta());
  return block_dim(e, ctx, i, j, D);
}

LaurentSeries semicuspidal_dim(const SemicuspidalContext& ctx, int D) {
  KlrEngine e(ctx.order().cartan_ptr(), ctx.theta());
  LaurentSeries total(LaurentPoly(), D);
  for (const auto& i : ctx.sc_words())
    for (const auto& j : ctx.sc_words()) total += block_dim(e, ctx, i, j, D);
  return total;
}

// ------------------------------------------------------------ fractional characters

namespace {

LaurentPoly one_minus_q2() { return LaurentPoly(1) - LaurentPoly::q(2); }

LaurentPoly power(const LaurentPoly& p, int k) {
  LaurentPoly r(1);
  for (int t = 0; t < k; ++t) r *= p;
  return r;
}

}  // namespace

Character FractionalCharacter::expand(int D) const {
  if (power == 0) return numerator;
  const LaurentPoly den = power_of_denominator(power);
  Character out(numerator.blocks());
  for (const auto& [w, c] : numerator.entries()) {
    const LaurentPoly p = c.known_part();
    // The numerator is exact, so the product is known up to D + min degree.
    const LaurentSeries inv = geometric_inverse(den, D - p.min_degree());
    out.add(w, (LaurentSeries(p) * inv).truncated(D));
  }
  return out;
}

LaurentPoly power_of_denominator(int k) { return power(one_minus_q2(), k); }

FractionalCharacter shuffle(const CartanData& cd, const FractionalCharacter& a, const FractionalCharacter& b) {
  return {shuffle(cd, a.numerator, b.numerator), a.power + b.power};
}

// ------------------------------------------------------------ table

FractionalCharacter StandardCharTable::standard(const RootVector& alpha) const { return {simple(alpha), 1}; }

FractionalCharacter StandardCharTable::delta_standard_fraction(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > delta_standard.size())
    throw std::out_of_range("no Delta_{delta," + std::to_string(i) + "} in the table");
  return {delta_standard[static_cast<std::size_t>(i - 1)], 1};
}

const Character& StandardCharTable::simple(const RootVector& alpha) const {
  const auto it = cuspidal.find(alpha);
  if (it == cuspidal.end()) throw std::out_of_range("no entry for " + alpha.to_string() + " in the table");
  return it->second;
}

std::string RecursionStep::to_string() const {
  switch (how.kind) {
    case Provenance::Simple:
      return "simple";
    case Provenance::RealPair:
      return "pair(" + how.beta.to_string() + ", " + how.gamma.to_string() + ")";
    case Provenance::Tower:
      return std::string("tower") + (how.plus ? "+" : "-") + "(i=" + std::to_string(how.i) + ", " +
             how.beta.to_string() + ")";
  }
  return "?";
}

std::vector<RecursionStep> recursion_candidates(const ConvexPreorder& order, const GammaData& g,
                                                const RootVector& alpha) {
  const CartanData& cd = order.cartan();
  if (!cd.is_real_root(alpha)) throw std::invalid_argument("recursion_candidates: " + alpha.to_string() + " is not real");
  if (alpha.height() == 1) return {RecursionStep{}};
  std::vector<RecursionStep> out;
  for (const auto& mp : minimal_pairs(alpha, order)) {
    if (!mp.is_real_pair(cd)) continue;
    Provenance p;
    p.kind = Provenance::RealPair;
    p.beta = mp.parts[0].first;
    p.gamma = mp.parts[1].first;
    out.push_back({p});
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const RecursionStep& a, const RecursionStep& b) { return order.greater(a.how.beta, b.how.beta); });
  const RootVector& delta = cd.delta();
  for (int i = 1; i <= cd.rank(); ++i)
    for (int n = 1; n * delta.height() < alpha.height(); ++n)
      for (const bool plus : {true, false}) {
        const RootVector base = plus ? g.plus(i) : g.minus(i);
        if (alpha != base + n * delta) continue;
        Provenance p;
        p.kind = Provenance::Tower;
        p.beta = base + (n - 1) * delta;
        p.i = i;
        p.plus = plus;
        out.push_back({p});
      }
  return out;
}

namespace {

Character scaled(const LaurentPoly& c, const Character& x) { return LaurentSeries(c) * x; }

// Entrywise exact division; also enforces nonnegativity of the quotient.
Character divide_checked(const Character& x, const LaurentPoly& den, const std::string& what) {
  Character out(x.blocks());
  for (const auto& [w, c] : x.entries()) {
    LaurentPoly quotient;
    try {
      quotient = exact_divide(c.known_part(), den);
    } catch (const InexactDivision&) {
      throw InexactDivision(what + ": word " + word_to_string(w) + " coefficient " + c.to_string() +
                            " is not divisible by " + den.to_string());
    }
    if (!quotient.is_nonnegative())
      throw NegativeCoefficient(what + ": word " + word_to_string(w) + " gets " + quotient.to_string());
    out.add(w, LaurentSeries(quotient));
  }
  return out;
}

Character evaluate(const CartanData& cd, const StandardCharTable& t, const RecursionStep& step,
                   const RootVector& alpha) {
  const std::string what = "ch L(" + alpha.to_string() + ") via " + step.to_string();
  switch (step.how.kind) {
    case Provenance::Simple:
      return Character::word(cd, Word(1, static_cast<char>(std::find(alpha.coords().begin(), alpha.coords().end(), 1) -
                                                        alpha.coords().begin())));
    case Provenance::RealPair: {
      const Character& nb = t.simple(step.how.beta);
      const Character& ng = t.simple(step.how.gamma);
      const Character num = shuffle(cd, ng, nb) - scaled(LaurentPoly::q(1), shuffle(cd, nb, ng));
      return divide_checked(num, one_minus_q2(), what);
    }
    case Provenance::Tower: {
      const Character& nb = t.simple(step.how.beta);
      const Character& d = t.delta_standard_fraction(step.how.i).numerator;
      const Character num = step.how.plus ? shuffle(cd, d, nb) - shuffle(cd, nb, d) : shuffle(cd, nb, d) - shuffle(cd, d, nb);
      return divide_checked(num, one_minus_q2() * quantum_int(2), what);
    }
  }
  throw std::logic_error("unknown recursion step");
}

Character delta_numerator(const CartanData& cd, const StandardCharTable& t, int i) {
  const Character& nm = t.simple(t.gamma.minus(i));
  const Character& np = t.simple(t.gamma.plus(i));
  const Character num = shuffle(cd, nm, np) - scaled(LaurentPoly::q(2), shuffle(cd, np, nm));
  return divide_checked(num, one_minus_q2(), "ch Delta_{delta," + std::to_string(i) + "}");
}

int gamma_window(const CartanData& cd) { return 2 * cd.delta_height() + 2; }

}  // namespace

StandardCharTable build_standard_table(const ConvexPreorder& order, int cutoff, const TableOptions& opts) {
  const auto cdp = order.cartan_ptr();
  const CartanData& cd = *cdp;
  StandardCharTable t;
  t.cartan = cdp;
  t.cutoff = cutoff;
  t.gamma = gamma_data(order, gamma_window(cd));
  const int hd = cd.delta_height();
  const auto roots = cd.positive_roots_upto(cutoff);
  for (int h = 1; h <= cutoff; ++h) {
    if (h == hd)
      for (int i = 1; i <= cd.rank(); ++i) t.delta_standard.push_back(delta_numerator(cd, t, i));
    for (const auto& alpha : roots) {
      if (alpha.height() != h || !cd.is_real_root(alpha)) continue;
      const auto cands = recursion_candidates(order, t.gamma, alpha);
      if (cands.empty()) throw std::runtime_error("no recursion applies to " + alpha.to_string());
      std::size_t k = 0;
      if (const auto it = opts.choice.find(alpha); it != opts.choice.end()) k = std::min(it->second, cands.size() - 1);
      t.cuspidal[alpha] = evaluate(cd, t, cands[k], alpha);
      t.provenance[alpha] = cands[k].how;
    }
  }
  if (opts.minuscule && cutoff >= hd)
    for (int i = 1; i <= cd.rank(); ++i) t.minuscule.push_back(minuscule_module(order, t.gamma, i).character());
  return t;
}

Report recursion_independence_check(const ConvexPreorder& order, int cutoff) {
  const CartanData& cd = order.cartan();
  TableOptions opts;
  opts.minuscule = false;
  const StandardCharTable t = build_standard_table(order, cutoff, opts);
  Report r;
  r.name = "recursion independence";
  r.window = "height <= " + std::to_string(cutoff);
  for (const auto& [alpha, ch] : t.cuspidal) {
    const auto cands = recursion_candidates(order, t.gamma, alpha);
    for (std::size_t k = 1; k < cands.size(); ++k) {
      try {
        r.check(evaluate(cd, t, cands[k], alpha) == ch, alpha.to_string() + ": " + cands[k].to_string() +
                                                             " disagrees with " + cands[0].to_string());
      } catch (const std::exception& ex) {
        r.fail(alpha.to_string() + ": " + ex.what());
      }
    }
  }
  return r;
}

Report table_check(const StandardCharTable& t) {
  Report r;
  r.name = "standard table";
  r.window = "height <= " + std::to_string(t.cutoff);
  for (const auto& [alpha, ch] : t.cuspidal) {
    const std::string a = alpha.to_string();
    r.check(!ch.is_zero(), a + ": empty character");
    r.check(ch.is_exact(), a + ": not finite");
    r.check(ch.is_nonnegative(), a + ": negative coefficient");
    r.check(ch.is_bar_invariant(), a + ": not bar-invariant");
    r.check(ch.theta() == alpha, a + ": wrong weight");
  }
  for (std::size_t i = 0; i < t.delta_standard.size(); ++i) {
    r.check(t.delta_standard[i].is_nonnegative(), "Delta_{delta," + std::to_string(i + 1) + "}: negative coefficient");
    r.check(!t.delta_standard[i].is_zero(), "Delta_{delta," + std::to_string(i + 1) + "}: empty");
  }
  for (std::size_t i = 0; i < t.minuscule.size(); ++i)
    r.check(t.minuscule[i].is_bar_invariant(), "L_{delta," + std::to_string(i + 1) + "}: not bar-invariant");
  return r;
}

// ------------------------------------------------------------ root partitions

std::vector<RootVector> block_weights(const KostantPartition& xi) {
  std::vector<RootVector> out;
  for (const auto& [beta, x] : xi.parts) out.push_back(x * beta);
  return out;
}

namespace {

Character shuffle_power(const CartanData& cd, const Character& x, int n) {
  Character acc = x;
  for (int k = 1; k < n; ++k) acc = shuffle(cd, acc, x);
  return acc;
}

// The component i (1-based) of a multipartition of 1.
int single_box(const Multipartition& mu) {
  for (std::size_t c = 0; c < mu.size(); ++c)
    if (size(mu[c]) == 1) return static_cast<int>(c) + 1;
  throw std::invalid_argument("multipartition is not of size 1");
}

const ImaginaryData& imaginary_block(const StandardCharTable& t, const Multipartition& mu) {
  const auto it = t.imaginary.find(mu);
  if (it == t.imaginary.end())
    throw std::out_of_range("missing imaginary data for " + to_string(mu));
  return it->second;
}

template <typename T, typename Fn>
T fold_blocks(const CartanData& cd, const RootPartition& pi, Fn&& block) {
  std::optional<T> acc;
  for (const auto& [beta, x] : pi.kostant.parts) {
    T b = block(beta, x);
    acc = acc ? shuffle(cd, *acc, b) : std::move(b);
  }
  if (!acc) throw std::invalid_argument("empty root partition");
  return *acc;
}

}  // namespace

FractionalCharacter standard_fraction(const RootPartition& pi, const StandardCharTable& t) {
  const CartanData& cd = *t.cartan;
  return fold_blocks<FractionalCharacter>(cd, pi, [&](const RootVector& beta, int x) -> FractionalCharacter {
    if (beta == cd.delta()) {
      if (x == 1) return t.delta_standard_fraction(single_box(pi.mu));
      return imaginary_block(t, pi.mu).standard;
    }
    const Character num = shuffle_power(cd, t.simple(beta), x);
    if (x == 1) return {num, 1};
    return {divide_checked(num, quantum_factorial(x), "ch Delta(" + beta.to_string() + "^" + std::to_string(x) + ")"),
            x};
  });
}

Character standard_character(const RootPartition& pi, const StandardCharTable& t, int D) {
  return standard_fraction(pi, t).expand(D);
}

Character proper_standard_character(const RootPartition& pi, const StandardCharTable& t) {
  const CartanData& cd = *t.cartan;
  return fold_blocks<Character>(cd, pi, [&](const RootVector& beta, int x) -> Character {
    if (beta == cd.delta()) {
      if (x > 1) return imaginary_block(t, pi.mu).simple;
      const auto i = static_cast<std::size_t>(single_box(pi.mu));
      if (i > t.minuscule.size()) throw std::out_of_range("minuscule characters were not computed");
      return t.minuscule[i - 1];
    }
    return shuffle_power(cd, t.simple(beta), x).shifted(x * (x - 1) / 2);
  });
}

// ------------------------------------------------------------ modules

namespace {

QVector first_vector(const FdModule& m) { return unit_vector(m.dim(), 0); }

// Ind(a x b) with its generator 1 (x) va (x) vb.
std::pair<FdModule, QVector> induce_with(const std::pair<FdModule, QVector>& a, const std::pair<FdModule, QVector>& b) {
  FdModule m = induce(a.first, b.first);
  QVector v = induced_vector(a.first, a.second, b.first, b.second, m.dim());
  return {std::move(m), std::move(v)};
}

}  // namespace

FdModule cuspidal_module(const ConvexPreorder& order, const RootVector& alpha) {
  const auto cd = order.cartan_ptr();
  if (!cd->is_real_root(alpha)) throw std::invalid_argument("cuspidal_module: " + alpha.to_string() + " is not real");
  if (alpha.height() == 1) {
    const auto it = std::find(alpha.coords().begin(), alpha.coords().end(), 1);
    return letter_module(cd, static_cast<int>(it - alpha.coords().begin()));
  }
  std::optional<KostantPartition> best;
  for (const auto& mp : minimal_pairs(alpha, order))
    if (mp.is_real_pair(*cd) && (!best || order.greater(mp.parts[0].first, best->parts[0].first))) best = mp;
  if (!best) throw std::invalid_argument("cuspidal_module: " + alpha.to_string() + " has no real minimal pair");
  const FdModule lb = cuspidal_module(order, best->parts[0].first);
  const FdModule lg = cuspidal_module(order, best->parts[1].first);
  const auto [m, v] = induce_with({lg, first_vector(lg)}, {lb, first_vector(lb)});
  return head(m, v);
}

FdModule minuscule_module(const ConvexPreorder& order, const GammaData& g, int i) {
  const FdModule lm = cuspidal_module(order, g.minus(i));
  const FdModule lp = cuspidal_module(order, g.plus(i));
  const auto [m, v] = induce_with({lm, first_vector(lm)}, {lp, first_vector(lp)});
  return head(m, v);
}

std::pair<FdModule, QVector> proper_standard_module(const ConvexPreorder& order, const GammaData& g,
                                                    const RootPartition& pi) {
  const CartanData& cd = order.cartan();
  std::optional<std::pair<FdModule, QVector>> acc;
  for (const auto& [beta, x] : pi.kostant.parts) {
    std::pair<FdModule, QVector> block;
    if (beta == cd.delta()) {
      if (x > 1) throw std::invalid_argument("proper_standard_module: imaginary blocks need x_delta <= 1");
      FdModule m = minuscule_module(order, g, single_box(pi.mu));
      block = {m, first_vector(m)};
    } else {
      const FdModule l = cuspidal_module(order, beta);
      block = {l, first_vector(l)};
      for (int k = 1; k < x; ++k) block = induce_with(block, {l, first_vector(l)});
      block.first = block.first.shifted(x * (x - 1) / 2);
    }
    acc = acc ? induce_with(*acc, block) : std::move(block);
  }
  if (!acc) throw std::invalid_argument("empty root partition");
  return *acc;
}

// ------------------------------------------------------------ checks

Report minuscule_restriction_check(const StandardCharTable& t) {
  const CartanData& cd = *t.cartan;
  Report r;
  r.name = "minuscule restriction";
  r.window = "theta = delta, exact";
  if (t.minuscule.size() != static_cast<std::size_t>(cd.rank())) {
    r.fail("minuscule characters were not computed");
    return r;
  }
  for (int i = 1; i <= cd.rank(); ++i) {
    const Character& l = t.minuscule[static_cast<std::size_t>(i - 1)];
    r.check(l.is_bar_invariant(), "L_{delta," + std::to_string(i) + "} is not bar-invariant");
    for (int j = 1; j <= cd.rank(); ++j) {
      const Character res = deconcat(cd, l, t.gamma.minus(j), t.gamma.plus(j));
      const std::string tag = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
      if (i == j) {
        const Character want = tensor(t.simple(t.gamma.minus(j)), t.simple(t.gamma.plus(j)));
        r.check(res.entries() == want.entries(), tag + ": restriction " + res.to_string() + " != " + want.to_string());
      } else {
        r.check(res.is_zero(), tag + ": restriction is not zero: " + res.to_string());
      }
    }
  }
  return r;
}

namespace {

bool strictly_below(const RootPartition& s, const RootPartition& p, const ConvexPreorder& order) {
  return !(s.kostant == p.kostant) && bilex_leq(s.kostant, p.kostant, order);
}

std::vector<RootPartition> sorted_top_down(std::vector<RootPartition> rest, const ConvexPreorder& order) {
  std::vector<RootPartition> out;
  while (!rest.empty()) {
    std::size_t pick = 0;
    for (std::size_t a = 0; a < rest.size(); ++a) {
      bool maximal = true;
      for (std::size_t b = 0; b < rest.size() && maximal; ++b) maximal = !strictly_below(rest[a], rest[b], order);
      if (maximal) {
        pick = a;
        break;
      }
    }
    out.push_back(rest[pick]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::pair<int, int> exponent_range(const std::vector<Character>& xs) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& x : xs)
    for (const auto& [w, c] : x.entries()) {
      const LaurentPoly p = c.known_part();
      lo = std::min(lo, p.min_degree());
      hi = std::max(hi, p.max_degree());
    }
  return {lo, hi};
}

}  // namespace

DecompositionTriangle decomposition_triangle(const RootVector& theta, const ConvexPreorder& order,
                                             const StandardCharTable& t) {
  const CartanData& cd = order.cartan();
  DecompositionTriangle out;
  Report& r = out.report;
  r.name = "decomposition triangle";
  r.window = "theta = " + theta.to_string();
  out.partitions = sorted_top_down(enumerate_root_partitions(theta, order), order);
  const std::size_t np = out.partitions.size();
  for (const auto& pi : out.partitions) {
    if (pi.kostant.multiplicity(cd.delta()) > 1)
      throw std::invalid_argument("decomposition_triangle: " + pi.to_string() + " has x_delta > 1");
    out.proper.push_back(proper_standard_character(pi, t));
    const auto [m, gen] = proper_standard_module(order, t.gamma, pi);
    r.check(m.character() == out.proper.back(), pi.to_string() + ": module character differs from the shuffle");
    out.simples.push_back(head_character(m, gen));
  }

  // Unknowns d[pi][sigma] = sum_e c q^e with e in [lo, hi]; one linear system
  // over Q per row pi, with one equation per (word, exponent).
  const auto [plo, phi] = exponent_range(out.proper);
  const auto [slo, shi] = exponent_range(out.simples);
  const int lo = plo - shi, hi = phi - slo;
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::map<std::pair<Word, int>, std::size_t> eq;
  auto eq_index = [&](const Word& w, int e) { return eq.emplace(std::pair{w, e}, eq.size()).first->second; };
  for (const auto& s : out.simples)
    for (const auto& [w, c] : s.entries())
      for (const auto& [e, v] : c.coefficients())
        for (int s2 = lo; s2 <= hi; ++s2) eq_index(w, e + s2);
  for (const auto& p : out.proper)
    for (const auto& [w, c] : p.entries())
      for (const auto& [e, v] : c.coefficients()) eq_index(w, e);
  QMatrix a(eq.size(), np * width);
  for (std::size_t s = 0; s < np; ++s)
    for (const auto& [w, c] : out.simples[s].entries())
      for (const auto& [e, v] : c.coefficients())
        for (int sh = lo; sh <= hi; ++sh)
          a(eq.at({w, e + sh}), s * width + static_cast<std::size_t>(sh - lo)) += Rational(v);
  r.check(nullspace(a).empty(), "simple characters are linearly dependent");

  out.d.assign(np, std::vector<LaurentPoly>(np));
  for (std::size_t p = 0; p < np; ++p) {
    QVector b(eq.size());
    for (const auto& [w, c] : out.proper[p].entries())
      for (const auto& [e, v] : c.coefficients()) b[eq.at({w, e})] = Rational(v);
    QVector x;
    if (!solve(a, b, x)) {
      r.fail(out.partitions[p].to_string() + ": not in the span of the simple characters");
      continue;
    }
    for (std::size_t s = 0; s < np; ++s)
      for (std::size_t k = 0; k < width; ++k) {
        const Rational& c = x[s * width + k];
        if (c == 0) continue;
        if (c.get_den() != 1) {
          r.fail(out.partitions[p].to_string() + ": non-integral multiplicity");
          continue;
        }
        out.d[p][s].add_term(lo + static_cast<int>(k), c.get_num());
      }
  }

  for (std::size_t p = 0; p < np; ++p) {
    const auto& pi = out.partitions[p];
    r.check(out.d[p][p] == LaurentPoly(1), pi.to_string() + ": diagonal entry " + out.d[p][p].to_string());
    for (std::size_t s = 0; s < np; ++s) {
      const auto& sigma = out.partitions[s];
      const std::string tag = "(" + pi.to_string() + ", " + sigma.to_string() + ")";
      r.check(out.d[p][s].is_nonnegative(), tag + ": negative multiplicity");
      if (s != p) r.check(out.d[p][s].is_zero() || strictly_below(sigma, pi, order), tag + ": support outside sigma < pi");
      const Character res = restrict_to(cd, out.proper[p], block_weights(sigma.kostant));
      r.check(res.is_zero() || bilex_leq(sigma.kostant, pi.kostant, order),
              tag + ": restriction to rho(sigma) is nonzero but sigma is not below pi");
    }
  }
  return out;
}

Report semicuspidal_pairing_check(const SemicuspidalContext& ctx, const StandardCharTable& t, int D) {
  const CartanData& cd = *t.cartan;
  Report r;
  r.name = "semicuspidal pairing";
  r.window = "degree <= " + std::to_string(D);
  if (ctx.n() != 1) throw std::invalid_argument("semicuspidal_pairing_check: needs n = 1");
  std::vector<Character> simples;
  std::vector<Character> standards;
  if (ctx.alpha() == cd.delta()) {
    if (t.minuscule.size() != static_cast<std::size_t>(cd.rank())) throw std::out_of_range("minuscule characters were not computed");
    simples = t.minuscule;
    for (int i = 1; i <= cd.rank(); ++i) standards.push_back(t.delta_standard_fraction(i).expand(D));
  } else {
    simples.push_back(t.simple(ctx.alpha()));
    standards.push_back(t.standard(ctx.alpha()).expand(D));
  }
  KlrEngine e(ctx.order().cartan_ptr(), ctx.theta());
  for (const auto& i : ctx.sc_words())
    for (const auto& j : ctx.sc_words()) {
      LaurentSeries want(LaurentPoly(), D);
      for (std::size_t k = 0; k < simples.size(); ++k) want += simples[k].coeff(i) * standards[k].coeff(j);
      const LaurentSeries got = block_dim(e, ctx, i, j, D);
      r.check(got.agrees_with(want), "1_" + word_to_string(j) + " C 1_" + word_to_string(i) + ": engine " +
                                         got.to_string() + ", characters " + want.to_string());
    }
  return r;
}

}  // namespace klr
