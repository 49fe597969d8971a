#include "klr/combinat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klr {

// --------------------------------------------------------- Kostant partitions

RootVector KostantPartition::weight(const CartanData& cd) const {
  RootVector w = cd.zero();
  for (const auto& [beta, x] : parts) w += x * beta;
  return w;
}

int KostantPartition::multiplicity(const RootVector& beta) const {
  for (const auto& [b, x] : parts)
    if (b == beta) return x;
  return 0;
}

int KostantPartition::total_parts() const {
  int s = 0;
  for (const auto& part : parts) s += part.second;
  return s;
}

bool KostantPartition::is_real_pair(const CartanData& cd) const {
  return total_parts() == 2 && std::all_of(parts.begin(), parts.end(), [&](const auto& part) {
           return cd.is_real_root(part.first);
         });
}

std::string KostantPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << ", ";
    os << parts[k].first.to_string();
    if (parts[k].second != 1) os << "^" << parts[k].second;
  }
  os << ")";
  return os.str();
}

std::vector<KostantPartition> enumerate_kostant(const RootVector& theta, const ConvexPreorder& order) {
  const CartanData& cd = order.cartan();
  if (!theta.is_nonnegative()) throw std::invalid_argument("enumerate_kostant: theta must lie in Q_+");
  std::vector<RootVector> roots;
  for (auto& b : cd.indivisible_roots_upto(theta.height()))
    if (b.fits_in(theta)) roots.push_back(std::move(b));
  order.sort_descending(roots);

  std::vector<KostantPartition> out;
  KostantPartition cur;
  std::function<void(std::size_t, const RootVector&)> rec = [&](std::size_t k, const RootVector& rest) {
    if (rest.is_zero()) {
      out.push_back(cur);
      return;
    }
    if (k == roots.size()) return;
    const RootVector& beta = roots[k];
    int max_x = 0;
    for (RootVector r = rest; beta.fits_in(r); r -= beta) ++max_x;
    for (int x = max_x; x >= 1; --x) {
      cur.parts.emplace_back(beta, x);
      rec(k + 1, rest - x * beta);
      cur.parts.pop_back();
    }
    rec(k + 1, rest);
  };
  rec(0, theta);
  return out;
}

namespace {

std::vector<RootVector> joint_support(const KostantPartition& a, const KostantPartition& b,
                                      const ConvexPreorder& order) {
  std::vector<RootVector> s;
  for (const auto& part : a.parts) s.push_back(part.first);
  for (const auto& part : b.parts)
    if (std::find(s.begin(), s.end(), part.first) == s.end()) s.push_back(part.first);
  order.sort_descending(s);
  return s;
}

}  // namespace

bool bilex_leq(const KostantPartition& xi, const KostantPartition& zeta, const ConvexPreorder& order) {
  const CartanData& cd = order.cartan();
  if (xi.weight(cd) != zeta.weight(cd)) throw std::invalid_argument("bilex_leq: weight mismatch");
  const auto support = joint_support(xi, zeta, order);
  auto lex_leq = [&](auto first, auto last) {
    for (auto it = first; it != last; ++it) {
      const int x = xi.multiplicity(*it), y = zeta.multiplicity(*it);
      if (x != y) return x < y;
    }
    return true;
  };
  return lex_leq(support.begin(), support.end()) && lex_leq(support.rbegin(), support.rend());
}

std::vector<KostantPartition> minimal_pairs(const RootVector& alpha, const ConvexPreorder& order) {
  const CartanData& cd = order.cartan();
  if (!cd.is_indivisible(alpha)) throw std::invalid_argument("minimal_pairs: alpha must be indivisible");
  if (alpha.height() == 1) throw std::invalid_argument("minimal_pairs: simple roots have no minimal pair");
  std::vector<KostantPartition> rest;
  for (auto& k : enumerate_kostant(alpha, order))
    if (!(k.parts.size() == 1 && k.parts[0].second == 1)) rest.push_back(std::move(k));
  std::vector<KostantPartition> out;
  for (const auto& xi : rest) {
    bool minimal = true;
    for (const auto& zeta : rest)
      if (!(zeta == xi) && bilex_leq(zeta, xi, order)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(xi);
  }
  return out;
}

// ------------------------------------------------------------ multipartitions

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int size(const Multipartition& m) {
  int s = 0;
  for (const auto& p : m) s += size(p);
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Composition> compositions(int h, int n) {
  std::vector<Composition> out;
  if (h < 0 || n < 0) return out;
  Composition cur;
  std::function<void(int, int)> rec = [&](int slots, int rest) {
    if (slots == 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = rest; v >= 0; --v) {
      cur.push_back(v);
      rec(slots - 1, rest - v);
      cur.pop_back();
    }
  };
  if (h == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  rec(h, n);
  return out;
}

std::vector<Multipartition> multipartitions(int l, int n) {
  std::vector<Multipartition> out;
  for (const auto& sizes : compositions(l, n)) {
    Multipartition cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == sizes.size()) {
        out.push_back(cur);
        return;
      }
      for (const auto& p : partitions_of(sizes[k])) {
        cur.push_back(p);
        rec(k + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

bool dominated(const Partition& mu, const Partition& lambda) {
  if (size(mu) != size(lambda)) return false;
  int sm = 0, sl = 0;
  for (std::size_t k = 0; k < std::max(mu.size(), lambda.size()); ++k) {
    sm += k < mu.size() ? mu[k] : 0;
    sl += k < lambda.size() ? lambda[k] : 0;
    if (sm > sl) return false;
  }
  return true;
}

bool dominated(const Multipartition& mu, const Multipartition& lambda) {
  if (mu.size() != lambda.size()) return false;
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (!dominated(mu[k], lambda[k])) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
  os << ")";
  return os.str();
}

std::string to_string(const Multipartition& m) {
  std::string s = "(";
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + to_string(m[k]);
  return s + ")";
}

std::string RootPartition::to_string() const {
  return kostant.to_string() + (mu.empty() ? "" : " mu=" + klr::to_string(mu));
}

std::vector<RootPartition> enumerate_root_partitions(const RootVector& theta, const ConvexPreorder& order) {
  const CartanData& cd = order.cartan();
  std::vector<RootPartition> out;
  for (const auto& xi : enumerate_kostant(theta, order)) {
    const int xd = xi.multiplicity(cd.delta());
    for (auto& mu : multipartitions(cd.rank(), xd)) out.push_back({xi, std::move(mu)});
  }
  return out;
}

// ---------------------------------------------------------- double cosets

long double_coset_count(const Composition& lambda, const Composition& mu) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n != std::accumulate(mu.begin(), mu.end(), 0))
    throw std::invalid_argument("double_coset_count: compositions of different sizes");
  if (n > kMaxCosetDegree) throw std::invalid_argument("double_coset_count: n exceeds the size guard");
  for (int v : lambda)
    if (v < 0) throw std::invalid_argument("double_coset_count: negative part");
  for (int v : mu)
    if (v < 0) throw std::invalid_argument("double_coset_count: negative part");
  // Fill the contingency matrix row by row; `cols` holds unused column sums.
  std::vector<int> cols(mu.begin(), mu.end());
  std::function<long(std::size_t, std::size_t, int)> rec = [&](std::size_t row, std::size_t col, int row_rest) -> long {
    if (row == lambda.size()) return 1;
    if (col + 1 == cols.size()) {
      if (row_rest > cols[col]) return 0;
      cols[col] -= row_rest;
      const long r = rec(row + 1, 0, row + 1 < lambda.size() ? lambda[row + 1] : 0);
      cols[col] += row_rest;
      return r;
    }
    long total = 0;
    for (int v = 0; v <= std::min(row_rest, cols[col]); ++v) {
      cols[col] -= v;
      total += rec(row, col + 1, row_rest - v);
      cols[col] += v;
    }
    return total;
  };
  if (lambda.empty() || mu.empty()) return n == 0 ? 1 : 0;
  return rec(0, 0, lambda[0]);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer schur_dim(int h, int n) {
  if (h < 1 || n < 1) throw std::invalid_argument("schur_dim: h and n must be positive");
  const auto comps = compositions(h, n);
  Integer total = 0;
  for (const auto& lam : comps)
    for (const auto& mu : comps) total += double_coset_count(lam, mu);
  return total;
}

// ------------------------------------------------------ decomposition numbers

ClassicalTable ClassicalTable::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ClassicalTable t(j.at("p").get<int>());
  for (const auto& e : j.at("entries"))
    t.set(e.at("lambda").get<Partition>(), e.at("mu").get<Partition>(), e.at("value").get<long>());
  return t;
}

void ClassicalTable::set(const Partition& lambda, const Partition& mu, long value) {
  entries_[{lambda, mu}] = value;
}

std::optional<long> ClassicalTable::lookup(const Partition& lambda, const Partition& mu) const {
  auto it = entries_.find({lambda, mu});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

long classical_decomposition(const Partition& lambda, const Partition& mu, int p, const ClassicalTable* table) {
  if (size(lambda) != size(mu)) return 0;
  std::optional<long> supplied;
  if (table) {
    if (table->prime() != p) throw std::invalid_argument("classical table is for a different prime");
    supplied = table->lookup(lambda, mu);
  }
  auto reject = [&](const char* why) {
    throw std::invalid_argument(std::string("classical table entry ") + to_string(lambda) + "," + to_string(mu) +
                                " " + why);
  };
  if (lambda == mu) {
    if (supplied && *supplied != 1) reject("must be 1 on the diagonal");
    return 1;
  }
  if (!dominated(mu, lambda)) {
    if (supplied && *supplied != 0) reject("must vanish outside dominance");
    return 0;
  }
  const bool semisimple = p == 0 || p > size(lambda);
  if (semisimple) {
    if (supplied && *supplied != 0) reject("must vanish in the semisimple range");
    return 0;
  }
  if (!supplied)
    throw std::out_of_range("classical table lacks d(" + to_string(lambda) + "," + to_string(mu) + ") for p=" +
                            std::to_string(p));
  return *supplied;
}

long dp_decomposition(const Multipartition& lambda, const Multipartition& mu, int p, const ClassicalTable* table) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dp_decomposition: different numbers of components");
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (size(lambda[k]) != size(mu[k])) return 0;
  long prod = 1;
  for (std::size_t k = 0; k < lambda.size() && prod != 0; ++k)
    prod *= classical_decomposition(lambda[k], mu[k], p, table);
  return prod;
}

std::vector<std::vector<long>> dp_matrix(int l, int n, int p, const ClassicalTable* table) {
  const auto mps = multipartitions(l, n);
  std::vector<std::vector<long>> m(mps.size(), std::vector<long>(mps.size()));
  for (std::size_t a = 0; a < mps.size(); ++a)
    for (std::size_t b = 0; b < mps.size(); ++b) m[a][b] = dp_decomposition(mps[a], mps[b], p, table);
  return m;
}

}  // namespace klr
