#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klr/convex.hpp"
#include "klr/qseries.hpp"
#include "klr/rootsys.hpp"

namespace klr {

/// Multiset of indivisible roots; parts strictly decreasing under the order.
struct KostantPartition {
  std::vector<std::pair<RootVector, int>> parts;

  [[nodiscard]] RootVector weight(const CartanData& cd) const;
  [[nodiscard]] int multiplicity(const RootVector& beta) const;
  [[nodiscard]] int total_parts() const;
  [[nodiscard]] bool is_real_pair(const CartanData& cd) const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const KostantPartition&, const KostantPartition&) = default;
};

/// All Kostant partitions of theta, each listed in decreasing order; the list
/// itself is sorted so that the result is deterministic.
std::vector<KostantPartition> enumerate_kostant(const RootVector& theta, const ConvexPreorder& order);

/// xi <= zeta in the bilexicographic order: the multiplicity sequences agree
/// or are lexicographically smaller both when read from the largest root down
/// and when read from the smallest root up. Throws on weight mismatch.
bool bilex_leq(const KostantPartition& xi, const KostantPartition& zeta, const ConvexPreorder& order);

/// Bilex-minimal elements of Xi(alpha) \ {(alpha)}. Throws for simple alpha.
std::vector<KostantPartition> minimal_pairs(const RootVector& alpha, const ConvexPreorder& order);

using Partition = std::vector<int>;          // nonincreasing, no zero parts
using Multipartition = std::vector<Partition>;  // l components
using Composition = std::vector<int>;        // h nonnegative parts

int size(const Partition& p);
int size(const Multipartition& m);
std::vector<Partition> partitions_of(int n);
std::vector<Multipartition> multipartitions(int l, int n);
/// mu dominated by lambda (same size, partial sums of mu bounded by lambda's).
bool dominated(const Partition& mu, const Partition& lambda);
/// Componentwise dominance with equal component sizes.
bool dominated(const Multipartition& mu, const Multipartition& lambda);
std::string to_string(const Partition& p);
std::string to_string(const Multipartition& m);

struct RootPartition {
  KostantPartition kostant;
  Multipartition mu;
  [[nodiscard]] std::string to_string() const;
};

std::vector<RootPartition> enumerate_root_partitions(const RootVector& theta, const ConvexPreorder& order);

/// Lambda(h, n): compositions of n with h parts, lexicographically decreasing.
std::vector<Composition> compositions(int h, int n);

inline constexpr int kMaxCosetDegree = 8;
/// |S_lambda \ S_n / S_mu| as the number of nonnegative integer matrices with
/// row sums lambda and column sums mu. Throws for n > kMaxCosetDegree.
long double_coset_count(const Composition& lambda, const Composition& mu);

/// Sum of double coset counts over Lambda(h, n) x Lambda(h, n).
Integer schur_dim(int h, int n);
Integer binomial(long n, long k);

/// Pluggable classical decomposition numbers d^p_cl(lambda, mu) for one prime p.
class ClassicalTable {
 public:
  ClassicalTable() = default;
  explicit ClassicalTable(int p) : p_(p) {}
  /// {"p": 2, "entries": [{"lambda": [2], "mu": [1,1], "value": 1}, ...]}
  static ClassicalTable from_json(const std::string& text);

  void set(const Partition& lambda, const Partition& mu, long value);
  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] std::optional<long> lookup(const Partition& lambda, const Partition& mu) const;

 private:
  int p_ = 0;
  std::map<std::pair<Partition, Partition>, long> entries_;
};

/// d^p_cl(lambda, mu): identity in the semisimple range (p = 0 or p > |lambda|),
/// the table otherwise. Always 1 on the diagonal and 0 unless mu is dominated by
/// lambda; a table contradicting either rule is rejected.
long classical_decomposition(const Partition& lambda, const Partition& mu, int p, const ClassicalTable* table);

/// Product of classical numbers over components, 0 on mismatched sizes.
long dp_decomposition(const Multipartition& lambda, const Multipartition& mu, int p, const ClassicalTable* table);

/// Full matrix on P_n (rows lambda, columns mu) in multipartitions(l, n) order.
std::vector<std::vector<long>> dp_matrix(int l, int n, int p, const ClassicalTable* table);

}  // namespace klr
