#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "klr/report.hpp"
#include "klr/rootsys.hpp"

namespace klr {

enum class Ordering { Less, Equivalent, Greater };

inline Ordering reverse(Ordering o) {
  return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : o;
}
const char* to_symbol(Ordering o);

using RootComparator = std::function<Ordering(const RootVector&, const RootVector&)>;

/// Total preorder on positive roots given by lexicographic comparison of the
/// slope tuple (f_2(b)/f_1(b), ..., f_r(b)/f_1(b)). Coordinate functionals are
/// appended as tie-breakers, so distinct non-proportional roots never tie.
class ConvexPreorder {
 public:
  /// `functionals` includes f_1, which must be positive on every simple root.
  ConvexPreorder(std::shared_ptr<const CartanData> cartan, std::vector<std::vector<long>> functionals);

  /// f_1 = height followed by the given functionals.
  static ConvexPreorder slope(std::shared_ptr<const CartanData> cartan,
                              const std::vector<std::vector<long>>& after_height);

  [[nodiscard]] const CartanData& cartan() const { return *cartan_; }
  [[nodiscard]] std::shared_ptr<const CartanData> cartan_ptr() const { return cartan_; }
  /// The functionals as supplied (without the appended coordinate tie-breakers).
  [[nodiscard]] const std::vector<std::vector<long>>& functionals() const { return given_; }

  /// Throws std::invalid_argument unless both arguments are positive roots.
  [[nodiscard]] Ordering compare(const RootVector& beta, const RootVector& gamma) const;
  /// No root check; callers guarantee membership.
  [[nodiscard]] Ordering compare_unchecked(const RootVector& beta, const RootVector& gamma) const;
  [[nodiscard]] bool greater(const RootVector& b, const RootVector& g) const {
    return compare_unchecked(b, g) == Ordering::Greater;
  }
  [[nodiscard]] bool preceq(const RootVector& b, const RootVector& g) const {
    return compare_unchecked(b, g) != Ordering::Greater;
  }
  [[nodiscard]] RootComparator comparator() const;

  /// Sorts in strictly decreasing order.
  void sort_descending(std::vector<RootVector>& roots) const;

 private:
  [[nodiscard]] long eval(std::size_t k, const RootVector& beta) const;

  std::shared_ptr<const CartanData> cartan_;
  std::vector<std::vector<long>> given_;
  std::vector<std::vector<long>> all_;
};

/// Exhaustive check of both convexity axioms and of comparator consistency
/// (antisymmetry, transitivity) on positive roots of height <= max_height.
Report verify_convexity(const CartanData& cartan, const RootComparator& cmp, int max_height);
inline Report verify_convexity(const ConvexPreorder& order, int max_height) {
  return verify_convexity(order.cartan(), order.comparator(), max_height);
}

/// Data attached to the chamber p(Phi_{>delta}) = w Phi'_+.
struct GammaData {
  std::vector<int> w_word;  // w = s_{w_word[0]} s_{w_word[1]} ...
  std::vector<RootVector> gamma;        // gamma[i-1] = w alpha_i
  std::vector<RootVector> gamma_plus;   // lift of +gamma_i
  std::vector<RootVector> gamma_minus;  // lift of -gamma_i
  [[nodiscard]] bool balanced() const { return w_word.empty(); }
  [[nodiscard]] const RootVector& plus(int i) const { return gamma_plus.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] const RootVector& minus(int i) const { return gamma_minus.at(static_cast<std::size_t>(i - 1)); }
};

/// Finds w by descent on P = p(Phi_{>delta} up to height max_height). Throws
/// std::runtime_error if P is not a positive system.
GammaData gamma_data(const ConvexPreorder& order, int max_height);
/// Per-element checks: gamma_i^+ + gamma_i^- = delta, gamma_i^+ > delta > gamma_i^-,
/// realness, p(gamma_i^+) = gamma_i, and balanced iff w = e.
Report verify_gamma_data(const ConvexPreorder& order, const GammaData& g, int max_height);

/// Order with Delta_{>delta} = base and the +-alpha towers adjacent to delta.
/// `base` lists finite roots (alpha_0 coordinate zero). Verified up to
/// max_height before returning; throws std::runtime_error on failure.
ConvexPreorder special_order(std::shared_ptr<const CartanData> cartan, const std::vector<RootVector>& base,
                             const RootVector& alpha, int max_height);
/// Checks the three tower properties of special_order up to max_height.
Report verify_special_order(const ConvexPreorder& order, const std::vector<RootVector>& base,
                            const RootVector& alpha, int max_height);

/// Decides whether a target in Q_+ is a nonnegative integer combination of a
/// fixed family of positive vectors. Results are memoized per target.
class SumOracle {
 public:
  explicit SumOracle(std::vector<RootVector> parts);
  [[nodiscard]] bool representable(const RootVector& target) const;
  [[nodiscard]] const std::vector<RootVector>& parts() const { return parts_; }

 private:
  std::vector<RootVector> parts_;
  mutable std::map<RootVector, bool> memo_;
};

/// Positive roots of height <= max_height that are <= (resp. >=) pivot.
std::vector<RootVector> roots_preceq(const ConvexPreorder& order, const RootVector& pivot, int max_height);
std::vector<RootVector> roots_succeq(const ConvexPreorder& order, const RootVector& pivot, int max_height);

/// For gamma_i^{+-} = eta^{+-} + theta^{+-} with eta a sum of roots <= gamma_i^{+-}
/// and theta a sum of roots >= gamma_i^{+-}: eta^- + eta^+ != gamma_i^- unless
/// eta^+ = theta^- = 0. Exhaustive over all such decompositions.
Report verify_lemma_diff(const ConvexPreorder& order, const GammaData& g, int i, int max_height);
/// Splittings delta = theta_r^- + theta_r^+ (r = 1..n) summing to n gamma_i^{+-}
/// are forced to be theta_r^{+-} = gamma_i^{+-}. Exhaustive.
Report verify_lemma_mgg(const ConvexPreorder& order, const GammaData& g, int i, int n, int max_height);

}  // namespace klr
