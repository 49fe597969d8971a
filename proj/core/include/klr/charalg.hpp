#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/qseries.hpp"
#include "klr/report.hpp"
#include "klr/rootsys.hpp"

namespace klr {

/// A word in I^theta; each char holds a vertex index 0..l.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
RootVector word_weight(const CartanData& cd, const Word& w);
std::string word_to_string(const Word& w);  // "0,1,1"
Word word_from_string(const std::string& s);

/// Word-indexed graded dimensions. A character may carry several blocks (the
/// weights of a tensor product M_1 x ... x M_m); its words are concatenations
/// of words of those weights.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<RootVector> blocks) : blocks_(std::move(blocks)) {}
  /// Single word with coefficient 1, one block.
  static Character word(const CartanData& cd, const Word& w);
  /// The unit: empty word, weight zero.
  static Character unit(const CartanData& cd);

  [[nodiscard]] const std::vector<RootVector>& blocks() const { return blocks_; }
  [[nodiscard]] RootVector theta() const;
  [[nodiscard]] const std::map<Word, LaurentSeries>& entries() const { return entries_; }
  [[nodiscard]] LaurentSeries coeff(const Word& w) const;
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] bool is_exact() const;
  [[nodiscard]] bool is_nonnegative() const;
  /// Every entry is an exact Laurent polynomial fixed by the bar involution.
  [[nodiscard]] bool is_bar_invariant() const;
  [[nodiscard]] int min_truncation() const;

  void add(const Word& w, const LaurentSeries& c);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  /// Multiplication by a scalar series (a monomial for degree shifts).
  friend Character operator*(const LaurentSeries& s, const Character& x);
  [[nodiscard]] Character shifted(int d) const;
  [[nodiscard]] Character truncated(int degree) const;
  /// Entrywise agreement on common windows; words missing on one side count as 0.
  [[nodiscard]] bool agrees_with(const Character& o) const;
  friend bool operator==(const Character&, const Character&) = default;

  /// Splits w into its block segments; empty vector if w does not fit the blocks.
  [[nodiscard]] std::vector<Word> segments(const CartanData& cd, const Word& w) const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<RootVector> blocks_;
  std::map<Word, LaurentSeries> entries_;
};

/// Sign of the crossing exponent: a letter i of the left factor that ends up
/// after a letter j of the right factor contributes q^{kCrossingSign (a_i,a_j)}.
/// The Mackey shifts follow the same constant.
inline constexpr int kCrossingSign = -1;

/// Quantum shuffle of two words: every interleaving, with q^{-(a_i,a_j)} for
/// each letter i of u that ends up after a letter j of v.
std::map<Word, LaurentPoly> shuffle_words(const CartanData& cd, const Word& u, const Word& v);

/// Character of an induced module from single-block characters.
Character shuffle(const CartanData& cd, const Character& a, const Character& b);
/// Shuffles all blocks of a multi-block character into one block.
Character induce_blocks(const CartanData& cd, const Character& x);
/// External product a x b: blocks and words concatenated.
Character tensor(const Character& a, const Character& b);
/// Words of x whose segments have the weights `blocks` (restriction).
Character restrict_to(const CartanData& cd, const Character& x, const std::vector<RootVector>& blocks);
inline Character deconcat(const CartanData& cd, const Character& x, const RootVector& t1, const RootVector& t2) {
  return restrict_to(cd, x, {t1, t2});
}
/// Bar involution entrywise; requires an exact character.
Character dual(const Character& x);

/// bar(a o b) = q^{(theta_a, theta_b)} bar(b) o bar(a).
Report duality_shift_check(const CartanData& cd, const Character& a, const Character& b);

/// Character form of the Mackey filtration: Res_theta Ind_eta M equals the sum
/// over block matrices kappa of the twisted, shifted and re-induced restrictions.
/// M must have blocks eta; `target` gives theta.
Character mackey_rhs(const CartanData& cd, const Character& m, const std::vector<RootVector>& target);
Report mackey_check(const CartanData& cd, const Character& m, const std::vector<RootVector>& target);

/// Nonnegative block matrices kappa (rows: target blocks, cols: source blocks)
/// with the prescribed row and column sums.
std::vector<std::vector<std::vector<RootVector>>> block_matrices(const std::vector<RootVector>& rows,
                                                                 const std::vector<RootVector>& cols);

}  // namespace klr
