#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klr/charalg.hpp"
#include "klr/combinat.hpp"
#include "klr/convex.hpp"
#include "klr/fdmodule.hpp"
#include "klr/qseries.hpp"
#include "klr/report.hpp"

namespace klr {

/// Raised when a step of the standard-character recursion produces a negative
/// coefficient. It means the order or a sign convention is wrong.
class NegativeCoefficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Words of I^{n alpha} split into semicuspidal and non-semicuspidal ones.
/// A word is semicuspidal when every proper prefix weight is a sum of roots
/// <= alpha and the complementary suffix weight a sum of roots >= alpha.
class SemicuspidalContext {
 public:
  SemicuspidalContext(ConvexPreorder order, RootVector alpha, int n);

  [[nodiscard]] const ConvexPreorder& order() const { return order_; }
  [[nodiscard]] const RootVector& alpha() const { return alpha_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const RootVector& theta() const { return theta_; }
  [[nodiscard]] const std::vector<Word>& nsc_words() const { return nsc_; }
  [[nodiscard]] const std::vector<Word>& sc_words() const { return sc_; }
  [[nodiscard]] bool is_semicuspidal(const Word& w) const;

 private:
  ConvexPreorder order_;
  RootVector alpha_;
  int n_;
  RootVector theta_;
  SumOracle below_, above_;
  std::vector<Word> nsc_, sc_;
};

bool is_semicuspidal_word(const SemicuspidalContext& ctx, const Word& w);

/// dim_q 1_j C 1_i for C = R_theta / R 1_nsc R, theta = n alpha, computed in the
/// normal-form engine degree by degree up to D.
LaurentSeries semicuspidal_block_dim(const SemicuspidalContext& ctx, const Word& i, const Word& j, int D);
/// Sum of all blocks.
LaurentSeries semicuspidal_dim(const SemicuspidalContext& ctx, int D);

/// Character with an exact numerator over (1-q^2)^power.
struct FractionalCharacter {
  Character numerator;
  int power = 0;
  [[nodiscard]] Character expand(int D) const;
};
FractionalCharacter shuffle(const CartanData& cd, const FractionalCharacter& a, const FractionalCharacter& b);
/// (1-q^2)^k.
LaurentPoly power_of_denominator(int k);

/// External data for an imaginary block delta^n with n >= 2.
struct ImaginaryData {
  Character simple;
  FractionalCharacter standard;
};

/// How a table entry was obtained.
struct Provenance {
  enum Kind { Simple, RealPair, Tower } kind = Simple;
  RootVector beta, gamma;  // real pair beta > gamma, or the tower root beta^{+-}
  int i = 0;               // tower index
  bool plus = true;        // gamma_i^+ tower or gamma_i^- tower
};

/// Characters of cuspidal and minuscule data for one convex order.
///   cuspidal[alpha]  = ch L(alpha) = (1-q^2) ch Delta(alpha)
///   delta_standard[i-1] = (1-q^2) ch Delta_{delta,i}
///   minuscule[i-1]      = ch L_{delta,i} (empty when not computed)
struct StandardCharTable {
  std::shared_ptr<const CartanData> cartan;
  int cutoff = 0;
  GammaData gamma;
  std::map<RootVector, Character> cuspidal;
  std::map<RootVector, Provenance> provenance;
  std::vector<Character> delta_standard;
  std::vector<Character> minuscule;
  std::map<Multipartition, ImaginaryData> imaginary;

  [[nodiscard]] FractionalCharacter standard(const RootVector& alpha) const;
  [[nodiscard]] FractionalCharacter delta_standard_fraction(int i) const;
  [[nodiscard]] const Character& simple(const RootVector& alpha) const;
};

struct TableOptions {
  /// Minuscule characters from heads of induced modules (needs cutoff >= ht delta).
  bool minuscule = true;
  /// Index into the candidate list of each root; 0 is the default choice.
  /// Used to test independence of the recursion from the chosen pair.
  std::map<RootVector, std::size_t> choice;
};

/// One way to reach ch L(alpha) from lower heights.
struct RecursionStep {
  Provenance how;
  [[nodiscard]] std::string to_string() const;
};
/// Candidates for a real non-simple root: real minimal pairs first, ordered by
/// decreasing beta, then the tower rule when alpha = gamma_i^{+-} + n delta.
std::vector<RecursionStep> recursion_candidates(const ConvexPreorder& order, const GammaData& g,
                                                const RootVector& alpha);

/// Builds the table by increasing height. Throws NegativeCoefficient or
/// InexactDivision on the first bad step, with the root in the message.
StandardCharTable build_standard_table(const ConvexPreorder& order, int cutoff, const TableOptions& opts = {});

/// Recomputes every entry through every candidate step and compares.
Report recursion_independence_check(const ConvexPreorder& order, int cutoff);

/// Nonnegativity, finiteness and bar-invariance of each ch L(alpha), plus
/// nonnegativity of each (1-q^2) ch Delta_{delta,i}.
Report table_check(const StandardCharTable& t);

/// ch Delta(pi) and ch bar-Delta(pi) for a root partition. Imaginary blocks with
/// x_delta >= 2 need table.imaginary; std::out_of_range otherwise.
FractionalCharacter standard_fraction(const RootPartition& pi, const StandardCharTable& t);
Character standard_character(const RootPartition& pi, const StandardCharTable& t, int D = default_truncation());
Character proper_standard_character(const RootPartition& pi, const StandardCharTable& t);

/// The weights x_u beta_u of the blocks of a Kostant partition, in order.
std::vector<RootVector> block_weights(const KostantPartition& xi);

/// L(alpha) as a module: a letter for simple roots, otherwise the head of
/// L(gamma) o L(beta) for the largest real minimal pair. Throws
/// std::invalid_argument when alpha has no real minimal pair.
FdModule cuspidal_module(const ConvexPreorder& order, const RootVector& alpha);
/// L_{delta,i} as the head of L(gamma_i^-) o L(gamma_i^+).
FdModule minuscule_module(const ConvexPreorder& order, const GammaData& g, int i);
/// bar-Delta(pi) as a module, with a generating vector.
std::pair<FdModule, QVector> proper_standard_module(const ConvexPreorder& order, const GammaData& g,
                                                    const RootPartition& pi);

/// Res at (gamma_j^-, gamma_j^+) of ch L_{delta,i} is delta_ij ch L(gamma_j^-) x ch L(gamma_j^+).
Report minuscule_restriction_check(const StandardCharTable& t);

struct DecompositionTriangle {
  std::vector<RootPartition> partitions;        // rows and columns
  std::vector<Character> proper;                // ch bar-Delta(pi)
  std::vector<Character> simples;               // ch L(pi)
  std::vector<std::vector<LaurentPoly>> d;      // ch bar-Delta(pi) = sum_sigma d[pi][sigma] ch L(sigma)
  Report report;
};

/// Expands every proper standard character at theta in simple characters (heads
/// of the proper standard modules) and checks unitriangularity, nonnegativity,
/// support sigma <= pi and the restriction criterion. Needs x_delta <= 1.
DecompositionTriangle decomposition_triangle(const RootVector& theta, const ConvexPreorder& order,
                                             const StandardCharTable& t);

/// dim_q 1_j C 1_i against sum_k ch L_k(i) ch Delta_k(j) over the semicuspidal
/// simples at alpha (n = 1), on all semicuspidal words, up to D.
Report semicuspidal_pairing_check(const SemicuspidalContext& ctx, const StandardCharTable& t, int D);

}  // namespace klr
