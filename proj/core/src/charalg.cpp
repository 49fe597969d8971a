#include "klr/charalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace klr {

// -------------------------------------------------------------------- words

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int i : letters) w.push_back(static_cast<char>(i));
  return w;
}

RootVector word_weight(const CartanData& cd, const Word& w) {
  RootVector v = cd.zero();
  for (char c : w) {
    const auto i = static_cast<std::size_t>(c);
    if (i >= cd.num_vertices()) throw std::invalid_argument("word letter out of range");
    v[i] += 1;
  }
  return v;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(static_cast<int>(w[k]));
  }
  return s;
}

Word word_from_string(const std::string& s) {
  Word w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const int v = std::stoi(tok);
    if (v < 0 || v > 127) throw std::invalid_argument("word letter out of range: " + tok);
    w.push_back(static_cast<char>(v));
  }
  return w;
}

// ---------------------------------------------------------------- Character

Character Character::word(const CartanData& cd, const Word& w) {
  Character x({word_weight(cd, w)});
  x.add(w, LaurentSeries(LaurentPoly(1)));
  return x;
}

Character Character::unit(const CartanData& cd) { return word(cd, Word()); }

RootVector Character::theta() const {
  if (blocks_.empty()) return {};
  RootVector t = blocks_.front();
  for (std::size_t k = 1; k < blocks_.size(); ++k) t += blocks_[k];
  return t;
}

LaurentSeries Character::coeff(const Word& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? LaurentSeries() : it->second;
}

bool Character::is_exact() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

bool Character::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.is_nonnegative(); });
}

bool Character::is_bar_invariant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) {
    return kv.second.is_exact() && kv.second.known_part().is_bar_invariant();
  });
}

int Character::min_truncation() const {
  int t = LaurentSeries::kExact;
  for (const auto& [w, c] : entries_) t = std::min(t, c.truncation_degree());
  return t;
}

void Character::add(const Word& w, const LaurentSeries& c) {
  auto it = entries_.find(w);
  if (it == entries_.end()) {
    if (c.is_exact() && c.is_known_zero()) return;
    entries_.emplace(w, c);
    return;
  }
  it->second += c;
  // Exact zeros carry no information; truncated zeros keep their window.
  if (it->second.is_exact() && it->second.is_known_zero()) entries_.erase(it);
}

Character& Character::operator+=(const Character& o) {
  if (blocks_.empty()) blocks_ = o.blocks_;
  else if (!o.blocks_.empty() && o.blocks_ != blocks_)
    throw std::invalid_argument("character addition: block structures differ");
  for (const auto& [w, c] : o.entries_) add(w, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  return *this += LaurentSeries(LaurentPoly(-1)) * o;
}

Character operator*(const LaurentSeries& s, const Character& x) {
  Character r(x.blocks_);
  for (const auto& [w, c] : x.entries_) r.add(w, s * c);
  return r;
}

Character Character::shifted(int d) const {
  Character r(blocks_);
  for (const auto& [w, c] : entries_) r.entries_.emplace(w, c.shifted(d));
  return r;
}

Character Character::truncated(int degree) const {
  Character r(blocks_);
  for (const auto& [w, c] : entries_) r.entries_.emplace(w, c.truncated(degree));
  return r;
}

bool Character::agrees_with(const Character& o) const {
  for (const auto& [w, c] : entries_)
    if (!c.agrees_with(o.coeff(w))) return false;
  for (const auto& [w, c] : o.entries_)
    if (!entries_.count(w) && !c.agrees_with(LaurentSeries())) return false;
  return true;
}

std::vector<Word> Character::segments(const CartanData& cd, const Word& w) const {
  std::vector<Word> segs;
  std::size_t pos = 0;
  for (const auto& b : blocks_) {
    const auto h = static_cast<std::size_t>(b.height());
    if (pos + h > w.size()) return {};
    Word s = w.substr(pos, h);
    if (word_weight(cd, s) != b) return {};
    segs.push_back(std::move(s));
    pos += h;
  }
  if (pos != w.size()) return {};
  return segs;
}

std::string Character::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : entries_) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string();
    if (cs != "1") os << "(" << cs << ")";
    os << "[" << word_to_string(w) << "]";
  }
  return os.str();
}

// ------------------------------------------------------------------ shuffle

std::map<Word, LaurentPoly> shuffle_words(const CartanData& cd, const Word& u, const Word& v) {
  const std::size_t n1 = u.size(), n2 = v.size();
  // cost[i][j]: exponent gained when v[j] is placed while u[i..] is still unplaced.
  std::vector<std::vector<int>> cost(n1 + 1, std::vector<int>(n2, 0));
  for (std::size_t i = n1; i-- > 0;)
    for (std::size_t j = 0; j < n2; ++j)
      cost[i][j] = cost[i + 1][j] + kCrossingSign * cd.letter_form(u[i], v[j]);
  std::map<Word, LaurentPoly> out;
  Word buf(n1 + n2, '\0');
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int e) {
    if (i == n1 && j == n2) {
      out[buf].add_term(e, 1);
      return;
    }
    if (i < n1) {
      buf[i + j] = u[i];
      rec(i + 1, j, e);
    }
    if (j < n2) {
      buf[i + j] = v[j];
      rec(i, j + 1, e + cost[i][j]);
    }
  };
  rec(0, 0, 0);
  return out;
}

namespace {

RootVector single_block(const CartanData& cd, const Character& x, const char* op) {
  if (x.blocks().size() > 1) throw std::invalid_argument(std::string(op) + ": expects a single-block character");
  return x.blocks().empty() ? cd.zero() : x.blocks().front();
}

}  // namespace

Character shuffle(const CartanData& cd, const Character& a, const Character& b) {
  const RootVector ta = single_block(cd, a, "shuffle");
  const RootVector tb = single_block(cd, b, "shuffle");
  Character r({ta + tb});
  for (const auto& [u, cu] : a.entries())
    for (const auto& [v, cv] : b.entries()) {
      const LaurentSeries c = cu * cv;
      for (const auto& [w, p] : shuffle_words(cd, u, v)) r.add(w, LaurentSeries(p) * c);
    }
  return r;
}

namespace {

// Iterated quantum shuffle of a list of words, in order.
std::map<Word, LaurentPoly> shuffle_all(const CartanData& cd, const std::vector<Word>& segs) {
  std::map<Word, LaurentPoly> acc{{Word(), LaurentPoly(1)}};
  for (const auto& s : segs) {
    std::map<Word, LaurentPoly> next;
    for (const auto& [w, p] : acc)
      for (const auto& [x, px] : shuffle_words(cd, w, s)) next[x] += p * px;
    acc = std::move(next);
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return acc;
}

}  // namespace

Character induce_blocks(const CartanData& cd, const Character& x) {
  Character r({x.theta().size() ? x.theta() : cd.zero()});
  for (const auto& [w, c] : x.entries()) {
    const auto segs = x.segments(cd, w);
    if (segs.empty() && !x.blocks().empty()) throw std::logic_error("character word does not fit its blocks");
    for (const auto& [y, p] : shuffle_all(cd, segs)) r.add(y, LaurentSeries(p) * c);
  }
  return r;
}

Character tensor(const Character& a, const Character& b) {
  std::vector<RootVector> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  Character r(std::move(blocks));
  for (const auto& [u, cu] : a.entries())
    for (const auto& [v, cv] : b.entries()) r.add(u + v, cu * cv);
  return r;
}

Character restrict_to(const CartanData& cd, const Character& x, const std::vector<RootVector>& blocks) {
  RootVector total = cd.zero();
  for (const auto& b : blocks) {
    if (!b.is_nonnegative()) throw std::invalid_argument("restrict: blocks must lie in Q_+");
    total += b;
  }
  if (total != x.theta()) throw std::invalid_argument("restrict: block weights do not sum to theta");
  Character r(blocks);
  for (const auto& [w, c] : x.entries())
    if (!r.segments(cd, w).empty() || (w.empty() && blocks.size() <= 1) || total.is_zero()) r.add(w, c);
  return r;
}

Character dual(const Character& x) {
  Character r(x.blocks());
  for (const auto& [w, c] : x.entries()) r.add(w, bar(c));
  return r;
}

Report duality_shift_check(const CartanData& cd, const Character& a, const Character& b) {
  Report rep;
  rep.name = "duality-shift";
  rep.window = "exact";
  if (!a.is_exact() || !b.is_exact()) {
    rep.fail("duality check needs exact characters");
    return rep;
  }
  const Character lhs = dual(shuffle(cd, a, b));
  const int d = cd.form(single_block(cd, a, "dual"), single_block(cd, b, "dual"));
  const Character rhs = shuffle(cd, dual(b), dual(a)).shifted(d);
  rep.check(lhs == rhs, "bar(a o b) != q^" + std::to_string(d) + " bar(b) o bar(a)");
  return rep;
}

// ------------------------------------------------------------------- Mackey

std::vector<std::vector<std::vector<RootVector>>> block_matrices(const std::vector<RootVector>& rows,
                                                                 const std::vector<RootVector>& cols) {
  const std::size_t r = rows.size(), m = cols.size();
  std::vector<std::vector<std::vector<RootVector>>> out;
  if (r == 0 || m == 0) return out;
  const std::size_t dim = rows.front().size();
  std::vector<std::vector<RootVector>> kappa(r, std::vector<RootVector>(m, RootVector(dim)));
  std::vector<RootVector> row_rest = rows;
  // Fill column by column, row by row; the last row of a column takes the remainder.
  std::function<void(std::size_t, std::size_t, RootVector)> rec = [&](std::size_t col, std::size_t row,
                                                                      RootVector col_rest) {
    if (col == m) {
      for (const auto& rr : row_rest)
        if (!rr.is_zero()) return;
      out.push_back(kappa);
      return;
    }
    if (row + 1 == r) {
      if (!col_rest.fits_in(row_rest[row])) return;
      kappa[row][col] = col_rest;
      row_rest[row] -= col_rest;
      rec(col + 1, 0, col + 1 < m ? cols[col + 1] : RootVector(dim));
      row_rest[row] += col_rest;
      return;
    }
    RootVector cap(dim);
    for (std::size_t k = 0; k < dim; ++k) cap[k] = std::min(col_rest[k], row_rest[row][k]);
    for (const auto& part : lattice_box(cap)) {
      kappa[row][col] = part;
      row_rest[row] -= part;
      rec(col, row + 1, col_rest - part);
      row_rest[row] += part;
    }
  };
  rec(0, 0, cols.front());
  return out;
}

Character mackey_rhs(const CartanData& cd, const Character& m, const std::vector<RootVector>& target) {
  const auto& eta = m.blocks();
  const std::size_t r = target.size(), nb = eta.size();
  Character total(target);
  for (const auto& kappa : block_matrices(target, eta)) {
    // s = -sum over sub-blocks (a,b), (a',b') with b < b' and a > a' of (kappa_ab, kappa_a'b').
    int shift = 0;
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t b2 = b + 1; b2 < nb; ++b2)
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t a2 = 0; a2 < a; ++a2) shift += kCrossingSign * cd.form(kappa[a][b], kappa[a2][b2]);
    for (const auto& [w, c] : m.entries()) {
      const auto segs = m.segments(cd, w);
      if (segs.size() != nb) continue;
      // sub[a][b]: the piece of segment b of weight kappa_ab.
      std::vector<std::vector<Word>> sub(r, std::vector<Word>(nb));
      bool fits = true;
      for (std::size_t b = 0; b < nb && fits; ++b) {
        std::size_t pos = 0;
        for (std::size_t a = 0; a < r; ++a) {
          const auto h = static_cast<std::size_t>(kappa[a][b].height());
          Word piece = segs[b].substr(pos, h);
          if (word_weight(cd, piece) != kappa[a][b]) {
            fits = false;
            break;
          }
          sub[a][b] = std::move(piece);
          pos += h;
        }
      }
      if (!fits) continue;
      std::map<Word, LaurentPoly> acc{{Word(), LaurentPoly::q(shift)}};
      for (std::size_t a = 0; a < r; ++a) {
        std::map<Word, LaurentPoly> next;
        const auto block = shuffle_all(cd, sub[a]);
        for (const auto& [x, px] : acc)
          for (const auto& [y, py] : block) next[x + y] += px * py;
        acc = std::move(next);
      }
      for (const auto& [x, p] : acc)
        if (!p.is_zero()) total.add(x, LaurentSeries(p) * c);
    }
  }
  return total;
}

Report mackey_check(const CartanData& cd, const Character& m, const std::vector<RootVector>& target) {
  Report rep;
  rep.name = "mackey";
  const int t = m.min_truncation();
  rep.window = t == LaurentSeries::kExact ? "exact" : "q^" + std::to_string(t);
  const Character lhs = restrict_to(cd, induce_blocks(cd, m), target);
  const Character rhs = mackey_rhs(cd, m, target);
  rep.check(lhs.agrees_with(rhs), "Res o Ind differs from the filtration sum");
  return rep;
}

}  // namespace klr
