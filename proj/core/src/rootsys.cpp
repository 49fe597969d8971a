#include "klr/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

namespace klr {

// ----------------------------------------------------------------- RootVector

RootVector RootVector::simple(std::size_t size, std::size_t i) {
  RootVector v(size);
  v.coords_.at(i) = 1;
  return v;
}

int RootVector::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool RootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

bool RootVector::fits_in(const RootVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.size() != size()) throw std::invalid_argument("RootVector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.size() != size()) throw std::invalid_argument("RootVector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RootVector operator-(RootVector a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

RootVector operator*(int k, RootVector a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    int c = coords_[i];
    if (c == 0) continue;
    if (c < 0)
      os << (first ? "-" : "-");
    else if (!first)
      os << "+";
    if (std::abs(c) != 1) os << std::abs(c);
    os << "a" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

std::size_t RootVectorHash::operator()(const RootVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int c : v.coords()) {
    h ^= static_cast<std::size_t>(c + 0x9e3779b9);
    h *= 1099511628211ull;
  }
  return h;
}

// ----------------------------------------------------------------- CartanData

namespace {

struct ParsedLabel {
  AffineType family;
  int rank;
};

ParsedLabel parse_label(const std::string& raw) {
  static const std::regex tilde(R"(^([ADEade])_?(\d+)(~|\^\(1\)|\^1)?$)");
  std::smatch m;
  if (!std::regex_match(raw, m, tilde))
    throw std::invalid_argument("unknown Cartan type label '" + raw + "'");
  const char f = static_cast<char>(std::toupper(m[1].str()[0]));
  const int l = std::stoi(m[2].str());
  switch (f) {
    case 'A':
      if (l < 1) break;
      return {AffineType::A, l};
    case 'D':
      if (l < 4) break;
      return {AffineType::D, l};
    case 'E':
      if (l < 6 || l > 8) break;
      return {AffineType::E, l};
    default:
      break;
  }
  throw std::invalid_argument("unsupported Cartan type label '" + raw + "'");
}

using Edges = std::vector<std::pair<int, int>>;

Edges dynkin_edges(AffineType family, int l) {
  Edges e;
  switch (family) {
    case AffineType::A:
      for (int i = 0; i < l; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(l, 0);
      break;
    case AffineType::D:
      for (int i = 1; i + 1 <= l - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(l - 2, l - 1);
      e.emplace_back(l - 2, l);
      e.emplace_back(0, 2);
      break;
    case AffineType::E:
      // Bourbaki labelling of the finite diagram: 1-3-4-...-l and 2-4.
      e.emplace_back(1, 3);
      for (int i = 3; i < l; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, 4);
      if (l == 6) e.emplace_back(0, 2);
      if (l == 7) e.emplace_back(0, 1);
      if (l == 8) e.emplace_back(0, 8);
      break;
  }
  return e;
}

// Primitive positive integer vector spanning the kernel of an integer matrix of
// corank one, by fraction-free elimination.
std::vector<int> null_vector(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<int> pivot_col(n, -1);
  std::size_t row = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const long f = a[r][col], g = a[row][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = a[r][c] * g - a[row][c] * f;
      long gcd = 0;
      for (long v : a[r]) gcd = std::gcd(gcd, v);
      if (gcd > 1)
        for (long& v : a[r]) v /= gcd;
    }
    pivot_col[row] = static_cast<int>(col);
    is_pivot[col] = true;
    ++row;
  }
  std::size_t free_col = n;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      if (free_col != n) throw std::logic_error("Cartan matrix has corank > 1");
      free_col = c;
    }
  if (free_col == n) throw std::logic_error("Cartan matrix is nonsingular");
  // x_free = L, x_pivot = -a[r][free] * L / a[r][pivot]; pick L = lcm of pivots.
  long lcm = 1;
  for (std::size_t r = 0; r < row; ++r) lcm = std::lcm(lcm, std::abs(a[r][pivot_col[r]]));
  std::vector<long> x(n, 0);
  x[free_col] = lcm;
  for (std::size_t r = 0; r < row; ++r)
    x[pivot_col[r]] = -a[r][free_col] * lcm / a[r][pivot_col[r]];
  long g = 0;
  for (long v : x) g = std::gcd(g, v);
  if (x[free_col] < 0 || x[0] < 0) g = -g;
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(x[i] / g);
  for (int v : out)
    if (v <= 0) throw std::logic_error("null vector is not positive");
  return out;
}

}  // namespace

CartanData CartanData::build(const std::string& type_label) {
  const ParsedLabel parsed = parse_label(type_label);
  CartanData c;
  c.family_ = parsed.family;
  c.rank_ = parsed.rank;
  const char letter = parsed.family == AffineType::A ? 'A' : parsed.family == AffineType::D ? 'D' : 'E';
  c.label_ = std::string(1, letter) + std::to_string(parsed.rank) + "~";
  const std::size_t n = c.num_vertices();
  c.matrix_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c.matrix_[i][i] = 2;
  if (parsed.family == AffineType::A && parsed.rank == 1) {
    c.matrix_[0][1] = c.matrix_[1][0] = -2;
  } else {
    for (auto [i, j] : dynkin_edges(parsed.family, parsed.rank)) {
      c.matrix_[i][j] = -1;
      c.matrix_[j][i] = -1;
    }
  }
  c.delta_ = RootVector(null_vector(c.matrix_));
  if (c.delta_[0] != 1) throw std::logic_error("affine vertex must have mark 1");

  // Finite positive roots by closure: beta + alpha_i is a root iff (beta, alpha_i) = -1.
  std::vector<RootVector> layer;
  for (std::size_t i = 1; i < n; ++i) layer.push_back(c.simple_root(i));
  std::unordered_set<RootVector, RootVectorHash> seen(layer.begin(), layer.end());
  while (!layer.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : layer) {
      c.finite_pos_.push_back(beta);
      for (std::size_t i = 1; i < n; ++i) {
        RootVector ai = c.simple_root(i);
        if (c.form(beta, ai) != -1) continue;
        RootVector up = beta + ai;
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::sort(c.finite_pos_.begin(), c.finite_pos_.end(), [](const RootVector& a, const RootVector& b) {
    return a.height() != b.height() ? a.height() < b.height() : a < b;
  });
  for (const auto& beta : c.finite_pos_) {
    c.finite_all_.insert(beta);
    c.finite_all_.insert(-beta);
  }
  return c;
}

int CartanData::epsilon(std::size_t i, std::size_t j) const {
  if (matrix_[i][j] >= 0) throw std::invalid_argument("epsilon defined only for c_ij < 0");
  return i < j ? 1 : -1;
}

int CartanData::form(const RootVector& beta, const RootVector& gamma) const {
  if (beta.size() != num_vertices() || gamma.size() != num_vertices())
    throw std::invalid_argument("form: dimension mismatch");
  int s = 0;
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    if (beta[i] == 0) continue;
    for (std::size_t j = 0; j < num_vertices(); ++j) s += beta[i] * matrix_[i][j] * gamma[j];
  }
  return s;
}

bool CartanData::is_finite_root(const RootVector& beta) const {
  return beta.size() == num_vertices() && finite_all_.count(beta) > 0;
}

RootVector strip_delta(const CartanData& cartan, const RootVector& beta) {
  return beta - beta[0] * cartan.delta();
}

bool CartanData::is_real_root(const RootVector& beta) const {
  if (beta.size() != num_vertices() || !beta.is_positive()) return false;
  return is_finite_root(strip_delta(*this, beta));
}

bool CartanData::is_imaginary_root(const RootVector& beta) const {
  if (beta.size() != num_vertices() || !beta.is_positive()) return false;
  return strip_delta(*this, beta).is_zero();
}

std::vector<RootVector> CartanData::positive_roots_upto(int max_height) const {
  std::vector<RootVector> out;
  const int h = delta_height();
  for (int k = 0; k * h <= max_height + h; ++k) {
    const RootVector kd = k * delta_;
    if (k > 0 && kd.height() <= max_height) out.push_back(kd);
    for (const auto& beta : finite_pos_) {
      RootVector up = beta + kd;
      if (up.height() <= max_height) out.push_back(up);
      if (k > 0) {
        RootVector down = kd - beta;
        if (down.height() <= max_height) out.push_back(down);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    return a.height() != b.height() ? a.height() < b.height() : a < b;
  });
  return out;
}

std::vector<RootVector> CartanData::indivisible_roots_upto(int max_height) const {
  std::vector<RootVector> out;
  for (auto& r : positive_roots_upto(max_height))
    if (is_indivisible(r)) out.push_back(std::move(r));
  return out;
}

RootVector CartanData::project(const RootVector& beta) const {
  if (!is_root(beta)) throw std::invalid_argument("project: " + beta.to_string() + " is not a root");
  return strip_delta(*this, beta);
}

RootVector CartanData::hat_lift(const RootVector& beta) const {
  if (!is_finite_root(beta)) throw std::invalid_argument("hat_lift: " + beta.to_string() + " is not in Phi'");
  return beta.is_nonnegative() ? beta : beta + delta_;
}

RootVector CartanData::reflect(std::size_t i, const RootVector& beta) const {
  RootVector r = beta;
  r[i] -= form(beta, simple_root(i));
  return r;
}

RootVector CartanData::parse(const std::string& expr) const {
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty root expression");
  RootVector out = zero();
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("bad root vector '" + expr + "'");
    std::vector<int> coords;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(std::stoi(tok));
    if (coords.size() != num_vertices())
      throw std::invalid_argument("root vector '" + expr + "' has wrong length");
    return RootVector(coords);
  }
  static const std::regex term(R"(([+-]?)(\d*)\*?(delta|d|a(\d+)|alpha_?(\d+)))");
  std::size_t pos = 0;
  for (std::sregex_iterator it(s.begin(), s.end(), term), end; it != end; ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != pos || (pos > 0 && m[1].str().empty()))
      throw std::invalid_argument("cannot parse root expression '" + expr + "'");
    pos += m.length();
    int coef = m[2].str().empty() ? 1 : std::stoi(m[2].str());
    if (m[1].str() == "-") coef = -coef;
    if (m[3].str() == "delta" || m[3].str() == "d") {
      out += coef * delta_;
    } else {
      const std::string idx = m[4].matched ? m[4].str() : m[5].str();
      const std::size_t i = std::stoul(idx);
      if (i >= num_vertices()) throw std::invalid_argument("vertex index out of range in '" + expr + "'");
      out += coef * simple_root(i);
    }
  }
  if (pos != s.size()) throw std::invalid_argument("cannot parse root expression '" + expr + "'");
  return out;
}

std::vector<RootVector> lattice_box(const RootVector& bound) {
  std::vector<RootVector> out;
  RootVector cur(bound.size());
  while (true) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < bound.size() && cur[k] == bound[k]) cur[k++] = 0;
    if (k == bound.size()) break;
    ++cur[k];
  }
  return out;
}

}  // namespace klr
