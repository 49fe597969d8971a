// klrtool: command-line front end. JSON on stdout by default, --pretty for
// human-readable text. Exit status 0 on success, 1 when a verification fails,
// 2 on invalid input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "klr/fdmodule.hpp"
#include "klr/json_io.hpp"
#include "klr/klrengine.hpp"

using namespace klr;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What a subcommand produces: the JSON document, an optional text rendering
/// and whether every verification in it passed.
struct Output {
  Json json;
  std::string pretty;
  bool ok = true;
};

struct Common {
  std::string type = "A1~";
  std::string order;  // file or inline JSON
  std::string theta;
  std::optional<int> height, degree;
  bool pretty = false;
  std::string output;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON if it looks like JSON, else the contents of a file.
Json json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  const std::string text = first != std::string::npos && (arg[first] == '{' || arg[first] == '[') ? arg : slurp(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::shared_ptr<const CartanData> cartan_of(const Common& c) {
  return std::make_shared<const CartanData>(CartanData::build(c.type));
}

/// --order if given (its type wins over --type), else the first of the orders
/// the acceptance suite exercises for the type.
ConvexPreorder order_of(Common& c) {
  if (!c.order.empty()) {
    Json j = json_arg(c.order);
    if (!j.contains("type")) j["type"] = c.type;
    auto o = order_from_json(j);
    c.type = o.cartan().label();
    return o;
  }
  return acceptance::tested_orders(cartan_of(c)).front();
}

RootVector theta_of(const Common& c, const CartanData& cd) {
  if (c.theta.empty()) throw InvalidInput("--theta is required");
  return cd.parse(c.theta);
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string(flag) + " is required");
  return *v;
}

/// Semicolon-separated root expressions.
std::vector<RootVector> roots_arg(const std::string& s, const CartanData& cd) {
  std::vector<RootVector> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ';');)
    if (!part.empty()) out.push_back(cd.parse(part));
  return out;
}

/// Inline JSON, a JSON file, or a bare word such as "0,1" (coefficient 1).
Character character_arg(const std::string& arg, const CartanData& cd) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '{' || std::filesystem::exists(arg))) {
    const Json j = json_arg(arg);
    // Accept our own output documents as well as bare characters.
    return character_from_json(j.contains("character") ? j.at("character") : j);
  }
  const Word w = word_from_string(arg);
  for (const char c : w)
    if (static_cast<std::size_t>(c) >= cd.num_vertices()) throw InvalidInput("letter out of range in " + arg);
  return Character::word(cd, w);
}

Json job(const std::string& command, const Common& c, const std::optional<ConvexPreorder>& order = std::nullopt) {
  Json j;
  j["command"] = command;
  j["type"] = CartanData::build(c.type).label();
  if (order) j["order"] = to_json(*order);
  if (!c.theta.empty()) j["theta"] = c.theta;
  if (c.height) j["height"] = *c.height;
  if (c.degree) j["degree"] = *c.degree;
  j["truncation"] = default_truncation();
  return j;
}

std::string report_line(const Report& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.window << "] " << r.checks << " checks";
  for (const auto& f : r.failures) os << "\n  " << f;
  return os.str();
}

std::string character_text(const Character& x) {
  std::ostringstream os;
  for (const auto& [w, s] : x.entries()) os << "  (" << word_to_string(w) << ")  " << s.to_string() << "\n";
  if (x.is_zero()) os << "  0\n";
  return os.str();
}

// ------------------------------------------------------------------ roots

Output cmd_roots(Common& c, bool indivisible) {
  const auto cd = cartan_of(c);
  const int h = need(c.height, "--height");
  const auto roots = indivisible ? cd->indivisible_roots_upto(h) : cd->positive_roots_upto(h);
  Output out;
  out.json["job"] = job("roots", c);
  out.json["cartan_matrix"] = cd->matrix();
  out.json["delta"] = to_json(cd->delta());
  Json list = Json::array();
  std::ostringstream os;
  os << cd->label() << "  delta = " << cd->delta().to_string() << "  height <= " << h << "\n";
  for (const auto& r : roots) {
    const bool real = cd->is_real_root(r);
    list.push_back({{"root", to_json(r)}, {"height", r.height()}, {"kind", real ? "real" : "imaginary"}});
    os << "  " << std::setw(3) << r.height() << "  " << r.to_string() << (real ? "" : "  imaginary") << "\n";
  }
  out.json["count"] = roots.size();
  out.json["roots"] = list;
  os << roots.size() << " roots\n";
  out.pretty = os.str();
  return out;
}

// ------------------------------------------------------------------ order

Output report_output(Json j, const Report& r) {
  Output out;
  j["report"] = to_json(r);
  out.json = std::move(j);
  out.ok = r.passed;
  out.pretty = report_line(r) + "\n";
  return out;
}

Output cmd_order(Common& c, const std::string& what, const std::string& base, const std::string& alpha) {
  const int h = need(c.height, "--height");
  if (what == "special") {
    const auto cd = cartan_of(c);
    const auto b = roots_arg(base, *cd);
    const RootVector a = cd->parse(alpha);
    const auto order = special_order(cd, b, a, h);
    Report r = verify_special_order(order, b, a, h);
    r.absorb(verify_convexity(order, h));
    return report_output({{"job", job("order special", c, order)}, {"order", to_json(order)}}, r);
  }
  const auto order = order_of(c);
  if (what == "verify") return report_output({{"job", job("order verify", c, order)}}, verify_convexity(order, h));
  const GammaData g = gamma_data(order, h);
  Json gj;
  gj["w_word"] = g.w_word;
  gj["balanced"] = g.balanced();
  Json rows = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < g.gamma.size(); ++i) {
    rows.push_back({{"i", i + 1},
                    {"gamma", to_json(g.gamma[i])},
                    {"plus", to_json(g.gamma_plus[i])},
                    {"minus", to_json(g.gamma_minus[i])}});
    os << "  i=" << i + 1 << "  gamma " << g.gamma[i].to_string() << "  + " << g.gamma_plus[i].to_string() << "  - "
       << g.gamma_minus[i].to_string() << "\n";
  }
  gj["data"] = rows;
  auto out = report_output({{"job", job("order gamma", c, order)}, {"gamma", gj}}, verify_gamma_data(order, g, h));
  out.pretty = os.str() + out.pretty;
  return out;
}

// ------------------------------------------------------ kostant / rootpart

Output cmd_partitions(Common& c, const std::string& what) {
  const auto order = order_of(c);
  const auto& cd = order.cartan();
  const RootVector theta = theta_of(c, cd);
  Output out;
  out.json["job"] = job(what, c, order);
  Json list = Json::array();
  std::ostringstream os;
  if (what == "rootpart") {
    for (const auto& pi : enumerate_root_partitions(theta, order)) {
      list.push_back(to_json(pi));
      os << "  " << pi.to_string() << "\n";
    }
  } else {
    const auto parts = what == "kostant" ? enumerate_kostant(theta, order) : minimal_pairs(theta, order);
    for (const auto& xi : parts) {
      list.push_back(to_json(xi));
      os << "  " << xi.to_string() << "\n";
    }
  }
  out.json["count"] = list.size();
  out.json["partitions"] = list;
  out.pretty = os.str() + std::to_string(list.size()) + " partitions\n";
  return out;
}

// ------------------------------------------------------------------- char

Output character_output(Json j, const Character& x) {
  Output out;
  j["character"] = to_json(x);
  out.json = std::move(j);
  out.pretty = character_text(x);
  return out;
}

Output cmd_char(Common& c, const std::string& what, const std::vector<std::string>& args, const std::string& blocks) {
  const auto cd = cartan_of(c);
  auto at = [&](std::size_t k) {
    if (k >= args.size()) throw InvalidInput("char " + what + " needs " + std::to_string(k + 1) + " character(s)");
    return character_arg(args[k], *cd);
  };
  Json j{{"job", job("char " + what, c)}};
  if (what == "shuffle") {
    Character x = at(0);
    for (std::size_t k = 1; k < args.size(); ++k) x = shuffle(*cd, x, at(k));
    return character_output(j, x);
  }
  if (what == "dual") return character_output(j, dual(at(0)));
  if (what == "restrict") return character_output(j, restrict_to(*cd, at(0), roots_arg(blocks, *cd)));
  // mackey: the module is the external product of the arguments.
  Character m = at(0);
  for (std::size_t k = 1; k < args.size(); ++k) m = tensor(m, at(k));
  const auto target = roots_arg(blocks, *cd);
  auto out = report_output(j, mackey_check(*cd, m, target));
  out.json["rhs"] = to_json(mackey_rhs(*cd, m, target));
  return out;
}

// -------------------------------------------------------------------- klr

Json module_json(const FdModule& m) {
  auto matrix = [](const QMatrix& a) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(a(r, k).get_str());
      rows.push_back(row);
    }
    return rows;
  };
  Json j;
  j["theta"] = to_json(m.theta);
  j["dim"] = m.dim();
  Json basis = Json::array();
  for (std::size_t b = 0; b < m.dim(); ++b) basis.push_back({{"word", word_to_string(m.word[b])}, {"degree", m.degree[b]}});
  j["basis"] = basis;
  Json ys = Json::array(), ps = Json::array();
  for (const auto& a : m.y) ys.push_back(matrix(a));
  for (const auto& a : m.psi) ps.push_back(matrix(a));
  j["y"] = ys;
  j["psi"] = ps;
  return j;
}

/// L(w_1) o ... o L(w_k) for a word of letters.
FdModule induced_letters(const std::shared_ptr<const CartanData>& cd, const Word& w) {
  FdModule m = unit_module(cd);
  for (const char l : w) {
    if (static_cast<std::size_t>(l) >= cd->num_vertices()) throw InvalidInput("letter out of range");
    m = induce(m, letter_module(cd, static_cast<int>(l)));
  }
  return m;
}

Output cmd_klr(Common& c, const std::string& what, const std::string& wi, const std::string& wj, int i0,
               int products, unsigned seed) {
  const auto cd = cartan_of(c);
  Json j{{"job", job("klr " + what, c)}};
  if (what == "induce" || what == "head") {
    if (wi.empty()) throw InvalidInput("--word is required");
    const FdModule m = induced_letters(cd, word_from_string(wi));
    if (what == "induce") {
      Report r = module_relation_check(m);
      auto out = report_output(j, r);
      out.json["module"] = module_json(m);
      out.pretty = "dim " + std::to_string(m.dim()) + "\n" + character_text(m.character()) + out.pretty;
      return out;
    }
    return character_output(j, head_character(m, unit_vector(m.dim(), 0)));
  }
  const RootVector theta = theta_of(c, *cd);
  if (what == "relcheck") return report_output(j, oracle_relation_check(cd, theta, need(c.degree, "--degree")));
  if (what == "rank") return report_output(j, dimension_rank_check(cd, theta, need(c.degree, "--degree")));
  KlrEngine e(cd, theta);
  if (what == "oracle")
    return report_output(j, engine_oracle_check(e, products, 2, c.degree.value_or(2), seed));
  if (what == "central") {
    if (i0 < 0 || static_cast<std::size_t>(i0) >= cd->num_vertices() || theta[static_cast<std::size_t>(i0)] == 0)
      throw InvalidInput("--i0 must be a vertex in the support of theta");
    const auto z = central_element(e, i0);
    auto out = report_output(j, central_element_check(e, z, c.degree.value_or(3)));
    out.json["z"] = e.to_string(z);
    out.pretty = "z = " + e.to_string(z) + "\n" + out.pretty;
    return out;
  }
  // dim
  const int d = need(c.degree, "--degree");
  Output out;
  out.json = j;
  std::ostringstream os;
  if (!wi.empty() || !wj.empty()) {
    const Word a = word_from_string(wi), b = word_from_string(wj);
    if (word_weight(*cd, a) != theta || word_weight(*cd, b) != theta) throw InvalidInput("words must have weight theta");
    const auto s = e.graded_dim(a, b, d);
    out.json["i"] = wi;
    out.json["j"] = wj;
    out.json["dim"] = to_json(s);
    os << "dim 1_j R 1_i = " << s.to_string() << "\n";
  } else {
    LaurentSeries total(LaurentPoly{}, d);
    Json blocks = Json::array();
    for (const auto& a : e.words())
      for (const auto& b : e.words()) {
        const auto s = e.graded_dim(a, b, d);
        total = total + s;
        blocks.push_back({{"i", word_to_string(a)}, {"j", word_to_string(b)}, {"dim", to_json(s)}});
      }
    out.json["dim"] = to_json(total);
    out.json["blocks"] = blocks;
    os << "dim R_theta = " << total.to_string() << "\n";
  }
  out.pretty = os.str();
  return out;
}

// ----------------------------------------------------------------- strata

StandardCharTable table_for(const ConvexPreorder& order, int cutoff, const std::string& table_file) {
  if (!table_file.empty()) return table_from_json(json_arg(table_file), order);
  TableOptions opts;
  opts.minuscule = cutoff >= order.cartan().delta_height();
  return build_standard_table(order, cutoff, opts);
}

Output cmd_strata(Common& c, const std::string& what, const std::string& table_file, int n) {
  const auto order = order_of(c);
  const auto& cd = order.cartan();
  Json j{{"job", job("strata " + what, c, order)}};

  if (what == "table" || what == "minuscule") {
    const int cutoff = c.height.value_or(what == "table" ? 2 * cd.delta_height() : cd.delta_height());
    j["job"]["height"] = cutoff;
    const auto t = table_for(order, cutoff, table_file);
    if (what == "table") {
      auto out = report_output(j, table_check(t));
      out.json["table"] = to_json(t);
      std::ostringstream os;
      for (const auto& [alpha, ch] : t.cuspidal) os << "L" << alpha.to_string() << "\n" << character_text(ch);
      out.pretty = os.str() + out.pretty;
      return out;
    }
    auto out = report_output(j, minuscule_restriction_check(t));
    Json mn = Json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < t.minuscule.size(); ++i) {
      mn.push_back(to_json(t.minuscule[i]));
      os << "L_{delta," << i + 1 << "}\n" << character_text(t.minuscule[i]);
    }
    out.json["minuscule"] = mn;
    out.pretty = os.str() + out.pretty;
    return out;
  }

  const RootVector theta = theta_of(c, cd);
  if (what == "cuspwords") {
    const SemicuspidalContext ctx(order, theta, n);
    Output out;
    out.json = j;
    out.json["n"] = n;
    Json sc = Json::array(), nsc = Json::array();
    for (const auto& w : ctx.sc_words()) sc.push_back(word_to_string(w));
    for (const auto& w : ctx.nsc_words()) nsc.push_back(word_to_string(w));
    out.json["semicuspidal"] = sc;
    out.json["non_semicuspidal"] = nsc;
    std::ostringstream os;
    os << sc.size() << " semicuspidal words of " << (sc.size() + nsc.size()) << "\n";
    for (const auto& w : sc) os << "  " << w.get<std::string>() << "\n";
    if (c.degree) {
      const auto s = semicuspidal_dim(ctx, *c.degree);
      out.json["graded_dim"] = to_json(s);
      os << "dim C = " << s.to_string() << "\n";
    }
    out.pretty = os.str();
    return out;
  }

  const int cutoff = std::max(theta.height(), cd.delta_height());
  const auto t = table_for(order, cutoff, table_file);
  if (what == "triangle") {
    const auto tri = decomposition_triangle(theta, order, t);
    auto out = report_output(j, tri.report);
    Json labels = Json::array(), rows = Json::array();
    std::ostringstream os;
    for (const auto& pi : tri.partitions) labels.push_back(pi.to_string());
    for (std::size_t p = 0; p < tri.d.size(); ++p) {
      Json row = Json::array();
      os << "  " << std::setw(24) << std::left << tri.partitions[p].to_string();
      for (const auto& e : tri.d[p]) {
        row.push_back(to_json(e));
        os << "  " << std::setw(10) << e.to_string();
      }
      rows.push_back(row);
      os << "\n";
    }
    out.json["partitions"] = labels;
    out.json["matrix"] = rows;
    out.pretty = os.str() + out.pretty;
    return out;
  }

  // standard | proper: every root partition of theta.
  Output out;
  out.json = j;
  Json list = Json::array();
  std::ostringstream os;
  const int d = c.degree.value_or(default_truncation());
  for (const auto& pi : enumerate_root_partitions(theta, order)) {
    Json e = to_json(pi);
    os << pi.to_string() << "\n";
    try {
      if (what == "standard") {
        const auto f = standard_fraction(pi, t);
        e["numerator"] = to_json(f.numerator);
        e["power"] = f.power;
        e["expanded"] = to_json(f.expand(d));
        os << "  over (1-q^2)^" << f.power << "\n" << character_text(f.numerator);
      } else {
        const auto x = proper_standard_character(pi, t);
        e["character"] = to_json(x);
        os << character_text(x);
      }
    } catch (const std::out_of_range&) {
      e["unavailable"] = "imaginary block needs external data (--table)";
      os << "  unavailable: imaginary block needs external data\n";
    }
    list.push_back(e);
  }
  out.json["partitions"] = list;
  out.pretty = os.str();
  return out;
}

// ------------------------------------------------------------- verify-all

Output cmd_verify_all(const std::vector<std::string>& types, const std::vector<int>& only, unsigned seed) {
  acceptance::Options opts;
  opts.types = types;
  opts.seed = seed;
  Output out;
  out.json["job"] = {{"command", "verify-all"}, {"types", types}, {"seed", seed}, {"truncation", default_truncation()}};
  Json rows = Json::array();
  std::ostringstream os;
  double total = 0;
  for (int id = 1; id <= acceptance::kCriteria; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto r = acceptance::run_criterion(id, opts);
    const std::string status = r.skipped ? "skip" : r.report.passed ? "pass" : "fail";
    Json row = to_json(r.report);
    row["id"] = id;
    row["status"] = status;
    row["seconds"] = std::round(r.seconds * 1000) / 1000;
    rows.push_back(row);
    os << acceptance::format_line(r) << "\n";
    out.ok = out.ok && (r.skipped || r.report.passed);
    total += r.seconds;
  }
  out.json["criteria"] = rows;
  out.json["passed"] = out.ok;
  os << (out.ok ? "all pass" : "failures present") << " in " << std::fixed << std::setprecision(2) << total << "s\n";
  out.pretty = os.str();
  return out;
}

void add_common(CLI::App* sub, Common& c, bool with_order, bool with_theta) {
  sub->add_option("--type", c.type, "affine type such as A1~, A2~, D4~");
  if (with_order) sub->add_option("--order", c.order, "order JSON (file or inline)");
  if (with_theta) sub->add_option("--theta", c.theta, "weight or root, e.g. \"a0+a1\", \"delta\", \"[1,2]\"");
  sub->add_option("--height", c.height, "height bound or table cutoff");
  sub->add_option("--degree", c.degree, "degree bound");
}

int emit(const Output& out, const Common& c) {
  const std::string text = c.pretty ? out.pretty : out.json.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.output);
    if (!f) throw InvalidInput("cannot write " + c.output);
    f << text;
  }
  return out.ok ? EXIT_SUCCESS : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for KLR algebras of affine ADE type"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--pretty", c.pretty, "human-readable text instead of JSON");
  app.add_option("--output,-o", c.output, "write to a file instead of stdout");

  std::function<Output()> run;

  bool indivisible = false;
  auto* roots = app.add_subcommand("roots", "positive roots up to a height");
  add_common(roots, c, false, false);
  roots->add_flag("--indivisible", indivisible, "only real roots and delta");
  roots->callback([&] { run = [&] { return cmd_roots(c, indivisible); }; });

  std::string base, alpha;
  auto* order = app.add_subcommand("order", "convex orders: verify, gamma, special");
  order->require_subcommand(1);
  for (const char* what : {"verify", "gamma", "special"}) {
    auto* s = order->add_subcommand(what);
    add_common(s, c, true, false);
    if (std::string(what) == "special") {
      s->add_option("--base", base, "finite base roots, ';'-separated")->required();
      s->add_option("--alpha", alpha, "finite root whose towers sit next to delta")->required();
    }
    s->callback([&, what] { run = [&, what] { return cmd_order(c, what, base, alpha); }; });
  }

  for (const char* what : {"kostant", "rootpart", "minpairs"}) {
    auto* s = app.add_subcommand(what, std::string(what) == "kostant"    ? "Kostant partitions of theta"
                                       : std::string(what) == "rootpart" ? "root partitions of theta"
                                                                         : "minimal pairs of a root");
    add_common(s, c, true, true);
    s->callback([&, what] { run = [&, what] { return cmd_partitions(c, what); }; });
  }

  std::vector<std::string> chars;
  std::string blocks;
  auto* chr = app.add_subcommand("char", "character calculus");
  chr->require_subcommand(1);
  for (const char* what : {"shuffle", "dual", "restrict", "mackey"}) {
    auto* s = chr->add_subcommand(what);
    add_common(s, c, false, false);
    s->add_option("characters", chars, "characters: inline JSON, file, or word like 0,1")->required();
    if (std::string(what) == "restrict" || std::string(what) == "mackey")
      s->add_option("--blocks", blocks, "target block weights, ';'-separated")->required();
    s->callback([&, what] { run = [&, what] { return cmd_char(c, what, chars, blocks); }; });
  }

  std::string wi, wj;
  int i0 = 0, products = 1000;
  unsigned seed = 2024;
  auto* klr = app.add_subcommand("klr", "KLR algebra: dim, relcheck, oracle, rank, central, induce, head");
  klr->require_subcommand(1);
  for (const char* what : {"dim", "relcheck", "oracle", "rank", "central", "induce", "head"}) {
    auto* s = klr->add_subcommand(what);
    const std::string w = what;
    add_common(s, c, false, w != "induce" && w != "head");
    if (w == "dim") {
      s->add_option("--i", wi, "source word");
      s->add_option("--j", wj, "target word");
    }
    if (w == "induce" || w == "head") s->add_option("--word", wi, "induce letter modules along this word")->required();
    if (w == "central") s->add_option("--i0", i0, "vertex defining z");
    if (w == "oracle") {
      s->add_option("--products", products, "random products to compare");
      s->add_option("--seed", seed);
    }
    s->callback([&, what] { run = [&, what] { return cmd_klr(c, what, wi, wj, i0, products, seed); }; });
  }

  std::string table_file;
  int n = 1;
  auto* strata = app.add_subcommand("strata", "standard characters and stratification data");
  strata->require_subcommand(1);
  for (const char* what : {"table", "standard", "proper", "triangle", "cuspwords", "minuscule"}) {
    auto* s = strata->add_subcommand(what);
    const std::string w = what;
    add_common(s, c, true, w != "table" && w != "minuscule");
    if (w != "cuspwords") s->add_option("--table", table_file, "import a table (JSON) instead of computing it");
    if (w == "cuspwords") s->add_option("--n", n, "multiplicity n of the weight n*theta");
    s->callback([&, what] { run = [&, what] { return cmd_strata(c, what, table_file, n); }; });
  }

  std::vector<std::string> types;
  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--type", types, "restrict to these types");
  verify->add_option("--criterion", only, "run only these criteria")->check(CLI::Range(1, acceptance::kCriteria));
  verify->add_option("--seed", seed);
  verify->callback([&] { run = [&] { return cmd_verify_all(types, only, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    return emit(run(), c);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    // NegativeCoefficient, InexactDivision and friends: the computation itself failed.
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
}
