// Command-line front end for the symcone library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
// 3 size guard exceeded.

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcone/cone.hpp"
#include "symcone/diag_cone.hpp"
#include "symcone/diagonals.hpp"
#include "symcone/json_io.hpp"
#include "symcone/partitions.hpp"
#include "symcone/taut_ring.hpp"

using namespace symcone;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kGuard = 3;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json json;
  Table csv;
  int code = kOk;
};

struct Globals {
  std::string format = "json";
  std::string out;
  bool guard_override = false;
  ConeLimits cone_limits;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    IntRange r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw DomainError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw DomainError("malformed range '" + text + "', expected N or A..B");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string parts_text(const Partition& p) { return to_json(p).dump(); }

std::string partitions_text(const std::vector<Partition>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a.dump();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json read_json_input(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON input: ") + e.what());
  }
}

Table class_table(const std::vector<TautClass>& classes) {
  Table t;
  if (classes.empty()) return t;
  t.header = {"g", "d", "codim"};
  const auto& c0 = classes.front();
  for (int a = 0; a < static_cast<int>(c0.coeffs().size()); ++a) t.header.push_back(monomial_name(c0.codim(), a));
  for (const auto& c : classes) {
    std::vector<std::string> row{std::to_string(c.ctx().g), std::to_string(c.ctx().d), std::to_string(c.codim())};
    for (const auto& q : c.coeffs()) row.push_back(to_string(q));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<std::string> report_row(const DiagConeReport& r) {
  return {std::to_string(r.ctx.g),       std::to_string(r.ctx.d),           std::to_string(r.n),
          std::to_string(r.r),           std::to_string(r.s),               bool_text(r.match),
          bool_text(r.eta_supported),    bool_text(r.dim_ok),               partitions_text(r.brute_extremal),
          partitions_text(r.predicted_extremal)};
}

const std::vector<std::string> kReportHeader{"g",     "d",           "n",      "r",
                                             "s",     "match",       "eta_supported",
                                             "dim_ok", "brute_extremal", "predicted_extremal"};

bool report_ok(const DiagConeReport& r) {
  return r.match && r.dim_ok && r.eta_supported && r.basis_check.value_or(true);
}

// ---------------------------------------------------------------- commands

Outcome cmd_diag_class(int g, int d, const std::vector<int>& parts) {
  const DiagonalSpec spec(RingContext(g, d), Partition(parts));
  const TautClass c = diagonal_class(spec);
  return {to_json(c), class_table({c}), kOk};
}

Outcome cmd_eta_check(int g, int d, int n) {
  const RingContext ctx(g, d);
  if (n < 1 || n > d - 1) throw DomainError("--n must lie in [1, d-1]");
  Outcome o;
  o.csv.header = {"parts", "value"};
  Json rows = Json::array();
  bool all_zero = true;
  for (const auto& p : enumerate_partitions(d, n)) {
    if (p.size() != n) continue;
    const Rational v = eta_pair_diagonal(DiagonalSpec(ctx, p));
    all_zero = all_zero && v == 0;
    Json row;
    row["parts"] = to_json(p);
    row["value"] = to_string(v);
    rows.push_back(row);
    o.csv.rows.push_back({parts_text(p), to_string(v)});
  }
  o.json["g"] = g;
  o.json["d"] = d;
  o.json["n"] = n;
  o.json["pairings"] = rows;
  o.json["all_zero"] = all_zero;
  o.code = all_zero ? kOk : kMismatch;
  return o;
}

Outcome cmd_diag_cone(const std::string& g_text, const std::string& d_text, int n, bool sweep,
                      const Globals& globals) {
  const IntRange gs = parse_range(g_text);
  const IntRange ds = parse_range(d_text);
  std::vector<DiagConeReport> reports;
  if (!sweep) {
    if (gs.lo != gs.hi || ds.lo != ds.hi) throw DomainError("ranges need --sweep");
    if (n == 0) throw DomainError("--n is required without --sweep");
    reports.push_back(analyze(RingContext(gs.lo, ds.lo), n, globals.cone_limits));
  } else {
    for (int g = gs.lo; g <= gs.hi; ++g)
      for (int d = ds.lo; d <= ds.hi; ++d) {
        const RingContext ctx(g, d);
        if (n != 0) {
          if (n <= d - 1) reports.push_back(analyze(ctx, n, globals.cone_limits));
          continue;
        }
        for (int k = 1; k <= d - 1; ++k) reports.push_back(analyze(ctx, k, globals.cone_limits));
      }
  }
  Outcome o;
  o.csv.header = kReportHeader;
  bool all_ok = true;
  for (const auto& r : reports) {
    all_ok = all_ok && report_ok(r);
    o.csv.rows.push_back(report_row(r));
  }
  if (!sweep) {
    o.json = to_json(reports.front());
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    o.json["reports"] = arr;
    o.json["instances"] = static_cast<int>(reports.size());
    o.json["all_match"] = all_ok;
  }
  o.code = all_ok ? kOk : kMismatch;
  return o;
}

Outcome cmd_polytope(int t, int s, int r, const Globals& globals) {
  PolytopeSizeGuards guards;
  if (globals.guard_override) guards = {INT_MAX, INT_MAX};
  const PolytopeReport rep = polytope_pi(t, s, r, guards);
  Outcome o;
  o.json = to_json(rep);
  o.csv.header = {"partition"};
  for (int k = 2; k <= r; ++k) o.csv.header.push_back("sigma_" + std::to_string(k));
  o.csv.header.push_back("vertex");
  std::vector<bool> is_vertex(rep.partitions.size(), false);
  for (int i : rep.polytope.vertex_indices) is_vertex[static_cast<std::size_t>(i)] = true;
  for (std::size_t i = 0; i < rep.partitions.size(); ++i) {
    std::vector<std::string> row{parts_text(rep.partitions[i])};
    for (const auto& q : rep.polytope.points[i]) row.push_back(to_string(q));
    row.push_back(bool_text(is_vertex[i]));
    o.csv.rows.push_back(std::move(row));
  }
  o.code = rep.match ? kOk : kMismatch;
  return o;
}

Outcome cmd_cheb(int t, int r, const std::vector<std::string>& coeff_text, const Globals& globals) {
  if (r < 2) throw DomainError("--r must be >= 2");
  if (static_cast<int>(coeff_text.size()) > r) throw DomainError("--coeffs takes at most r values a0, a2, ..., ar");
  if (coeff_text.empty()) throw DomainError("--coeffs needs at least a0");
  std::vector<Rational> higher(static_cast<std::size_t>(r - 1), Rational(0));
  for (std::size_t i = 1; i < coeff_text.size(); ++i) higher[i - 1] = parse_rational(coeff_text[i]);
  const SymAffineForm f(r, parse_rational(coeff_text.front()), higher);

  SizeGuards guards;
  if (globals.guard_override) guards = {INT_MAX, INT_MAX};
  const bool certified = cheb_certify(f, t);
  const MinResult m = brute_min(f, t, guards);

  Outcome o;
  Json values = Json::array();
  o.csv.header = {"quantity", "value"};
  for (int j = 1; j <= r; ++j) {
    const Rational v = f(balanced(t, j).partition);
    values.push_back(to_string(v));
    o.csv.rows.push_back({"balanced_" + std::to_string(j), to_string(v)});
  }
  o.json["form"] = to_json(f);
  o.json["t"] = t;
  o.json["certified"] = certified;
  o.json["balanced_values"] = values;
  o.json["brute_min"] = to_string(m.value);
  o.json["witness"] = to_json(m.witness);
  o.csv.rows.push_back({"certified", bool_text(certified)});
  o.csv.rows.push_back({"brute_min", to_string(m.value)});
  o.csv.rows.push_back({"witness", parts_text(m.witness)});
  o.code = (certified && m.value < 0) ? kMismatch : kOk;
  return o;
}

Table cone_table(const RationalCone& k) {
  Table t;
  for (int i = 0; i < k.ambient_dim(); ++i) t.header.push_back("x" + std::to_string(i));
  for (const auto& g : k.generators()) t.rows.push_back(to_strings(g));
  return t;
}

Json faces_json(const std::vector<FaceDescriptor>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(to_json(f));
  return arr;
}

Table faces_table(const std::vector<FaceDescriptor>& fs) {
  Table t{{"dim", "generators", "is_exposed", "is_perfect"}, {}};
  for (const auto& f : fs)
    t.rows.push_back({std::to_string(f.dim), Json(f.generator_indices).dump(), bool_text(f.is_exposed),
                      bool_text(f.is_perfect)});
  return t;
}

Outcome cmd_cone(const std::string& action, const std::string& in, const Globals& globals) {
  const Json input = read_json_input(in);
  Outcome o;
  if (action == "edges1") {
    const int dim = input.contains("dim") ? input.at("dim").get<int>() : -1;
    std::vector<VectorXq> y;
    for (const auto& v : input.at("Y")) y.push_back(vector_from_json(v));
    const VectorXq l = vector_from_json(input.at("l"));
    const VectorXq phi = vector_from_json(input.at("phi"));
    if (dim >= 0 && l.size() != dim) throw DomainError("'l' does not match 'dim'");
    const auto delta = input.at("delta").get<std::vector<int>>();
    const Edges1Report rep = edges1_verify(y, delta, l, phi, globals.cone_limits);
    o.json = to_json(rep);
    o.csv.header = {"clause", "status"};
    for (const auto& [name, c] : rep.hypotheses) o.csv.rows.push_back({"hypothesis " + name, to_string(c.status)});
    for (const auto& [name, c] : rep.conclusions) o.csv.rows.push_back({"conclusion " + name, to_string(c.status)});
    o.code = rep.ok() ? kOk : kMismatch;
    return o;
  }
  const RationalCone k = cone_from_json(input, globals.cone_limits);
  if (action == "dual") {
    const RationalCone kd = dual(k);
    o.json = to_json(kd);
    o.csv = cone_table(kd);
  } else if (action == "faces") {
    const auto fs = faces(k);
    o.json["dim"] = k.ambient_dim();
    o.json["faces"] = faces_json(fs);
    o.csv = faces_table(fs);
  } else if (action == "perfect") {
    const auto fs = faces(k);
    const bool all = std::all_of(fs.begin(), fs.end(), [](const FaceDescriptor& f) { return f.is_perfect; });
    o.json["dim"] = k.ambient_dim();
    o.json["faces"] = faces_json(fs);
    o.json["all_perfect"] = all;
    o.csv = faces_table(fs);
    o.code = all ? kOk : kMismatch;
  } else {
    throw DomainError("unknown cone action '" + action + "'");
  }
  return o;
}

Outcome cmd_taut(const std::string& action, const std::string& in) {
  const Json input = read_json_input(in);
  Outcome o;
  if (action == "reduce") {
    const TautClass c = reduce(monomial_sum_from_json(input));
    o.json = to_json(c);
    o.csv = class_table({c});
  } else if (action == "mul") {
    const TautClass c = multiply(taut_class_from_json(input.at("u")), taut_class_from_json(input.at("v")));
    o.json = to_json(c);
    o.csv = class_table({c});
  } else if (action == "pair") {
    const Rational v = pair(taut_class_from_json(input.at("u")), taut_class_from_json(input.at("v")));
    o.json["value"] = to_string(v);
    o.csv = {{"value"}, {{to_string(v)}}};
  } else {
    throw DomainError("unknown taut action '" + action + "'");
  }
  return o;
}

Outcome cmd_sweep(const std::string& kind, const std::string& g_text, const std::string& d_text,
                  const std::string& t_text, const Globals& globals) {
  Outcome o;
  Json failures = Json::array();
  int instances = 0;
  o.csv.header = {"instance", "pass"};
  auto record = [&](Json id, bool pass) {
    ++instances;
    o.csv.rows.push_back({id.dump(), bool_text(pass)});
    if (!pass) failures.push_back(std::move(id));
  };

  if (kind == "polytope") {
    const IntRange ts = parse_range(t_text);
    PolytopeSizeGuards guards;
    if (globals.guard_override) guards = {INT_MAX, INT_MAX};
    for (int t = std::max(2, ts.lo); t <= ts.hi; ++t)
      for (int s = 2; s <= t; ++s)
        for (int r = 2; r <= std::min(s, 6); ++r)
          record(Json{{"t", t}, {"s", s}, {"r", r}}, polytope_pi(t, s, r, guards).match);
  } else {
    const IntRange gs = parse_range(g_text);
    const IntRange ds = parse_range(d_text);
    for (int g = gs.lo; g <= gs.hi; ++g) {
      for (int d = ds.lo; d <= ds.hi; ++d) {
        const RingContext ctx(g, d);
        if (kind == "presentation") {
          if (d >= 2 * g - 1) record(Json{{"g", g}, {"d", d}}, verify_presentation(ctx));
          continue;
        }
        if (kind == "identities") {
          bool pass = top_eta_identity_check(ctx);
          for (int n = 1; n <= d - 1; ++n) pass = pass && eta_decomposition_check(ctx, n);
          record(Json{{"g", g}, {"d", d}}, pass);
          continue;
        }
        for (int n = 1; n <= d - 1; ++n) {
          const Json id{{"g", g}, {"d", d}, {"n", n}};
          if (kind == "eta") {
            bool pass = true;
            for (const auto& p : enumerate_partitions(d, n))
              if (p.size() == n && eta_pair_diagonal(DiagonalSpec(ctx, p)) != 0) pass = false;
            record(id, pass);
          } else if (kind == "diag-cone") {
            record(id, report_ok(analyze(ctx, n, globals.cone_limits)));
          } else {
            throw DomainError("unknown sweep kind '" + kind + "'");
          }
        }
      }
    }
  }
  o.json["kind"] = kind;
  o.json["instances"] = instances;
  o.json["failures"] = failures;
  o.json["pass"] = failures.empty();
  o.code = failures.empty() ? kOk : kMismatch;
  return o;
}

int emit(const Outcome& o, const Globals& g) {
  const std::string text = g.format == "csv" ? render_csv(o.csv) : o.json.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "error: cannot write '" << g.out << "'\n";
      return kInputError;
    }
    f << text;
  }
  return o.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with diagonal cycle classes and rational polyhedral cones"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", globals.out, "Write output to this path instead of stdout");
  app.add_flag("--guard-override", globals.guard_override, "Lift the default size guards");

  int g = 0, d = 0, n = 0, t = 0, s = 0, r = 0;
  std::string g_text = "1", d_text = "2", t_text = "2..20", in = "-", kind;
  std::vector<int> parts;
  std::vector<std::string> coeffs;
  bool sweep = false;

  auto* diag_class = app.add_subcommand("diag-class", "Class of a diagonal in the standard basis");
  diag_class->add_option("--g", g)->required();
  diag_class->add_option("--d", d)->required();
  diag_class->add_option("--parts", parts, "Comma separated partition of d")->required()->delimiter(',');

  auto* eta_check = app.add_subcommand("eta-check", "Pair eta with every n-dimensional diagonal");
  eta_check->add_option("--g", g)->required();
  eta_check->add_option("--d", d)->required();
  eta_check->add_option("--n", n)->required();

  auto* diag_cone = app.add_subcommand("diag-cone", "Extremal rays of the diagonal cone against the prediction");
  diag_cone->add_option("--g", g_text, "Genus or range A..B")->required();
  diag_cone->add_option("--d", d_text, "Degree or range A..B")->required();
  diag_cone->add_option("--n", n, "Dimension of the diagonals (all when sweeping and omitted)");
  diag_cone->add_flag("--sweep", sweep, "Sweep over ranges");

  auto* polytope = app.add_subcommand("polytope", "Vertices of the sigma polytope of partitions");
  polytope->add_option("--t", t)->required();
  polytope->add_option("--s", s)->required();
  polytope->add_option("--r", r)->required();

  auto* cheb = app.add_subcommand("cheb", "Certify a0 + a2 sigma_2 + ... + ar sigma_r >= 0");
  cheb->add_option("--t", t)->required();
  cheb->add_option("--r", r)->required();
  cheb->add_option("--coeffs", coeffs, "a0,a2,...,ar as p/q; missing trailing values are 0")
      ->required()
      ->delimiter(',');

  std::string cone_action, taut_action;
  auto* cone = app.add_subcommand("cone", "Rational cone operations on a JSON cone");
  cone->add_option("action", cone_action, "dual | faces | perfect | edges1")
      ->required()
      ->check(CLI::IsMember({"dual", "faces", "perfect", "edges1"}));
  cone->add_option("--in", in, "Input JSON file, - for stdin");

  auto* taut = app.add_subcommand("taut", "Tautological ring arithmetic on JSON classes");
  taut->add_option("action", taut_action, "mul | pair | reduce")
      ->required()
      ->check(CLI::IsMember({"mul", "pair", "reduce"}));
  taut->add_option("--in", in, "Input JSON file, - for stdin");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a verification sweep");
  sweep_cmd->add_option("--kind", kind, "eta | diag-cone | polytope | presentation | identities")
      ->required()
      ->check(CLI::IsMember({"eta", "diag-cone", "polytope", "presentation", "identities"}));
  sweep_cmd->add_option("--g", g_text, "Genus range A..B");
  sweep_cmd->add_option("--d", d_text, "Degree range A..B");
  sweep_cmd->add_option("--t", t_text, "Range of t for polytope sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (const char* env = std::getenv("SYMCONE_MAX_AMBIENT")) {
      int bound = 0;
      try {
        bound = std::stoi(env);
      } catch (const std::logic_error&) {
        throw DomainError("SYMCONE_MAX_AMBIENT must be an integer");
      }
      if (bound < 1) throw DomainError("SYMCONE_MAX_AMBIENT must be positive");
      if (bound > ConeLimits{}.max_ambient && !globals.guard_override)
        throw DomainError("raising SYMCONE_MAX_AMBIENT above the default needs --guard-override");
      globals.cone_limits.max_ambient = bound;
    }

    Outcome o;
    if (*diag_class) o = cmd_diag_class(g, d, parts);
    else if (*eta_check) o = cmd_eta_check(g, d, n);
    else if (*diag_cone) o = cmd_diag_cone(g_text, d_text, n, sweep, globals);
    else if (*polytope) o = cmd_polytope(t, s, r, globals);
    else if (*cheb) o = cmd_cheb(t, r, coeffs, globals);
    else if (*cone) o = cmd_cone(cone_action, in, globals);
    else if (*taut) o = cmd_taut(taut_action, in);
    else if (*sweep_cmd) o = cmd_sweep(kind, g_text, d_text, t_text, globals);
    return emit(o, globals);
  } catch (const ResourceError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kInputError;
  }
}
