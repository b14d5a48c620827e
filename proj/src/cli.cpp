#include "pointbound/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pointbound/bounds.hpp"
#include "pointbound/error.hpp"
#include "pointbound/fforacle.hpp"
#include "pointbound/genus2.hpp"
#include "pointbound/nqtable.hpp"
#include "pointbound/trigpoly.hpp"
#include "pointbound/weilroots.hpp"

namespace pointbound {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  int precision = 0;
  Precision prec() const {
    Precision p;
    if (precision > 0) p.max_bits = precision;
    return p;
  }
};

// Rows of cells printed with each column padded to its widest cell.
class Table {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string cell = row[i];
        if (i + 1 < row.size()) cell.resize(width[i], ' ');
        line += (i ? "  " : "") + cell;
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

Integer parse_q(const std::string& text) {
  Integer q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("--q: '" + text + "' is not an integer");
  if (!prime_power(q)) throw UsageError("--q: " + text + " is not a prime power");
  return q;
}

std::vector<long> parse_long_list(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(flag + " is empty");
  return out;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--pi-range must look like A:B");
  auto a = parse_long_list(text.substr(0, colon), "--pi-range");
  auto b = parse_long_list(text.substr(colon + 1), "--pi-range");
  if (a.size() != 1 || b.size() != 1 || a[0] > b[0]) throw UsageError("--pi-range must look like A:B with A <= B");
  return {a[0], b[0]};
}

Rat parse_lambda(const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const std::exception&) {
    throw UsageError("'" + text + "' is not a rational number");
  }
}

json real_json(const CertifiedReal& x) {
  json j{{"decimal", x.to_string()}};
  if (x.exact()) j["exact"] = x.exact()->to_string();
  return j;
}

std::string real_text(const CertifiedReal& x) {
  if (x.exact()) return x.exact()->to_string() + " = " + x.to_string();
  return x.to_string();
}

std::vector<std::string> integer_strings(const std::vector<Integer>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

void emit(std::ostream& out, const std::string& command, const json& inputs, const json& result,
          const std::vector<std::string>& warnings) {
  json env{{"command", command}, {"inputs", inputs}, {"result", result}, {"warnings", warnings}};
  out << env.dump(2) << "\n";
}

// ---- bound ----

struct BoundArgs {
  std::string q;
  long g = -1, pi = -1;
  std::string poly;
  bool no_lt = false;
};

int cmd_bound(const Globals& gl, const BoundArgs& a, std::ostream& out) {
  Integer q = parse_q(a.q);
  if (a.g < 0 || a.pi < a.g) throw UsageError("need 0 <= g <= pi");
  std::vector<TrigPolynomial> polys;
  if (a.poly.empty()) {
    polys = default_polynomials();
  } else if (a.poly.rfind("lambda=", 0) == 0) {
    polys.push_back(construct_polynomial(q, parse_lambda(a.poly.substr(7)), gl.prec()));
  } else {
    auto r = parse_long_list(a.poly, "--poly");
    if (r.size() != 1 || r[0] < 2 || r[0] > 5) throw UsageError("--poly takes a preset r in 2..5 or lambda=L");
    polys.push_back(preset(static_cast<int>(r[0])));
  }
  BoundOptions opts;
  opts.use_lt = !a.no_lt;
  opts.prec = gl.prec();
  BoundReport rep = best_bound({q, a.g, a.pi}, polys, opts);

  if (gl.json) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
      entries.push_back({{"formula", formula_name(e.formula)},
                         {"poly", e.poly},
                         {"value", real_json(e.value)},
                         {"bound", e.floor.get_str()}});
    }
    const auto& b = rep.best();
    json result{{"entries", entries},
                {"best", {{"formula", formula_name(b.formula)}, {"poly", b.poly}, {"bound", b.floor.get_si()}}}};
    emit(out, "bound", {{"q", q.get_str()}, {"g", a.g}, {"pi", a.pi}, {"poly", a.poly}, {"no_lt", a.no_lt}}, result, {});
    return 0;
  }
  out << "N_" << q.get_str() << "(" << a.g << ", " << a.pi << ") upper bounds\n";
  Table t;
  t.add({"formula", "polynomial", "value", "bound"});
  for (const auto& e : rep.entries) t.add({formula_name(e.formula), e.poly.empty() ? "-" : e.poly, e.value.to_string(), e.floor.get_str()});
  t.print(out);
  const auto& b = rep.best();
  out << "best: " << b.floor.get_str() << " (" << formula_name(b.formula) << (b.poly.empty() ? "" : ", " + b.poly) << ")\n";
  return 0;
}

// ---- polynomial ----

struct PolyArgs {
  std::string q;
  int r = 0;
  std::string lambda;
  int grid = 10000;
  bool rigorous = false;
};

int cmd_polynomial(const Globals& gl, const PolyArgs& a, std::ostream& out) {
  Integer q = parse_q(a.q);
  if ((a.r != 0) == !a.lambda.empty()) throw UsageError("give exactly one of --r and --lambda");
  if (a.grid < 2) throw UsageError("--grid must be at least 2");
  TrigPolynomial f = a.r != 0 ? preset(a.r) : construct_polynomial(q, parse_lambda(a.lambda), gl.prec());
  CertifiedReal minus = psi_eval(f, sqrt_q_power(q, -1));
  CertifiedReal plus = psi_eval(f, sqrt_q_power(q, 1));
  PositivityReport pos = check_doubly_positive(f, a.grid, Rat(1, 1000000000000), a.rigorous, gl.prec());

  auto coeff_text = [&](int n) {
    const auto& ex = f.exact_coeffs();
    if (ex) return (*ex)[static_cast<std::size_t>(n - 1)].to_string() + " = " + f.c(n).to_string();
    return f.c(n).to_string();
  };
  if (gl.json) {
    json coeffs = json::array();
    for (int n = 1; n < f.r(); ++n) {
      json c = real_json(f.c(n));
      if (f.exact_coeffs()) c["exact"] = (*f.exact_coeffs())[static_cast<std::size_t>(n - 1)].to_string();
      coeffs.push_back(c);
    }
    json positivity{{"pass", pos.pass()},
                    {"coefficients_ok", pos.coefficients_ok},
                    {"endpoints_ok", pos.endpoints_ok},
                    {"grid_ok", pos.grid_ok},
                    {"grid_min", pos.grid_min},
                    {"failure", pos.failure}};
    if (pos.rigorous_ok) positivity["rigorous_ok"] = *pos.rigorous_ok;
    json result{{"label", f.label()}, {"r", f.r()}, {"c", coeffs}, {"psi_minus", real_json(minus)},
                {"psi_plus", real_json(plus)}, {"positivity", positivity}};
    emit(out, "polynomial",
         {{"q", q.get_str()}, {"r", a.r}, {"lambda", a.lambda}, {"grid", a.grid}, {"rigorous", a.rigorous}}, result, {});
    return 0;
  }
  out << f.label() << ", r = " << f.r() << "\n";
  Table t;
  for (int n = 1; n < f.r(); ++n) t.add({"c_" + std::to_string(n), coeff_text(n)});
  t.add({"psi(q^-1/2)", real_text(minus)});
  t.add({"psi(q^1/2)", real_text(plus)});
  t.print(out);
  out << "doubly positive: " << (pos.pass() ? "yes" : "no") << " (grid min " << std::setprecision(6) << pos.grid_min
      << (pos.rigorous_ok ? std::string(", rigorous ") + (*pos.rigorous_ok ? "ok" : "failed") : std::string()) << ")";
  if (!pos.failure.empty()) out << ": " << pos.failure;
  out << "\n";
  return 0;
}

// ---- curve-count ----

struct CountArgs {
  std::string q, model, coeffs, line;
  int ext = 1;
  int degree_points = 0;
};

int cmd_curve_count(const Globals& gl, const CountArgs& a, std::ostream& out) {
  std::string line = a.line;
  if (line.empty()) {
    if (a.q.empty() || a.model.empty() || a.coeffs.empty()) throw UsageError("give --line, or --q, --model and --coeffs");
    line = a.model + "; " + a.q + "; " + a.coeffs;
  }
  if (a.ext < 1) throw UsageError("--ext must be at least 1");
  if (a.degree_points < 0) throw UsageError("--degree-points must be nonnegative");
  CurveModel model;
  try {
    model = parse_curve_model(line);
  } catch (const Error& e) {
    if (e.code() == Errc::kParseError || e.code() == Errc::kNotPrimePower) throw UsageError(e.what());
    throw;
  }
  int n_max = std::max(a.ext, a.degree_points);
  CurveCounts counts = count_sequence(model, n_max);
  std::vector<Integer> B;
  for (int d = 1; d <= a.degree_points; ++d) B.push_back(degree_d_points(counts, d));

  if (gl.json) {
    json result{{"kind", kind_name(model.kind)},
                {"q", model.q.get_str()},
                {"counts", integer_strings(counts.counts)},
                {"degree_points", integer_strings(B)}};
    emit(out, "curve-count", {{"line", line}, {"ext", a.ext}, {"degree_points", a.degree_points}}, result, {});
    return 0;
  }
  out << kind_name(model.kind) << " curve over F_" << model.q.get_str() << "\n";
  Table t;
  t.add({"n", "#X(F_q^n)"});
  for (int n = 1; n <= n_max; ++n) t.add({std::to_string(n), counts.counts[static_cast<std::size_t>(n - 1)].get_str()});
  t.print(out);
  if (!B.empty()) {
    Table tb;
    tb.add({"d", "B_d"});
    for (int d = 1; d <= a.degree_points; ++d) tb.add({std::to_string(d), B[static_cast<std::size_t>(d - 1)].get_str()});
    tb.print(out);
  }
  return 0;
}

// ---- weil-roots ----

struct WeilArgs {
  std::string q, counts;
  int g = -1;
  bool lpoly = false;
};

int cmd_weil_roots(const Globals& gl, const WeilArgs& a, std::ostream& out) {
  Integer q = parse_q(a.q);
  std::vector<Integer> counts;
  for (long c : parse_long_list(a.counts, "--counts")) counts.emplace_back(c);
  int g = a.g >= 0 ? a.g : static_cast<int>(counts.size());
  if (g > 5) throw UsageError("genus at most 5 is supported");
  auto p = power_sums_from_counts(q, g, counts);
  std::vector<Rat> pr(p.begin(), p.end());
  auto e = newton_to_elementary(pr);
  WeilTuple x = solve_weil_tuple(e, q, gl.prec());
  RatPoly cp = x.char_poly();

  std::vector<std::string> e_str;
  for (const auto& v : e) e_str.push_back(v.get_str());
  if (gl.json) {
    json roots = json::array();
    for (const auto& entry : x.entries()) {
      json r = real_json(entry.value);
      if (entry.exact) r["exact"] = entry.exact->to_string();
      if (entry.minpoly) r["minpoly"] = entry.minpoly->to_string();
      roots.push_back(r);
    }
    json result{{"power_sums", integer_strings(p)}, {"elementary", e_str}, {"char_poly", cp.to_string()}, {"roots", roots}};
    if (a.lpoly) {
      LPolynomial L = l_polynomial(x);
      result["l_polynomial"] = {{"coefficients", integer_strings(L.a)},
                                {"text", L.to_string()},
                                {"functional_equation", L.functional_equation_holds()}};
    }
    emit(out, "weil-roots", {{"q", q.get_str()}, {"counts", a.counts}, {"g", g}, {"lpoly", a.lpoly}}, result, {});
    return 0;
  }
  Table t;
  t.add({"power sums", join(integer_strings(p), ", ")});
  t.add({"elementary", join(e_str, ", ")});
  t.add({"prod (x - x_j)", cp.to_string()});
  t.print(out);
  Table tr;
  tr.add({"j", "x_j", "exact"});
  for (std::size_t j = 0; j < x.entries().size(); ++j) {
    const auto& entry = x.entries()[j];
    std::string exact = entry.exact ? entry.exact->to_string() : "root of " + entry.minpoly->to_string();
    tr.add({std::to_string(j + 1), entry.value.to_string(), exact});
  }
  tr.print(out);
  if (a.lpoly) {
    LPolynomial L = l_polynomial(x);
    out << "L(T) = " << L.to_string() << (L.functional_equation_holds() ? "" : "  (functional equation fails)") << "\n";
  }
  return 0;
}

// ---- genus2 ----

struct Genus2Args {
  std::string q;
  long sweep = 0;
};

json pair_json(const DefectPair& p) { return {{"pair", p.to_string()}, {"defect", p.defect}}; }

int cmd_genus2(const Globals& gl, const Genus2Args& a, std::ostream& out) {
  if (a.q.empty() && a.sweep <= 0) throw UsageError("give --q or --sweep");
  json result = json::object();
  if (!a.q.empty()) {
    Integer q = parse_q(a.q);
    PiRange r = pi_range(q);
    auto pairs = analyze_pairs(q);
    if (gl.json) {
      json jp = json::array();
      for (const auto& pa : pairs) {
        json j = pair_json(pa.pair);
        j["admissible"] = pa.admissible;
        j["excluded"] = pa.excluded;
        j["b2"] = pa.b2 ? json(pa.b2->get_str()) : json(nullptr);
        j["note"] = pa.note;
        jp.push_back(j);
      }
      json cls{{"kind", kind_name(r.cls.kind)}, {"m", r.cls.m.get_str()}, {"p", r.cls.p}};
      cls["special_reason"] = r.cls.special_reason ? json(reason_name(*r.cls.special_reason)) : json(nullptr);
      result["q"] = {{"class", cls},
                     {"n_q_2", r.n_q_2.get_str()},
                     {"defect", r.defect},
                     {"pairs", jp},
                     {"witness", pair_json(r.witness)},
                     {"b2_max", r.b2_max.get_str()},
                     {"pi_max", r.pi_max.get_str()}};
    } else {
      out << "q = " << q.get_str() << ", m = " << r.cls.m.get_str() << ": " << kind_name(r.cls.kind);
      if (r.cls.special_reason) out << " (" << reason_name(*r.cls.special_reason) << ")";
      out << "\nN_q(2) = " << r.n_q_2.get_str() << ", defect " << r.defect << "\n";
      Table t;
      t.add({"pair", "admissible", "B_2", "note"});
      for (const auto& pa : pairs) {
        t.add({pa.pair.to_string(), pa.admissible && !pa.excluded ? "yes" : "no", pa.b2 ? pa.b2->get_str() : "-", pa.note});
      }
      t.print(out);
      out << "witness " << r.witness.to_string() << " with B_2 = " << r.b2_max.get_str() << "\n";
      out << "N_q(2, pi) = N_q(2) + pi - 2 for 2 <= pi <= " << r.pi_max.get_str() << "\n";
    }
  }
  if (a.sweep > 0) {
    auto lines = genus2_sweep(a.sweep);
    long bad = 0;
    std::vector<std::string> failures;
    for (const auto& l : lines) {
      if (!l.ok()) {
        ++bad;
        failures.push_back(l.q.get_str());
      }
    }
    if (gl.json) {
      result["sweep"] = {{"max_q", a.sweep}, {"checked", lines.size()}, {"failures", failures}};
    } else {
      out << "sweep q <= " << a.sweep << ": " << lines.size() << " prime powers, " << bad << " disagreements with the closed forms";
      if (bad) out << " (" << join(failures, ", ") << ")";
      out << "\n";
    }
  }
  if (gl.json) emit(out, "genus2", {{"q", a.q}, {"sweep", a.sweep}}, result, {});
  return 0;
}

// ---- nq-table and verify-paper ----

struct TableArgs {
  std::string q, pi_range, data;
  long g = -1;
  bool csv = false;
};

KnownTable load_table(const std::string& override_path) {
  return load_known(override_path.empty() ? default_data_path() : override_path);
}

json certificate_json(const Certificate& c) {
  json lower = c.lower ? json{{"value", c.lower->value.get_str()}, {"source", c.lower->source}} : json(nullptr);
  return {{"q", c.q.get_str()},
          {"g", c.g},
          {"pi", c.pi},
          {"lower", lower},
          {"upper", {{"value", c.upper.value.get_str()}, {"formula", formula_name(c.upper.formula)}, {"poly", c.upper.poly}}},
          {"status", c.status()}};
}

int cmd_nq_table(const Globals& gl, const TableArgs& a, std::ostream& out) {
  Integer q = parse_q(a.q);
  if (a.g < 0) throw UsageError("--g must be nonnegative");
  auto [lo, hi] = parse_range(a.pi_range);
  if (lo < a.g) throw UsageError("--pi-range must start at or above g");
  if (gl.json && a.csv) throw UsageError("--json and --csv are exclusive");
  KnownTable table = load_table(a.data);
  BoundOptions opts;
  opts.prec = gl.prec();
  std::vector<Certificate> certs;
  for (long pi = lo; pi <= hi; ++pi) certs.push_back(certify(q, a.g, pi, table, default_polynomials(), opts));

  if (gl.json) {
    json result = json::array();
    for (const auto& c : certs) result.push_back(certificate_json(c));
    emit(out, "nq-table", {{"q", q.get_str()}, {"g", a.g}, {"pi_range", a.pi_range}}, result, {});
    return 0;
  }
  if (a.csv) {
    out << "q,g,pi,lower,upper,formula,poly,status\n";
    for (const auto& c : certs) {
      out << c.q.get_str() << "," << c.g << "," << c.pi << "," << (c.lower ? c.lower->value.get_str() : "") << ","
          << c.upper.value.get_str() << "," << formula_name(c.upper.formula) << "," << c.upper.poly << ",\"" << c.status()
          << "\"\n";
    }
    return 0;
  }
  Table t;
  t.add({"pi", "lower", "upper", "status", "upper from", "lower from"});
  for (const auto& c : certs) {
    t.add({std::to_string(c.pi), c.lower ? c.lower->value.get_str() : "-", c.upper.value.get_str(), c.status(),
           formula_name(c.upper.formula) + (c.upper.poly.empty() ? "" : " " + c.upper.poly),
           c.lower ? c.lower->source : "-"});
  }
  out << "N_" << q.get_str() << "(" << a.g << ", pi)\n";
  t.print(out);
  return 0;
}

int cmd_verify_paper(const Globals& gl, const std::string& data, std::ostream& out) {
  KnownTable table = load_table(data);
  BoundOptions opts;
  opts.prec = gl.prec();
  ReproReport rep = reproduce_paper(table, default_polynomials(), opts);
  if (gl.json) {
    json lines = json::array();
    for (const auto& l : rep.lines) lines.push_back({{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
    emit(out, "verify-paper", {{"data", data}}, {{"lines", lines}, {"failures", rep.failures()}}, {});
  } else {
    for (const auto& l : rep.lines) out << (l.pass ? "PASS  " : "FAIL  ") << l.label << "  [" << l.detail << "]\n";
    out << rep.lines.size() - static_cast<std::size_t>(rep.failures()) << "/" << rep.lines.size() << " lines reproduced\n";
  }
  return rep.failures() == 0 ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit-formula bounds for rational points on curves over finite fields", "pointbound"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Print a JSON envelope");
  app.add_option("--precision", gl.precision, "Refinement cap in bits for certified arithmetic")->check(CLI::Range(64, 1 << 20));

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Upper bounds for N_q(g, pi)");
  bound->add_option("--q", ba.q, "Field size")->required();
  bound->add_option("--g", ba.g, "Geometric genus")->required();
  bound->add_option("--pi", ba.pi, "Arithmetic genus")->required();
  bound->add_option("--poly", ba.poly, "Preset r in 2..5, or lambda=L for a constructed polynomial");
  bound->add_flag("--no-lt", ba.no_lt, "Leave out the LT formula");

  PolyArgs pa;
  auto* poly = app.add_subcommand("polynomial", "Doubly positive trigonometric polynomials");
  poly->add_option("--q", pa.q, "Field size")->required();
  poly->add_option("--r", pa.r, "Preset r in 2..5");
  poly->add_option("--lambda", pa.lambda, "Construct from lambda > q");
  poly->add_option("--grid", pa.grid, "Grid points for the positivity check");
  poly->add_flag("--rigorous", pa.rigorous, "Also certify positivity with Sturm sequences");

  CountArgs ca;
  auto* count = app.add_subcommand("curve-count", "Brute-force point counts");
  count->add_option("--q", ca.q, "Field size");
  count->add_option("--model", ca.model, "hyp, as or plane")->check(CLI::IsMember({"hyp", "as", "plane"}));
  count->add_option("--coeffs", ca.coeffs, "Coefficients in the model-line format");
  count->add_option("--line", ca.line, "Whole model line 'kind; q; coefficients'");
  count->add_option("--ext", ca.ext, "Count over F_q^n for n = 1..N");
  count->add_option("--degree-points", ca.degree_points, "Also print B_d for d = 1..D");

  WeilArgs wa;
  auto* weil = app.add_subcommand("weil-roots", "Real Weil numbers from point counts");
  weil->add_option("--q", wa.q, "Field size")->required();
  weil->add_option("--counts", wa.counts, "#X(F_q^n) for n = 1, 2, ...")->required();
  weil->add_option("--g", wa.g, "Genus (default: number of counts)");
  weil->add_flag("--lpoly", wa.lpoly, "Print the L-polynomial");

  Genus2Args g2a;
  auto* g2 = app.add_subcommand("genus2", "N_q(2, pi) = N_q(2) + pi - 2 ranges");
  g2->add_option("--q", g2a.q, "Field size");
  g2->add_option("--sweep", g2a.sweep, "Check the closed forms for every prime power up to MAX");

  TableArgs ta;
  auto* table = app.add_subcommand("nq-table", "Certify N_q(g, pi) over a range of pi");
  table->add_option("--q", ta.q, "Field size")->required();
  table->add_option("--g", ta.g, "Geometric genus")->required();
  table->add_option("--pi-range", ta.pi_range, "A:B")->required();
  table->add_flag("--csv", ta.csv, "Print CSV");
  table->add_option("--data", ta.data, "Known-values CSV (default: $POINTBOUND_DATA or the bundled file)");

  std::string verify_data;
  auto* verify = app.add_subcommand("verify-paper", "Reproduce the published values");
  verify->add_option("--data", verify_data, "Known-values CSV (default: $POINTBOUND_DATA or the bundled file)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == bound) return cmd_bound(gl, ba, out);
    if (sub == poly) return cmd_polynomial(gl, pa, out);
    if (sub == count) return cmd_curve_count(gl, ca, out);
    if (sub == weil) return cmd_weil_roots(gl, wa, out);
    if (sub == g2) return cmd_genus2(gl, g2a, out);
    if (sub == table) return cmd_nq_table(gl, ta, out);
    if (sub == verify) return cmd_verify_paper(gl, verify_data, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << sub->help();
    return 2;
  } catch (const Error& e) {
    err << "error [" << e.module() << "/" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace pointbound
