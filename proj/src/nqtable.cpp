#include "pointbound/nqtable.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pointbound/error.hpp"
#include "pointbound/genus2.hpp"

namespace pointbound {

namespace {

Error nq_error(Errc code, const std::string& message) { return Error(code, "nqtable", message); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& field, const std::string& where) {
  try {
    std::size_t used = 0;
    long v = std::stol(field, &used);
    if (used == field.size()) return v;
  } catch (const std::exception&) {
  }
  throw nq_error(Errc::kParseError, where + ": '" + field + "' is not an integer");
}

std::string key_string(const Integer& q, long g, long pi) {
  return "N_" + q.get_str() + "(" + std::to_string(g) + "," + std::to_string(pi) + ")";
}

}  // namespace

std::string default_data_path() {
  if (const char* env = std::getenv("POINTBOUND_DATA"); env && *env) return env;
  return POINTBOUND_DEFAULT_DATA;
}

KnownTable parse_known(const std::string& text, const std::string& origin) {
  KnownTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = origin + ":" + std::to_string(lineno);
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    // The source column is last and may itself contain commas.
    for (int i = 0; i < 5; ++i) {
      auto comma = line.find(',', start);
      if (comma == std::string::npos) throw nq_error(Errc::kParseError, where + ": expected 6 columns");
      fields.push_back(trim(line.substr(start, comma - start)));
      start = comma + 1;
    }
    fields.push_back(trim(line.substr(start)));
    if (fields[0] == "q") continue;

    KnownValue kv;
    long q = parse_long(fields[0], where);
    kv.q = q;
    kv.g = parse_long(fields[1], where);
    kv.pi = parse_long(fields[2], where);
    kv.value = parse_long(fields[3], where);
    if (fields[4] == "true" || fields[4] == "1") {
      kv.extends_pi = true;
    } else if (fields[4] != "false" && fields[4] != "0" && !fields[4].empty()) {
      throw nq_error(Errc::kParseError, where + ": extends_pi must be true or false");
    }
    kv.source = fields[5];
    if (!prime_power(kv.q)) throw nq_error(Errc::kParseError, where + ": q = " + fields[0] + " is not a prime power");
    if (kv.g < 0 || kv.pi < kv.g) throw nq_error(Errc::kParseError, where + ": need 0 <= g <= pi");
    Integer ap = certified_floor(weil_ap_bound(kv.q, kv.g, kv.pi));
    if (kv.value > ap) {
      throw nq_error(Errc::kWeilViolation, where + ": " + key_string(kv.q, kv.g, kv.pi) + " = " + kv.value.get_str() +
                                               " exceeds the Aubry-Perret bound " + ap.get_str());
    }
    KnownKey key{kv.q, kv.g, kv.pi};
    if (table.count(key)) throw nq_error(Errc::kDuplicateKey, where + ": duplicate row for " + key_string(kv.q, kv.g, kv.pi));
    table.emplace(key, std::move(kv));
  }
  return table;
}

KnownTable load_known(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nq_error(Errc::kParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_known(buf.str(), path);
}

LowerBound lower_bound(const Integer& q, long g, long pi, const KnownTable& table) {
  std::optional<LowerBound> best;
  for (const auto& [key, kv] : table) {
    if (kv.q != q || kv.g != g || kv.pi > pi) continue;
    // N_q(g) <= N_q(g, pi) always; other rows only where they say so.
    bool applies = kv.pi == pi || kv.pi == kv.g || kv.extends_pi;
    if (!applies) continue;
    if (!best || kv.value > best->value) {
      best = LowerBound{kv.value, key_string(kv.q, kv.g, kv.pi) + " = " + kv.value.get_str() + " (" + kv.source + ")"};
    }
  }
  if (!best) throw nq_error(Errc::kNoData, "no known value bounds " + key_string(q, g, pi) + " from below");
  return *best;
}

UpperBound upper_bound(const Integer& q, long g, long pi, const std::vector<TrigPolynomial>& polys,
                       const BoundOptions& options) {
  BoundReport rep = best_bound({q, g, pi}, polys, options);
  const auto& b = rep.best();
  return {b.floor, b.formula, b.poly};
}

std::string Certificate::status() const {
  if (exact()) return "exact";
  return "gap(" + (lower ? lower->value.get_str() : std::string("-")) + ", " + upper.value.get_str() + ")";
}

Certificate certify(const Integer& q, long g, long pi, const KnownTable& table,
                    const std::vector<TrigPolynomial>& polys, const BoundOptions& options) {
  Certificate c{q, g, pi, std::nullopt, pointbound::upper_bound(q, g, pi, polys, options)};
  try {
    c.lower = pointbound::lower_bound(q, g, pi, table);
  } catch (const Error& e) {
    if (e.code() != Errc::kNoData) throw;
  }
  if (c.lower && c.lower->value > c.upper.value) {
    throw nq_error(Errc::kInvalidArgument, key_string(q, g, pi) + ": lower bound " + c.lower->value.get_str() +
                                               " exceeds upper bound " + c.upper.value.get_str());
  }
  return c;
}

int ReproReport::failures() const {
  int n = 0;
  for (const auto& l : lines) n += !l.pass;
  return n;
}

const std::vector<PublishedValue>& published_values() {
  static const std::vector<PublishedValue> values{
      {2, 0, 2, 4},  {2, 1, 2, 5},    {2, 4, 5, 8},    {2, 5, 6, 9},   {2, 6, 7, 10},
      {3, 0, 4, 7},  {3, 15, 16, 28}, {3, 15, 17, 28}, {4, 9, 10, 26}, {4, 26, 27, 55},
      {2, 3, 4, 7},  {2, 3, 5, 8},    {2, 3, 6, 8},    {2, 3, 7, 8},
  };
  return values;
}

const std::vector<long>& published_sweep_qs() {
  static const std::vector<long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 32};
  return qs;
}

ReproReport reproduce_paper(const KnownTable& table, const std::vector<TrigPolynomial>& polys,
                            const BoundOptions& options) {
  ReproReport report;
  for (const auto& v : published_values()) {
    ReproLine line{key_string(v.q, v.g, v.pi) + " = " + std::to_string(v.value), false, ""};
    try {
      Certificate c = certify(v.q, v.g, v.pi, table, polys, options);
      line.pass = c.exact() && c.upper.value == v.value;
      line.detail = c.status() + ", upper " + formula_name(c.upper.formula) + (c.upper.poly.empty() ? "" : " " + c.upper.poly);
    } catch (const Error& e) {
      line.detail = e.module() + ": " + e.what();
    }
    report.lines.push_back(std::move(line));
  }
  for (long q : published_sweep_qs()) {
    ReproLine line{"pi range of N_" + std::to_string(q) + "(2, pi) = N_" + std::to_string(q) + "(2) + pi - 2", false, ""};
    try {
      PiRange r = pi_range(q);
      Integer closed = closed_form_pi_max(r.cls);
      line.pass = r.pi_max == closed;
      line.detail = "2 <= pi <= " + r.pi_max.get_str() + " (closed form " + closed.get_str() + "), N_" + std::to_string(q) +
                    "(2) = " + r.n_q_2.get_str() + ", witness " + r.witness.to_string();
    } catch (const Error& e) {
      line.detail = e.module() + ": " + e.what();
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace pointbound
