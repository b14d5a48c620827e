// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero on any
// failure other than the ones listed in kKnownUnattainable.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pointbound/bounds.hpp"
#include "pointbound/cli.hpp"
#include "pointbound/fforacle.hpp"
#include "pointbound/genus2.hpp"
#include "pointbound/trigpoly.hpp"
#include "pointbound/weilroots.hpp"

using namespace pointbound;

namespace {

// Criterion 6 also claims psi(q^{-1/2}) > 1/2 never holds for the presets,
// but preset(3) at q = 2 gives 5/8 (and presets 4, 5 exceed 1/2 for small q).
const std::set<int> kKnownUnattainable{6};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

bool encloses(const CertifiedReal& x, const QuadNum& v) {
  CertifiedReal r = x.refined(pow2(-60));
  CertifiedReal ev(v);
  return compare(CertifiedReal(r.lo()), ev) != std::strong_ordering::greater &&
         compare(CertifiedReal(r.hi()), ev) != std::strong_ordering::less;
}

std::string exact_or_decimal(const CertifiedReal& x) { return x.exact() ? x.exact()->to_string() : x.to_string(); }

bool contains_zero(const CertifiedReal& r) {
  if (r.exact()) return r.exact()->is_zero();
  return r.refined(pow2(-60)).enclosure().contains_zero();
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  int code = run_cli({"verify-paper", "--json"}, out, err);
  double secs = seconds_since(t0);
  auto j = nlohmann::json::parse(out.str());
  const std::vector<std::string> wanted{"N_2(0,2) = 4",    "N_2(1,2) = 5",    "N_2(4,5) = 8",   "N_2(5,6) = 9",
                                        "N_2(6,7) = 10",   "N_3(0,4) = 7",    "N_3(15,16) = 28", "N_3(15,17) = 28",
                                        "N_4(9,10) = 26", "N_4(26,27) = 55", "N_2(5,6) = 9"};
  int found = 0;
  for (const auto& w : wanted) {
    for (const auto& line : j["result"]["lines"]) {
      if (line["label"] != w) continue;
      ++found;
      o.expect(line["pass"] == true, w + ": " + line["detail"].get<std::string>());
    }
  }
  o.expect(found == static_cast<int>(wanted.size()), "missing lines");
  o.expect(code == 0, "verify-paper exit code " + std::to_string(code));
  o.expect(secs < 5, "took " + fmt_seconds(secs));
  if (o.pass) o.detail = "11 values exact (10 distinct), verify-paper in " + fmt_seconds(secs);
  return o;
}

Outcome criterion2() {
  Outcome o;
  BoundOptions opts;
  for (auto [pi, v] : std::vector<std::pair<long, long>>{{4, 7}, {5, 8}, {6, 8}, {7, 8}}) {
    auto rep = best_bound({2, 3, pi}, {preset(5)}, opts);
    o.expect(rep.best().floor == v, "N_2(3," + std::to_string(pi) + ") <= " + rep.best().floor.get_str());
  }
  auto counts777 = std::vector<Integer>{7, 7, 7};
  auto p = power_sums_from_counts(2, 3, counts777);
  auto x = solve_weil_tuple(newton_to_elementary({Rat(p[0]), Rat(p[1]), Rat(p[2])}), 2);
  bool all_exact = true;
  for (const auto& e : x.entries()) all_exact = all_exact && e.exact.has_value();
  o.expect(all_exact, "(7,7,7) roots not exact");
  o.expect(x == WeilTuple::from_exact(2, {QuadNum(-2), QuadNum(-1, 1, 2), QuadNum(-1, -1, 2)}), "(7,7,7) roots " + x.to_string());

  auto q = power_sums_from_counts(2, 3, {7, 7, 10});
  auto y = solve_weil_tuple(newton_to_elementary({Rat(q[0]), Rat(q[1]), Rat(q[2])}), 2);
  auto L = l_polynomial(y);
  o.expect(L.a == std::vector<Integer>{1, 4, 9, 15, 18, 16, 8}, "L = " + L.to_string());
  if (o.pass) o.detail = "bounds 7, 8, 8, 8; roots " + x.to_string() + "; L(T) = " + L.to_string();
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  o.expect(pi_range(4).pi_max == 6, "pi_max(4)");
  o.expect(pi_range(9).pi_max == 26, "pi_max(9)");
  auto lines = genus2_sweep(10000);
  int bad = 0;
  for (const auto& l : lines) bad += !l.ok();
  double secs = seconds_since(t0);
  o.expect(bad == 0, std::to_string(bad) + " disagreements");
  o.expect(secs < 30, "took " + fmt_seconds(secs));
  if (o.pass) o.detail = std::to_string(lines.size()) + " prime powers q <= 10^4 agree, " + fmt_seconds(secs);
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    std::string line;
    long n1, b2;
  };
  for (const auto& c : std::vector<Case>{{"as; 4; 0,1 | 1,1,0,1", 10, 4},
                                         {"hyp; 9; -1,0,1,0,1,0,1", 20, 24},
                                         {"hyp; 3; 1,0,1,0,1,0,1", 8, 3}}) {
    auto counts = count_sequence(parse_curve_model(c.line), 2);
    o.expect(counts.counts[0] == c.n1 && degree_d_points(counts, 2) == c.b2,
             c.line + " gives " + counts.counts[0].get_str() + ", B_2 = " + degree_d_points(counts, 2).get_str());
  }
  auto dickson = count_sequence(parse_curve_model("plane; 2; 1@3.1.0, 1@2.2.0, 1@1.0.3, 1@2.0.2, 1@0.3.1, 1@0.1.3"), 3);
  o.expect(dickson.counts == std::vector<Integer>{7, 7, 10}, "Dickson quartic counts");
  double secs = seconds_since(t0);
  o.expect(secs < 10, "took " + fmt_seconds(secs));
  if (o.pass) o.detail = "all counts match, " + fmt_seconds(secs);
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int r = 2; r <= 5; ++r) {
    CertifiedReal phi0 = solve_phi0(r, CertifiedReal(0));
    TrigPolynomial built = oesterle_coeffs(r, phi0);
    TrigPolynomial p = preset(r);
    for (int n = 1; n < r; ++n) {
      o.expect(encloses(built.c(n), (*p.exact_coeffs())[static_cast<std::size_t>(n - 1)]),
               "r = " + std::to_string(r) + ", c_" + std::to_string(n));
    }
    auto rep = check_doubly_positive(p, 10000, Rat(1, 1000000000000));
    o.expect(rep.pass(), "preset(" + std::to_string(r) + ") positivity: " + rep.failure);
  }
  if (o.pass) o.detail = "presets 2..5 reproduced and doubly positive";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::string> half_hits;
  for (int r : {3, 4, 5}) {
    TrigPolynomial f = preset(r);
    for (long v = 2; v <= 200; ++v) {
      Integer q(v);
      if (!prime_power(q)) continue;
      CertifiedReal psi = psi_eval(f, sqrt_q_power(q, -1));
      CertifiedReal threshold = CertifiedReal(1) / (sqrt_q_power(q, 1) + CertifiedReal(1));
      bool holds = compare(psi, threshold) == std::strong_ordering::greater;
      bool expected = r == 3 ? v < 13 : r == 4 ? v <= 49 : v < 131;
      o.expect(holds == expected, "r = " + std::to_string(r) + ", q = " + std::to_string(v));
    }
  }
  bool threshold_ok = o.pass;
  for (int r = 2; r <= 5; ++r) {
    TrigPolynomial f = preset(r);
    for (long v = 2; v <= 200; ++v) {
      Integer q(v);
      if (!prime_power(q)) continue;
      CertifiedReal psi = psi_eval(f, sqrt_q_power(q, -1));
      if (compare(psi, CertifiedReal(Rat(1, 2))) == std::strong_ordering::greater) {
        half_hits.push_back("preset(" + std::to_string(r) + ") at q = " + std::to_string(v) + ": " + exact_or_decimal(psi));
      }
    }
  }
  std::string head = threshold_ok ? "threshold claims hold" : "threshold claims fail";
  if (!half_hits.empty()) {
    std::string list;
    for (std::size_t i = 0; i < half_hits.size(); ++i) list += (i ? ", " : "") + half_hits[i];
    o.fail("psi(q^-1/2) > 1/2 holds for " + list);
  }
  o.detail = head + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::vector<long> qs;
  for (long v = 2; v <= 64; ++v) {
    if (prime_power(Integer(v))) qs.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> qsel(0, qs.size() - 1);
  std::uniform_int_distribution<int> rsel(2, 5), gsel(0, 20), dsel(0, 20);
  int dominance_fail = 0;
  for (int i = 0; i < 500; ++i) {
    TrigPolynomial f = preset(rsel(rng));
    Integer q(qs[qsel(rng)]);
    long g = gsel(rng), pi = g + dsel(rng);
    if (compare(singular_bound_lt(f, q, g, pi), singular_bound_ap(f, q, g, pi)) == std::strong_ordering::greater) {
      ++dominance_fail;
    }
  }
  o.expect(dominance_fail == 0, std::to_string(dominance_fail) + " LT > AP-explicit instances");

  const std::vector<std::string> curves{"as; 4; 0,1 | 1,1,0,1", "hyp; 9; -1,0,1,0,1,0,1", "hyp; 3; 1,0,1,0,1,0,1",
                                        "plane; 2; 1@3.1.0, 1@2.2.0, 1@1.0.3, 1@2.0.2, 1@0.3.1, 1@0.1.3",
                                        "as; 2; 0,1 | 1,1,0,1"};
  const std::vector<int> genera{2, 2, 2, 3, 2};
  int residuals = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    CurveCounts counts = count_sequence(parse_curve_model(curves[i]), 4);
    auto p = power_sums_from_counts(counts.q, genera[i], counts.counts);
    std::vector<Rat> pr(p.begin(), p.end());
    WeilTuple x = solve_weil_tuple(newton_to_elementary(pr), counts.q);
    std::vector<Integer> B;
    for (int d = 1; d <= 4; ++d) B.push_back(degree_d_points(counts, d));
    for (int r = 2; r <= 5; ++r) {
      ++residuals;
      o.expect(contains_zero(verify_serre_identity(preset(r), x, B)), curves[i] + " with preset(" + std::to_string(r) + ")");
    }
    o.expect(l_polynomial(x).functional_equation_holds(), curves[i] + " functional equation");
  }

  std::uniform_int_distribution<int> small_q(2, 9), genus(1, 5);
  int round_trips = 0;
  while (round_trips < 100) {
    Integer q(small_q(rng));
    if (!prime_power(q)) continue;
    int g = genus(rng);
    long m = isqrt(4 * q).get_si();
    std::uniform_int_distribution<long> xsel(-m, m);
    std::vector<QuadNum> xs;
    for (int j = 0; j < g; ++j) xs.emplace_back(xsel(rng));
    WeilTuple tuple = WeilTuple::from_exact(q, xs);
    std::vector<Integer> counts;
    for (int n = 1; n <= g; ++n) counts.push_back(counts_from_roots(tuple, n));
    auto p = power_sums_from_counts(q, g, counts);
    std::vector<Rat> pr(p.begin(), p.end());
    WeilTuple back = solve_weil_tuple(newton_to_elementary(pr), q);
    o.expect(back == tuple, "round trip " + tuple.to_string());
    o.expect(l_polynomial(back).functional_equation_holds(), "functional equation " + tuple.to_string());
    ++round_trips;
  }
  if (o.pass) {
    o.detail = "500 dominance instances, " + std::to_string(residuals) + " zero residuals, 100 round trips";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto g4 = WeilTuple::from_exact(2, {QuadNum(-1, 1, 3), QuadNum(-1, -1, 3), QuadNum(-1), QuadNum(-2)});
  auto g5 = WeilTuple::from_exact(2, {QuadNum(0), QuadNum(-1, 1, 3), QuadNum(-1, -1, 3), QuadNum(-2), QuadNum(-2)});
  Integer a = counts_from_roots(g4, 1), b = counts_from_roots(g5, 1);
  o.expect(a == 8, "g = 4 gives " + a.get_str());
  o.expect(b == 9, "g = 5 gives " + b.get_str());
  if (o.pass) o.detail = "8 and 9";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << o.detail << "\n";
    if (!o.pass && !kKnownUnattainable.count(id)) ++unexpected;
  }
  std::cout << (unexpected ? "unexpected failures: " + std::to_string(unexpected) : "no unexpected failures") << "\n";
  return unexpected ? 1 : 0;
}
