#include "pointbound/genus2.hpp"

#include "pointbound/error.hpp"

namespace pointbound {

namespace {

Error g2_error(Errc code, const std::string& message) { return Error(code, "genus2", message); }

// q = x^2 + x + c with integer x >= 0 iff 4q - (4c - 1) is an odd square.
bool represented_xx(const Integer& q, int c) {
  Integer d = 4 * q - (4 * c - 1);
  return d >= 1 && is_square(d);
}

QuadNum golden_half(int sign) { return QuadNum(Rat(-1, 2), Rat(sign, 2), 5); }

QuadNum shifted(const Rat& a, int b, std::int64_t d) { return QuadNum(a, Rat(b, 2), d); }

}  // namespace

std::string kind_name(QClass::Kind kind) {
  switch (kind) {
    case QClass::Kind::kSquare:
      return "square";
    case QClass::Kind::kNonSpecial:
      return "non_special";
    case QClass::Kind::kSpecialGoldenAbove:
      return "special_golden_above";
    case QClass::Kind::kSpecialGoldenBelow:
      return "special_golden_below";
  }
  return "?";
}

std::string reason_name(QClass::Reason reason) {
  switch (reason) {
    case QClass::Reason::kPDividesM:
      return "p divides m";
    case QClass::Reason::kXSquaredPlus1:
      return "q = x^2 + 1";
    case QClass::Reason::kXSquaredPlusXPlus1:
      return "q = x^2 + x + 1";
    case QClass::Reason::kXSquaredPlusXPlus2:
      return "q = x^2 + x + 2";
  }
  return "?";
}

QClass classify_q(const Integer& q) {
  auto pp = prime_power(q);
  if (!pp) throw g2_error(Errc::kNotPrimePower, "q = " + q.get_str() + " is not a prime power");
  QClass c;
  c.q = q;
  c.p = pp->p;
  c.m = isqrt(4 * q);
  if (is_square(q)) {
    c.kind = QClass::Kind::kSquare;
    return c;
  }
  if (c.m % c.p == 0) {
    c.special_reason = QClass::Reason::kPDividesM;
  } else if (is_square(q - 1)) {
    c.special_reason = QClass::Reason::kXSquaredPlus1;
  } else if (represented_xx(q, 1)) {
    c.special_reason = QClass::Reason::kXSquaredPlusXPlus1;
  } else if (represented_xx(q, 2)) {
    c.special_reason = QClass::Reason::kXSquaredPlusXPlus2;
  }
  if (!c.special_reason) {
    c.kind = QClass::Kind::kNonSpecial;
    return c;
  }
  // {2 sqrt q} = 2 sqrt q - m against (sqrt 5 - 1)/2; never equal.
  Surd frac = Surd::term(2, q.get_si()) - Surd(Rat(c.m));
  Surd golden = Surd::term(Rat(1, 2), 5) - Surd(Rat(1, 2));
  c.kind = compare(frac, golden) > 0 ? QClass::Kind::kSpecialGoldenAbove : QClass::Kind::kSpecialGoldenBelow;
  return c;
}

Integer nq2(const Integer& q) {
  QClass c = classify_q(q);
  switch (c.kind) {
    case QClass::Kind::kSquare:
      if (q == 4) return 10;
      if (q == 9) return 20;
      return q + 1 + 4 * isqrt(q);
    case QClass::Kind::kNonSpecial:
      return q + 1 + 2 * c.m;
    case QClass::Kind::kSpecialGoldenAbove:
      return q + 2 * c.m;
    case QClass::Kind::kSpecialGoldenBelow:
      return q - 1 + 2 * c.m;
  }
  return 0;
}

int defect_of_optimal(const Integer& q) {
  Integer m = isqrt(4 * q);
  Integer d = q + 1 + 2 * m - nq2(q);
  return static_cast<int>(d.get_si());
}

QuadNum DefectPair::x1(const Integer& m) const { return QuadNum(sign) * (QuadNum(Rat(m)) + offset1); }
QuadNum DefectPair::x2(const Integer& m) const { return QuadNum(sign) * (QuadNum(Rat(m)) + offset2); }

std::string DefectPair::to_string() const {
  auto entry = [](const QuadNum& off) {
    if (off == QuadNum(0)) return std::string("m");
    std::string s = off.to_string();
    if (s[0] == '-') return "m - " + s.substr(1);
    return "m + " + s;
  };
  return std::string(sign < 0 ? "-" : "+") + "(" + entry(offset1) + ", " + entry(offset2) + ")";
}

std::vector<DefectPair> smyth_pairs(int defect) {
  std::vector<std::pair<QuadNum, QuadNum>> offsets;
  switch (defect) {
    case 0:
      offsets = {{0, 0}};
      break;
    case 1:
      offsets = {{0, -1}, {golden_half(1), golden_half(-1)}};
      break;
    case 2:
      offsets = {{0, -2}, {-1, -1}, {QuadNum(-1, 1, 2), QuadNum(-1, -1, 2)}, {QuadNum(-1, 1, 3), QuadNum(-1, -1, 3)}};
      break;
    case 3:
      offsets = {{0, -3}, {-1, -2}};
      for (std::int64_t d : {21, 17, 13, 5}) offsets.emplace_back(shifted(Rat(-3, 2), 1, d), shifted(Rat(-3, 2), -1, d));
      break;
    default:
      throw g2_error(Errc::kOutOfTable, "defect " + std::to_string(defect) + " is outside the table (0..3)");
  }
  std::vector<DefectPair> out;
  for (int sign : {1, -1}) {
    for (const auto& [a, b] : offsets) out.push_back({defect, a, b, sign});
  }
  return out;
}

bool weil_admissible(const DefectPair& pair, const Integer& q) {
  Integer m = isqrt(4 * q);
  QuadNum bound(Rat(4 * q));
  for (const QuadNum& x : {pair.x1(m), pair.x2(m)}) {
    if (compare(x * x, bound) > 0) return false;
  }
  return true;
}

bool jacobian_excluded(const DefectPair& pair) {
  if (!pair.offset1.is_rational() || !pair.offset2.is_rational()) return false;
  Rat diff = pair.offset1.a() - pair.offset2.a();
  return diff == 1 || diff == -1;
}

Integer b2_from_pair(const Integer& q, const DefectPair& pair) {
  Integer m = isqrt(4 * q);
  QuadNum x1 = pair.x1(m), x2 = pair.x2(m);
  QuadNum s1 = x1 + x2;
  QuadNum s2 = x1 * x1 + x2 * x2;
  if (!s1.is_rational() || !s2.is_rational()) throw g2_error(Errc::kNonIntegral, "pair is not Galois-stable");
  Rat n1 = Rat(q + 1) - s1.a();
  Rat n2 = Rat(q * q + 4 * q + 1) - s2.a();
  Rat b2 = (n2 - n1) / 2;
  if (b2.get_den() != 1) throw g2_error(Errc::kNonIntegral, "B_2 = " + b2.get_str() + " is not an integer");
  if (sgn(b2) < 0) {
    throw g2_error(Errc::kNegativeB2, "B_2 = " + b2.get_str() + " for " + pair.to_string() + " over F_" + q.get_str());
  }
  return b2.get_num();
}

std::vector<PairAnalysis> analyze_pairs(const Integer& q) {
  int defect = defect_of_optimal(q);
  std::vector<PairAnalysis> out;
  // Only the minus sign gives #X(F_q) = q + 1 + 2m - defect.
  for (const auto& pair : smyth_pairs(defect)) {
    if (pair.sign > 0) continue;
    PairAnalysis a{pair, weil_admissible(pair, q), jacobian_excluded(pair), std::nullopt, ""};
    if (!a.admissible) {
      a.note = "|x_i| > 2 sqrt q";
    } else if (a.excluded) {
      a.note = "x1 - x2 = +-1 is a unit (Jacobian indecomposability)";
    }
    try {
      a.b2 = b2_from_pair(q, pair);
    } catch (const Error& e) {
      if (a.note.empty()) a.note = e.what();
    }
    out.push_back(std::move(a));
  }
  return out;
}

PiRange pi_range(const Integer& q) {
  QClass c = classify_q(q);
  int defect = defect_of_optimal(q);
  auto pick = [&](const QuadNum& o1, const QuadNum& o2) {
    for (const auto& pair : smyth_pairs(defect)) {
      if (pair.sign < 0 && pair.offset1 == o1 && pair.offset2 == o2) return pair;
    }
    throw g2_error(Errc::kOutOfTable, "designated pair missing from the defect table");
  };
  DefectPair w;
  switch (c.kind) {
    case QClass::Kind::kSquare:
      if (q == 4) {
        w = pick(shifted(Rat(-3, 2), 1, 5), shifted(Rat(-3, 2), -1, 5));
      } else if (q == 9) {
        w = pick(-1, -1);
      } else {
        w = pick(0, 0);
      }
      break;
    case QClass::Kind::kNonSpecial:
      w = pick(0, 0);
      break;
    case QClass::Kind::kSpecialGoldenAbove:
      w = pick(golden_half(1), golden_half(-1));
      break;
    case QClass::Kind::kSpecialGoldenBelow:
      w = (q == 32 || q == 8192) ? pick(0, -2) : pick(-1, -1);
      break;
  }
  Integer b2 = b2_from_pair(q, w);
  return {c, nq2(q), defect, b2, b2 + 2, w};
}

Integer closed_form_pi_max(const QClass& c) {
  const Integer& q = c.q;
  const Integer& m = c.m;
  Integer half = q * (q + 3) / 2;
  switch (c.kind) {
    case QClass::Kind::kSquare:
      if (q == 4) return 6;
      if (q == 9) return 26;
      return 2 + (q * q - 5 * q - 4 * isqrt(q)) / 2;
    case QClass::Kind::kNonSpecial:
      return 2 + half - m * (m + 1);
    case QClass::Kind::kSpecialGoldenAbove:
      return 2 + half - m * m - 1;
    case QClass::Kind::kSpecialGoldenBelow: {
      Integer v = 2 + half - m * (m - 1);
      if (q == 32 || q == 8192) v -= 1;
      return v;
    }
  }
  return 0;
}

std::vector<SweepLine> genus2_sweep(long max_q) {
  std::vector<SweepLine> out;
  for (long v = 2; v <= max_q; ++v) {
    Integer q(v);
    if (!prime_power(q)) continue;
    PiRange r = pi_range(q);
    Integer m = r.cls.m;
    QuadNum sum = r.witness.x1(m) + r.witness.x2(m);
    bool consistent = r.witness.defect == r.defect && sum.is_rational() && Rat(q + 1) - sum.a() == Rat(r.n_q_2) &&
                      weil_admissible(r.witness, q) && !jacobian_excluded(r.witness);
    out.push_back({q, r.pi_max, closed_form_pi_max(r.cls), consistent});
  }
  return out;
}

}  // namespace pointbound
