#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "pointbound/fforacle.hpp"

namespace pointbound {

namespace {

using Elem = FiniteField::Elem;

Error ff_error(Errc code, const std::string& message) { return Error(code, "fforacle", message); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Arithmetic in F_p[t]/(m) on coefficient vectors, used only to pick moduli.
using Vec = std::vector<long>;

Vec mulmod(const Vec& a, const Vec& b, const Vec& m, long p) {
  const std::size_t k = m.size() - 1;
  Vec prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t i = prod.size(); i-- > k;) {
    long c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) prod[i - k + j] = ((prod[i - k + j] - c * m[j]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

Vec powmod_t(std::uint64_t e, const Vec& m, long p) {
  const std::size_t k = m.size() - 1;
  Vec result(k, 0), base(k, 0);
  result[0] = 1;
  if (k == 1) {
    base[0] = (p - m[0]) % p;
  } else {
    base[1] = 1;
  }
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, m, p);
    e >>= 1U;
    if (e > 0) base = mulmod(base, base, m, p);
  }
  return result;
}

bool is_one(const Vec& v) {
  if (v[0] != 1) return false;
  return std::all_of(v.begin() + 1, v.end(), [](long c) { return c == 0; });
}

// t has order exactly p^k - 1, which also proves m irreducible.
bool is_primitive(const Vec& m, long p) {
  const std::size_t k = m.size() - 1;
  const std::uint64_t order = ipow(static_cast<std::uint64_t>(p), static_cast<int>(k)) - 1;
  if (m[0] == 0) return false;
  if (!is_one(powmod_t(order, m, p))) return false;
  for (auto l : prime_divisors(order)) {
    if (is_one(powmod_t(order / l, m, p))) return false;
  }
  return true;
}

Vec canonical_modulus(long p, int k) {
  const std::uint64_t count = ipow(static_cast<std::uint64_t>(p), k);
  for (std::uint64_t code = 1; code < count; ++code) {
    Vec m(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      m[static_cast<std::size_t>(i)] = static_cast<long>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    m.back() = 1;
    if (is_primitive(m, p)) return m;
  }
  throw ff_error(Errc::kInvalidArgument, "no primitive polynomial found");
}

}  // namespace

std::shared_ptr<const FiniteField> FiniteField::get(long p, int k) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const FiniteField>> cache;
  if (k < 1) throw ff_error(Errc::kInvalidArgument, "extension degree must be positive");
  if (!prime_power(p) || prime_power(p)->e != 1) {
    throw ff_error(Errc::kNotPrimePower, std::to_string(p) + " is not prime");
  }
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > kMaxSize) {
      throw ff_error(Errc::kFieldTooLarge, "field of order " + std::to_string(p) + "^" + std::to_string(k) +
                                               " exceeds the enumeration cap 2^24");
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const FiniteField>(p, canonical_modulus(p, k));
  cache.emplace(std::make_pair(p, k), field);
  return field;
}

std::shared_ptr<const FiniteField> FiniteField::of_order(const Integer& q) {
  auto pp = prime_power(q);
  if (!pp) throw ff_error(Errc::kNotPrimePower, "q = " + q.get_str() + " is not a prime power");
  return get(pp->p, pp->e);
}

FiniteField::FiniteField(long p, std::vector<long> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw ff_error(Errc::kInvalidArgument, "modulus must be monic of positive degree");
  }
  k_ = static_cast<int>(modulus_.size()) - 1;
  const std::uint64_t size = ipow(static_cast<std::uint64_t>(p), k_);
  if (size > kMaxSize) throw ff_error(Errc::kFieldTooLarge, "field exceeds the enumeration cap 2^24");
  size_ = static_cast<std::uint32_t>(size);
  for (auto& c : modulus_) c = ((c % p) + p) % p;
  if (!is_primitive(modulus_, p)) throw ff_error(Errc::kInvalidArgument, "modulus is not primitive");

  exp_.assign(size_ - 1, 0);
  log_.assign(size_, 0);
  std::vector<long> digits(static_cast<std::size_t>(k_), 0);
  digits[0] = 1;
  for (std::uint32_t i = 0; i + 1 < size_; ++i) {
    Elem v = 0;
    for (int d = k_ - 1; d >= 0; --d) v = v * static_cast<Elem>(p) + static_cast<Elem>(digits[static_cast<std::size_t>(d)]);
    if (i > 0 && v == 1) throw ff_error(Errc::kInvalidArgument, "generator order is below q - 1");
    exp_[i] = v;
    log_[v] = i;
    // Multiply by t.
    long top = digits.back();
    for (int d = k_ - 1; d > 0; --d) digits[static_cast<std::size_t>(d)] = digits[static_cast<std::size_t>(d - 1)];
    digits[0] = 0;
    for (int d = 0; d < k_; ++d) {
      auto& x = digits[static_cast<std::size_t>(d)];
      x = ((x - top * modulus_[static_cast<std::size_t>(d)]) % p + p) % p;
    }
  }
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem r = 0, scale = 1;
  const auto p = static_cast<Elem>(p_);
  while (a != 0 || b != 0) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  Elem r = 0, scale = 1;
  const auto p = static_cast<Elem>(p_);
  while (a != 0) {
    r += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return r;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw ff_error(Errc::kDivisionByZero, "inverse of zero");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : size_ - 1 - l];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (size_ - 1))) % (size_ - 1);
  return exp_[l];
}

Elem FiniteField::from_int(long c) const { return static_cast<Elem>(((c % p_) + p_) % p_); }

Elem FiniteField::from_coords(const std::vector<long>& coords) const {
  if (coords.size() > static_cast<std::size_t>(k_)) {
    throw ff_error(Errc::kInvalidArgument, "too many coordinates for F_" + std::to_string(size_));
  }
  Elem v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * static_cast<Elem>(p_) + from_int(coords[i]);
  return v;
}

std::vector<long> FiniteField::to_coords(Elem a) const {
  std::vector<long> out(static_cast<std::size_t>(k_));
  for (auto& c : out) {
    c = static_cast<long>(a % static_cast<Elem>(p_));
    a /= static_cast<Elem>(p_);
  }
  return out;
}

int FiniteField::chi(Elem a) const {
  if (p_ == 2) throw ff_error(Errc::kWrongCharacteristic, "quadratic character needs odd characteristic");
  if (a == 0) return 0;
  return log_[a] % 2 == 0 ? 1 : -1;
}

long FiniteField::trace(Elem a) const {
  Elem sum = 0, x = a;
  for (int i = 0; i < k_; ++i) {
    sum = add(sum, x);
    x = pow(x, static_cast<std::uint64_t>(p_));
  }
  return static_cast<long>(sum);
}

std::string FiniteField::to_string(Elem a) const {
  std::ostringstream os;
  auto c = to_coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ":" : "") << c[i];
  return os.str();
}

Elem poly_eval(const FiniteField& F, const FieldPoly& f, Elem x) {
  Elem acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

int poly_degree(const FieldPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

namespace {

void trim(FieldPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FieldPoly poly_mod(const FiniteField& F, FieldPoly a, const FieldPoly& b) {
  trim(a);
  const int db = poly_degree(b);
  const Elem lead_inv = F.inv(b[static_cast<std::size_t>(db)]);
  while (poly_degree(a) >= db) {
    const int da = poly_degree(a);
    Elem c = F.mul(a[static_cast<std::size_t>(da)], lead_inv);
    for (int j = 0; j <= db; ++j) {
      auto& x = a[static_cast<std::size_t>(da - db + j)];
      x = F.sub(x, F.mul(c, b[static_cast<std::size_t>(j)]));
    }
    trim(a);
  }
  return a;
}

}  // namespace

FieldPoly poly_gcd(const FiniteField& F, FieldPoly a, FieldPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FieldPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elem li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

FieldPoly poly_derivative(const FiniteField& F, const FieldPoly& f) {
  FieldPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<long>(i)), f[i]));
  trim(d);
  return d;
}

Embedding::Embedding(const FiniteField& small, const FiniteField& big) {
  if (small.p() != big.p() || big.degree() % small.degree() != 0) {
    throw ff_error(Errc::kInvalidArgument, "no embedding between these fields");
  }
  FieldPoly m;
  for (long c : small.modulus()) m.push_back(big.from_int(c));
  std::optional<Elem> root;
  for (Elem x = 0; x < big.size() && !root; ++x) {
    if (poly_eval(big, m, x) == 0) root = x;
  }
  if (!root) throw ff_error(Errc::kInvalidArgument, "modulus has no root in the extension");
  table_.resize(small.size());
  for (Elem a = 0; a < small.size(); ++a) {
    auto c = small.to_coords(a);
    Elem v = 0, power = 1;
    for (long ci : c) {
      v = big.add(v, big.mul(big.from_int(ci), power));
      power = big.mul(power, *root);
    }
    table_[a] = v;
  }
}

FieldPoly Embedding::map(const FieldPoly& f) const {
  FieldPoly out;
  for (auto c : f) out.push_back(table_.at(c));
  return out;
}

namespace {

std::shared_ptr<const FiniteField> extension(const FiniteField& Fq, int n) {
  if (n < 1) throw ff_error(Errc::kInvalidArgument, "extension degree n must be positive");
  return FiniteField::get(Fq.p(), Fq.degree() * n);
}

void require_squarefree(const FiniteField& F, const FieldPoly& f, const std::string& what) {
  if (poly_degree(poly_gcd(F, f, poly_derivative(F, f))) > 0) {
    throw ff_error(Errc::kNotSquarefree, what + " is not squarefree");
  }
}

}  // namespace

std::int64_t count_hyperelliptic(const FiniteField& Fq, const FieldPoly& f, int n) {
  if (Fq.p() == 2) throw ff_error(Errc::kWrongCharacteristic, "y^2 = f(x) models need odd characteristic");
  const int deg = poly_degree(f);
  if (deg != 5 && deg != 6) throw ff_error(Errc::kInvalidArgument, "deg f must be 5 or 6");
  require_squarefree(Fq, f, "f");
  auto F = extension(Fq, n);
  const FieldPoly g = Embedding(Fq, *F).map(f);
  std::int64_t count = 0;
  for (Elem x = 0; x < F->size(); ++x) count += 1 + F->chi(poly_eval(*F, g, x));
  if (deg == 5) {
    count += 1;
  } else {
    count += 1 + F->chi(g[static_cast<std::size_t>(deg)]);
  }
  return count;
}

std::int64_t count_artin_schreier(const FiniteField& Fq, const FieldPoly& num, const FieldPoly& den, int n) {
  if (Fq.p() != 2) throw ff_error(Errc::kWrongCharacteristic, "y^2 + y = N/D models need characteristic 2");
  const int dn = poly_degree(num), dd = poly_degree(den);
  if (dd < 0) throw ff_error(Errc::kDivisionByZero, "denominator is zero");
  if (poly_degree(poly_gcd(Fq, num, den)) > 0) throw ff_error(Errc::kNotCoprime, "numerator and denominator share a factor");
  require_squarefree(Fq, den, "denominator");
  if (dn > dd && (dn - dd) % 2 == 0) {
    throw ff_error(Errc::kEvenOrderPole, "pole of even order " + std::to_string(dn - dd) + " at infinity");
  }
  auto F = extension(Fq, n);
  Embedding emb(Fq, *F);
  const FieldPoly N = emb.map(num), D = emb.map(den);
  std::int64_t count = 0;
  for (Elem x = 0; x < F->size(); ++x) {
    Elem d = poly_eval(*F, D, x);
    if (d == 0) {
      count += 1;  // simple pole: one ramified place
    } else if (F->trace(F->div(poly_eval(*F, N, x), d)) == 0) {
      count += 2;
    }
  }
  if (dn < dd) {
    count += 2;
  } else if (dn == dd) {
    Elem c = F->div(N[static_cast<std::size_t>(dn)], D[static_cast<std::size_t>(dd)]);
    if (F->trace(c) == 0) count += 2;
  } else {
    count += 1;
  }
  return count;
}

std::int64_t count_plane(const FiniteField& Fq, const std::vector<PlaneTerm>& terms, int n) {
  if (terms.empty()) throw ff_error(Errc::kInvalidArgument, "empty plane model");
  const int total = terms.front().i + terms.front().j + terms.front().k;
  for (const auto& t : terms) {
    if (t.i < 0 || t.j < 0 || t.k < 0 || t.i + t.j + t.k != total) {
      throw ff_error(Errc::kInvalidArgument, "plane model is not homogeneous");
    }
  }
  auto F = extension(Fq, n);
  if (static_cast<std::uint64_t>(F->size()) * F->size() > FiniteField::kMaxSize) {
    throw ff_error(Errc::kFieldTooLarge, "plane enumeration over F_" + std::to_string(F->size()) + " exceeds 2^24");
  }
  Embedding emb(Fq, *F);
  std::vector<PlaneTerm> T = terms;
  for (auto& t : T) t.coeff = emb(t.coeff);

  auto monomial = [&](Elem c, Elem x, Elem y, Elem z, int i, int j, int k) {
    return F->mul(c, F->mul(F->pow(x, static_cast<std::uint64_t>(i)),
                            F->mul(F->pow(y, static_cast<std::uint64_t>(j)), F->pow(z, static_cast<std::uint64_t>(k)))));
  };
  auto value = [&](Elem x, Elem y, Elem z) {
    Elem s = 0;
    for (const auto& t : T) s = F->add(s, monomial(t.coeff, x, y, z, t.i, t.j, t.k));
    return s;
  };
  auto singular = [&](Elem x, Elem y, Elem z) {
    Elem dx = 0, dy = 0, dz = 0;
    for (const auto& t : T) {
      if (t.i > 0) dx = F->add(dx, monomial(F->mul(F->from_int(t.i), t.coeff), x, y, z, t.i - 1, t.j, t.k));
      if (t.j > 0) dy = F->add(dy, monomial(F->mul(F->from_int(t.j), t.coeff), x, y, z, t.i, t.j - 1, t.k));
      if (t.k > 0) dz = F->add(dz, monomial(F->mul(F->from_int(t.k), t.coeff), x, y, z, t.i, t.j, t.k - 1));
    }
    return dx == 0 && dy == 0 && dz == 0;
  };
  std::int64_t count = 0;
  auto visit = [&](Elem x, Elem y, Elem z) {
    if (value(x, y, z) != 0) return;
    if (singular(x, y, z)) {
      throw ff_error(Errc::kSingularModel, "singular point (" + F->to_string(x) + " : " + F->to_string(y) + " : " +
                                               F->to_string(z) + ")");
    }
    ++count;
  };
  for (Elem x = 0; x < F->size(); ++x) {
    for (Elem y = 0; y < F->size(); ++y) visit(x, y, 1);
  }
  for (Elem x = 0; x < F->size(); ++x) visit(x, 1, 0);
  visit(1, 0, 0);
  return count;
}

std::string kind_name(CurveModel::Kind kind) {
  switch (kind) {
    case CurveModel::Kind::kHyperelliptic:
      return "hyp";
    case CurveModel::Kind::kArtinSchreier:
      return "as";
    case CurveModel::Kind::kPlane:
      return "plane";
  }
  return "?";
}

std::int64_t count_points(const CurveModel& model, int n) {
  auto Fq = FiniteField::of_order(model.q);
  switch (model.kind) {
    case CurveModel::Kind::kHyperelliptic:
      return count_hyperelliptic(*Fq, model.f, n);
    case CurveModel::Kind::kArtinSchreier:
      return count_artin_schreier(*Fq, model.num, model.den, n);
    case CurveModel::Kind::kPlane:
      return count_plane(*Fq, model.terms, n);
  }
  return 0;
}

CurveCounts count_sequence(const CurveModel& model, int max_n) {
  CurveCounts out{model.q, {}, CurveCounts::Source::kOracle};
  for (int n = 1; n <= max_n; ++n) out.counts.emplace_back(static_cast<long>(count_points(model, n)));
  return out;
}

Integer degree_d_points(const CurveCounts& counts, int d) {
  if (d < 1) throw ff_error(Errc::kInvalidArgument, "degree must be positive");
  if (counts.counts.size() < static_cast<std::size_t>(d)) {
    throw ff_error(Errc::kInvalidArgument, "counts up to n = " + std::to_string(d) + " are needed");
  }
  std::vector<Integer> B(static_cast<std::size_t>(d) + 1, 0);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    Integer rest = counts.counts[static_cast<std::size_t>(e - 1)];
    for (int f = 1; f < e; ++f) {
      if (e % f == 0) rest -= f * B[static_cast<std::size_t>(f)];
    }
    if (rest < 0 || rest % e != 0) {
      throw ff_error(Errc::kInconsistentCounts, "B_" + std::to_string(e) + " = (" + rest.get_str() + ")/" +
                                                    std::to_string(e) + " is not a nonnegative integer");
    }
    B[static_cast<std::size_t>(e)] = rest / e;
  }
  return B[static_cast<std::size_t>(d)];
}

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trimmed(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ff_error(Errc::kParseError, "expected an integer, got '" + s + "'");
  }
}

Elem parse_elem(const FiniteField& F, const std::string& token) {
  if (token.empty()) throw ff_error(Errc::kParseError, "empty coefficient");
  std::vector<long> coords;
  for (const auto& part : split(token, ':')) coords.push_back(parse_long(part));
  if (coords.size() > static_cast<std::size_t>(F.degree())) {
    throw ff_error(Errc::kParseError, "coefficient '" + token + "' has more than " + std::to_string(F.degree()) +
                                          " coordinates");
  }
  return F.from_coords(coords);
}

FieldPoly parse_poly(const FiniteField& F, const std::string& text) {
  FieldPoly out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_elem(F, tok));
  trim(out);
  return out;
}

}  // namespace

CurveModel parse_curve_model(const std::string& line) {
  auto parts = split(line, ';');
  if (parts.size() != 3) throw ff_error(Errc::kParseError, "expected 'kind; q; coefficients'");
  CurveModel m{};
  const std::string& kind = parts[0];
  if (kind == "hyp") {
    m.kind = CurveModel::Kind::kHyperelliptic;
  } else if (kind == "as") {
    m.kind = CurveModel::Kind::kArtinSchreier;
  } else if (kind == "plane") {
    m.kind = CurveModel::Kind::kPlane;
  } else {
    throw ff_error(Errc::kParseError, "unknown curve kind '" + kind + "'");
  }
  m.q = parse_long(parts[1]);
  auto F = FiniteField::of_order(m.q);
  switch (m.kind) {
    case CurveModel::Kind::kHyperelliptic:
      m.f = parse_poly(*F, parts[2]);
      break;
    case CurveModel::Kind::kArtinSchreier: {
      auto nd = split(parts[2], '|');
      if (nd.size() != 2) throw ff_error(Errc::kParseError, "expected 'numerator | denominator'");
      m.num = parse_poly(*F, nd[0]);
      m.den = parse_poly(*F, nd[1]);
      break;
    }
    case CurveModel::Kind::kPlane:
      for (const auto& tok : split(parts[2], ',')) {
        auto at = tok.find('@');
        if (at == std::string::npos) throw ff_error(Errc::kParseError, "plane term '" + tok + "' needs coeff@i.j.k");
        auto exps = split(tok.substr(at + 1), '.');
        if (exps.size() != 3) throw ff_error(Errc::kParseError, "plane term '" + tok + "' needs three exponents");
        PlaneTerm t{parse_elem(*F, trimmed(tok.substr(0, at))), static_cast<int>(parse_long(exps[0])),
                    static_cast<int>(parse_long(exps[1])), static_cast<int>(parse_long(exps[2]))};
        if (t.coeff != 0) m.terms.push_back(t);
      }
      break;
  }
  return m;
}

}  // namespace pointbound
