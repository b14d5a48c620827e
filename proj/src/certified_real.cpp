#include <algorithm>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>

#include "pointbound/numerics.hpp"

namespace pointbound {

namespace detail {
namespace {

int magnitude_bits(const Interval& iv) {
  Integer m = ceil_rat(iv.magnitude());
  return m <= 1 ? 0 : static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

struct ExactNode final : RealNode {
  explicit ExactNode(Surd v) : value(std::move(v)) {}
  Interval eval(int bits) const override { return value.enclose(bits); }
  Surd value;
};

// Procedures can be expensive (bisections), and a shared node is evaluated
// once per use in an expression, so the sharpest result so far is kept.
struct ProcedureNode final : RealNode {
  explicit ProcedureNode(std::function<Interval(int)> f) : fn(std::move(f)) {}
  Interval eval(int bits) const override {
    {
      std::lock_guard<std::mutex> lock(mu);
      if (cached_bits >= bits) return cached;
    }
    Interval r = fn(bits);
    std::lock_guard<std::mutex> lock(mu);
    if (bits > cached_bits) {
      cached_bits = bits;
      cached = r;
    }
    return r;
  }
  std::function<Interval(int)> fn;
  mutable std::mutex mu;
  mutable int cached_bits = -1;
  mutable Interval cached;
};

enum class BinOp { kAdd, kSub, kMul, kDiv };

// Guard bits are fixed at construction from the operands' enclosures so each
// evaluation is a single pass over the expression tree.
struct BinaryNode final : RealNode {
  BinaryNode(BinOp o, std::shared_ptr<const RealNode> l, std::shared_ptr<const RealNode> r, int guard,
             int divisor_bits)
      : op(o), lhs(std::move(l)), rhs(std::move(r)), guard_bits(guard), min_divisor_bits(divisor_bits) {}

  Interval eval(int bits) const override {
    const int work = bits + 4 + guard_bits;
    Interval a = lhs->eval(work);
    Interval b = rhs->eval(op == BinOp::kDiv ? std::max(work, min_divisor_bits) : work);
    Interval result;
    switch (op) {
      case BinOp::kAdd:
        result = a + b;
        break;
      case BinOp::kSub:
        result = a - b;
        break;
      case BinOp::kMul:
        result = a * b;
        break;
      case BinOp::kDiv:
        result = a / b;
        break;
    }
    return result.rounded(bits);
  }

  BinOp op;
  std::shared_ptr<const RealNode> lhs;
  std::shared_ptr<const RealNode> rhs;
  int guard_bits;
  int min_divisor_bits;
};

enum class UnaryOp { kNeg, kSqrt, kCos, kSin };

struct UnaryNode final : RealNode {
  UnaryNode(UnaryOp o, std::shared_ptr<const RealNode> a) : op(o), arg(std::move(a)) {}

  Interval eval(int bits) const override {
    switch (op) {
      case UnaryOp::kNeg:
        return -arg->eval(bits);
      case UnaryOp::kSqrt: {
        // sqrt is not Lipschitz at 0; doubling the working precision covers it.
        Interval x = arg->eval(2 * bits + 4);
        return sqrt_interval(x, bits + 2).rounded(bits);
      }
      case UnaryOp::kCos:
        return cos_interval(arg->eval(bits + 4), bits);
      case UnaryOp::kSin:
        return sin_interval(arg->eval(bits + 4), bits);
    }
    return {};
  }

  UnaryOp op;
  std::shared_ptr<const RealNode> arg;
};

struct PiNode final : RealNode {
  Interval eval(int bits) const override { return pi_interval(bits); }
};

}  // namespace

// Internal cap for separating a divisor from zero.
constexpr int kDivisorBitsCap = 1 << 14;

std::shared_ptr<const RealNode> make_binary(BinOp op, std::shared_ptr<const RealNode> lhs,
                                            const Interval& lhs_enclosure,
                                            std::shared_ptr<const RealNode> rhs,
                                            const Interval& rhs_enclosure, int rhs_bits) {
  int guard = 0;
  int divisor_bits = 0;
  if (op == BinOp::kMul) {
    guard = std::max(magnitude_bits(lhs_enclosure), magnitude_bits(rhs_enclosure)) + 1;
  } else if (op == BinOp::kDiv) {
    Interval b = rhs_enclosure;
    divisor_bits = rhs_bits;
    while (b.contains_zero()) {
      divisor_bits *= 2;
      if (divisor_bits > kDivisorBitsCap) {
        throw Error(Errc::kDivisionByZero, "numerics", "divisor enclosure keeps containing zero");
      }
      b = rhs->eval(divisor_bits);
    }
    Rat min_abs = sgn(b.lo) > 0 ? b.lo : Rat(-b.hi);
    guard = 2 * magnitude_bits(Interval(1 / min_abs)) + magnitude_bits(lhs_enclosure) + 2;
  }
  return std::make_shared<BinaryNode>(op, std::move(lhs), std::move(rhs), guard, divisor_bits);
}

}  // namespace detail

using detail::BinOp;
using detail::UnaryNode;
using detail::UnaryOp;

CertifiedReal::CertifiedReal() : CertifiedReal(Rat(0)) {}

CertifiedReal::CertifiedReal(const Rat& x) : CertifiedReal(Surd(x)) {}

CertifiedReal::CertifiedReal(const Surd& x)
    : CertifiedReal(std::make_shared<detail::ExactNode>(x), x, 32) {}

CertifiedReal::CertifiedReal(std::shared_ptr<const detail::RealNode> node, std::optional<Surd> exact,
                             int bits)
    : node_(std::move(node)), exact_(std::move(exact)), bits_(bits) {
  enclosure_ = node_->eval(bits_);
}

CertifiedReal CertifiedReal::from_procedure(std::function<Interval(int)> eval, int initial_bits) {
  return CertifiedReal(std::make_shared<detail::ProcedureNode>(std::move(eval)), std::nullopt,
                       initial_bits);
}

CertifiedReal CertifiedReal::pi() {
  return CertifiedReal(std::make_shared<detail::PiNode>(), std::nullopt, 32);
}

CertifiedReal CertifiedReal::sqrt(const CertifiedReal& x) {
  if (x.exact_ && x.exact_->is_rational()) return CertifiedReal(Surd::sqrt(x.exact_->rational_part()));
  if (sgn(x.hi()) < 0) throw Error(Errc::kInvalidArgument, "numerics", "square root of a negative number");
  return CertifiedReal(std::make_shared<UnaryNode>(UnaryOp::kSqrt, x.node_), std::nullopt, x.bits_);
}

CertifiedReal CertifiedReal::cos(const CertifiedReal& x) {
  if (x.exact_ && x.exact_->is_zero()) return CertifiedReal(Rat(1));
  return CertifiedReal(std::make_shared<UnaryNode>(UnaryOp::kCos, x.node_), std::nullopt, x.bits_);
}

CertifiedReal CertifiedReal::sin(const CertifiedReal& x) {
  if (x.exact_ && x.exact_->is_zero()) return CertifiedReal(Rat(0));
  return CertifiedReal(std::make_shared<UnaryNode>(UnaryOp::kSin, x.node_), std::nullopt, x.bits_);
}

Interval CertifiedReal::at_bits(int bits) const {
  if (bits <= bits_) return enclosure_;
  return node_->eval(bits);
}

CertifiedReal CertifiedReal::at_precision(int bits) const {
  CertifiedReal out = *this;
  if (bits > bits_) {
    out.bits_ = bits;
    out.enclosure_ = node_->eval(bits);
  }
  return out;
}

CertifiedReal CertifiedReal::refined(const Rat& width, const Precision& prec) const {
  if (sgn(width) <= 0) throw Error(Errc::kInvalidArgument, "numerics", "refinement width must be positive");
  if (enclosure_.width() <= width) return *this;
  // Start near the precision the width asks for, then double.
  int bits = std::max(bits_ * 2, static_cast<int>(std::ceil(-std::log2(width.get_d()))) + 4);
  for (;; bits *= 2) {
    if (bits > prec.max_bits) {
      bits = prec.max_bits;
      CertifiedReal last = at_precision(bits);
      if (last.width() <= width) return last;
      throw Error(Errc::kNonTermination, "numerics",
                  "refinement cap of " + std::to_string(prec.max_bits) + " bits reached");
    }
    CertifiedReal next = at_precision(bits);
    if (next.width() <= width) return next;
  }
}

CertifiedReal CertifiedReal::pow(unsigned exponent) const {
  CertifiedReal result(Rat(1));
  CertifiedReal base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.exact_ && b.exact_) return CertifiedReal(*a.exact_ + *b.exact_);
  return CertifiedReal(detail::make_binary(BinOp::kAdd, a.node_, a.enclosure_, b.node_, b.enclosure_, b.bits_), std::nullopt,
                       std::max(a.bits_, b.bits_));
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.exact_ && b.exact_) return CertifiedReal(*a.exact_ - *b.exact_);
  return CertifiedReal(detail::make_binary(BinOp::kSub, a.node_, a.enclosure_, b.node_, b.enclosure_, b.bits_), std::nullopt,
                       std::max(a.bits_, b.bits_));
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  if (a.exact_ && b.exact_) return CertifiedReal(*a.exact_ * *b.exact_);
  if ((a.exact_ && a.exact_->is_zero()) || (b.exact_ && b.exact_->is_zero())) return CertifiedReal(Rat(0));
  return CertifiedReal(detail::make_binary(BinOp::kMul, a.node_, a.enclosure_, b.node_, b.enclosure_, b.bits_), std::nullopt,
                       std::max(a.bits_, b.bits_));
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  if (b.exact_ && b.exact_->is_zero()) {
    throw Error(Errc::kDivisionByZero, "numerics", "division by exact zero");
  }
  if (a.exact_ && b.exact_) return CertifiedReal(*a.exact_ / *b.exact_);
  return CertifiedReal(detail::make_binary(BinOp::kDiv, a.node_, a.enclosure_, b.node_, b.enclosure_, b.bits_), std::nullopt,
                       std::max(a.bits_, b.bits_));
}

CertifiedReal operator-(const CertifiedReal& a) {
  if (a.exact_) return CertifiedReal(-*a.exact_);
  return CertifiedReal(std::make_shared<UnaryNode>(UnaryOp::kNeg, a.node_), std::nullopt, a.bits_);
}

std::string CertifiedReal::to_string(int digits) const {
  if (exact_ && exact_->is_rational()) {
    return rat_to_decimal(exact_->rational_part(), digits) + " ± 0";
  }
  const Rat target = pow2(-static_cast<int>(std::ceil(digits * 3.33)) - 2);
  CertifiedReal shown = *this;
  try {
    shown = refined(target);
  } catch (const Error&) {
    // Print whatever precision the cap allowed.
  }
  Rat half = shown.width() / 2;
  std::ostringstream os;
  os << rat_to_decimal(shown.enclosure().midpoint(), digits) << " ± ";
  double h = half.get_d();
  if (h == 0.0) {
    os << "0";
  } else {
    os << std::setprecision(1) << std::scientific << h;
  }
  return os.str();
}

CertifiedReal quad_to_interval(const QuadNum& x, const Rat& width) {
  if (sgn(width) <= 0) throw Error(Errc::kInvalidArgument, "numerics", "width must be positive");
  return CertifiedReal(x).refined(width);
}

Integer certified_floor(const CertifiedReal& x, const Precision& prec) {
  if (x.exact()) return x.exact()->floor();
  for (int bits = x.bits();; bits *= 2) {
    bits = std::min(bits, prec.max_bits);
    Interval iv = x.at_bits(bits);
    Integer fl = floor_rat(iv.lo), fh = floor_rat(iv.hi);
    if (fl == fh) return fl;
    if (bits >= prec.max_bits) {
      throw FloorAmbiguous(fl, fh,
                           "floor undecided between " + fl.get_str() + " and " + fh.get_str() +
                               " at " + std::to_string(prec.max_bits) +
                               " bits; the value may be an integer and needs an exact path");
    }
  }
}

std::strong_ordering compare(const CertifiedReal& x, const CertifiedReal& y, const Precision& prec) {
  if (x.exact() && y.exact()) return compare(*x.exact(), *y.exact());
  CertifiedReal diff = x - y;
  for (int bits = std::max(diff.bits(), 32);; bits *= 2) {
    bits = std::min(bits, prec.max_bits);
    Interval iv = diff.at_bits(bits);
    if (sgn(iv.lo) > 0) return std::strong_ordering::greater;
    if (sgn(iv.hi) < 0) return std::strong_ordering::less;
    if (bits >= prec.max_bits) {
      throw Error(Errc::kNonTermination, "numerics",
                  "comparison undecided at " + std::to_string(prec.max_bits) +
                      " bits (values suspected equal)");
    }
  }
}

}  // namespace pointbound
