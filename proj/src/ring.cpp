#include "speh/ring.hpp"

namespace speh {

std::string_view ring_name(RingKind r) {
  switch (r) {
    case RingKind::Z: return "Z";
    case RingKind::Q: return "Q";
    case RingKind::FpX: return "FpX";
    case RingKind::ZX: return "ZX";
    case RingKind::QX: return "QX";
    case RingKind::QXFrac: return "QXfrac";
  }
  return "?";
}

bool coerces_to(RingKind from, RingKind to) {
  if (from == to) return true;
  switch (from) {
    case RingKind::Z: return true;
    case RingKind::Q: return to == RingKind::QX || to == RingKind::QXFrac;
    case RingKind::ZX: return to == RingKind::QX || to == RingKind::QXFrac;
    case RingKind::QX: return to == RingKind::QXFrac;
    default: return false;
  }
}

bool is_polynomial_ring(RingKind r) {
  return r == RingKind::FpX || r == RingKind::ZX || r == RingKind::QX || r == RingKind::QXFrac;
}

RingElement RingElement::integer(const Integer& n) {
  RingElement e;
  e.ring_ = RingKind::Z;
  e.num_ = Polynomial::constant(Rational(n));
  return e;
}

RingElement RingElement::rational(const Rational& q) {
  RingElement e;
  e.ring_ = RingKind::Q;
  e.num_ = Polynomial::constant(q);
  return e;
}

RingElement RingElement::zx(const Polynomial& p) {
  if (!p.has_integer_coeffs()) throw Error(ErrorCode::DomainMismatch, "Z[X] element with non-integer coefficient");
  RingElement e;
  e.ring_ = RingKind::ZX;
  e.num_ = p;
  return e;
}

RingElement RingElement::qx(const Polynomial& p) {
  RingElement e;
  e.ring_ = RingKind::QX;
  e.num_ = p;
  return e;
}

RingElement RingElement::fpx(const FpPolynomial& p) {
  RingElement e;
  e.ring_ = RingKind::FpX;
  e.fp_ = p;
  return e;
}

RingElement RingElement::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "fraction with zero denominator");
  RingElement e;
  e.ring_ = RingKind::QXFrac;
  Polynomial g = gcd(num, den);
  if (num.is_zero()) {
    e.num_ = Polynomial();
    e.den_ = Polynomial::constant(1);
    return e;
  }
  Polynomial n = divmod(num, g).quotient;
  Polynomial d = divmod(den, g).quotient;
  Rational lead = d.leading();
  e.num_ = n * Polynomial::constant(1 / lead);
  e.den_ = d * Polynomial::constant(1 / lead);
  return e;
}

bool RingElement::is_zero() const { return ring_ == RingKind::FpX ? fp_.is_zero() : num_.is_zero(); }

Integer RingElement::as_integer() const {
  if (ring_ != RingKind::Z) throw Error(ErrorCode::DomainMismatch, "expected an element of Z");
  return num_.coeff(0).get_num();
}

Rational RingElement::as_rational() const {
  if (ring_ != RingKind::Z && ring_ != RingKind::Q) throw Error(ErrorCode::DomainMismatch, "expected an element of Q");
  return num_.coeff(0);
}

FpPolynomial RingElement::reduce_mod(Prime p) const {
  if (ring_ == RingKind::FpX) {
    if (fp_.modulus() != p) throw Error(ErrorCode::MixedRings, "element of F_p[X] for a different p");
    return fp_;
  }
  if (ring_ == RingKind::QXFrac && den_.degree() > 0) {
    throw Error(ErrorCode::DomainMismatch, "rational function has no reduction to F_p[X]");
  }
  Polynomial q = num_ * Polynomial::constant(1 / den_.coeff(0));
  return FpPolynomial::reduce(p, q);
}

RingElement RingElement::coerce(RingKind target, Prime p) const {
  if (target == ring_ && (target != RingKind::FpX || p == 0 || p == fp_.modulus())) return *this;
  if (!coerces_to(ring_, target)) {
    throw Error(ErrorCode::MixedRings,
                "cannot map " + std::string(ring_name(ring_)) + " into " + std::string(ring_name(target)));
  }
  switch (target) {
    case RingKind::Q: return rational(num_.coeff(0));
    case RingKind::ZX: return zx(num_);
    case RingKind::QX: return qx(num_);
    case RingKind::QXFrac: return fraction(num_, den_);
    case RingKind::FpX: {
      if (p == 0) throw Error(ErrorCode::InvalidArgument, "reduction needs a prime");
      return fpx(reduce_mod(p));
    }
    default: return *this;
  }
}

RingKind common_ring(const RingElement& a, const RingElement& b) {
  if (coerces_to(a.ring(), b.ring())) return b.ring();
  if (coerces_to(b.ring(), a.ring())) return a.ring();
  if ((a.ring() == RingKind::Q && b.ring() == RingKind::ZX) || (a.ring() == RingKind::ZX && b.ring() == RingKind::Q)) {
    return RingKind::QX;
  }
  throw Error(ErrorCode::MixedRings,
              std::string(ring_name(a.ring())) + " and " + std::string(ring_name(b.ring())) + " have no common ring");
}

namespace {

std::pair<RingElement, RingElement> align(const RingElement& a, const RingElement& b) {
  RingKind r = common_ring(a, b);
  Prime p = a.ring() == RingKind::FpX ? a.modulus() : b.ring() == RingKind::FpX ? b.modulus() : 0;
  if (a.ring() == RingKind::FpX && b.ring() == RingKind::FpX && a.modulus() != b.modulus()) {
    throw Error(ErrorCode::MixedRings, "elements of F_p[X] for different p");
  }
  return {a.coerce(r, p), b.coerce(r, p)};
}

RingElement rebuild(RingKind r, const Polynomial& num, const Polynomial& den) {
  switch (r) {
    case RingKind::Z: return RingElement::integer(num.coeff(0).get_num());
    case RingKind::Q: return RingElement::rational(num.coeff(0));
    case RingKind::ZX: return RingElement::zx(num);
    case RingKind::QX: return RingElement::qx(num);
    default: return RingElement::fraction(num, den);
  }
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  auto [x, y] = align(a, b);
  if (x.ring() == RingKind::FpX) return RingElement::fpx(x.fp() + y.fp());
  if (x.ring() == RingKind::QXFrac) return RingElement::fraction(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
  return rebuild(x.ring(), x.num() + y.num(), Polynomial::constant(1));
}

RingElement RingElement::operator-() const {
  if (ring_ == RingKind::FpX) return fpx(FpPolynomial(fp_.modulus(), {}) - fp_);
  RingElement e = *this;
  e.num_ = -num_;
  return e;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  auto [x, y] = align(a, b);
  if (x.ring() == RingKind::FpX) return RingElement::fpx(x.fp() * y.fp());
  if (x.ring() == RingKind::QXFrac) return RingElement::fraction(x.num() * y.num(), x.den() * y.den());
  return rebuild(x.ring(), x.num() * y.num(), Polynomial::constant(1));
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) return false;
  if (a.ring_ == RingKind::FpX) return a.fp_ == b.fp_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RingElement::to_string() const {
  switch (ring_) {
    case RingKind::Z:
    case RingKind::Q:
      return speh::to_string(num_.coeff(0));
    case RingKind::FpX:
      return fp_.to_string() + " (mod " + std::to_string(fp_.modulus()) + ")";
    case RingKind::ZX:
    case RingKind::QX:
      return num_.to_string();
    case RingKind::QXFrac:
      return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  return "?";
}

}  // namespace speh
