#pragma once

#include <string>

#include "speh/polynomial.hpp"

namespace speh {

enum class RingKind { Z, Q, FpX, ZX, QX, QXFrac };

std::string_view ring_name(RingKind r);
/// Z -> Q -> QX -> QXFrac, Z -> ZX -> QX, Z -> FpX.
bool coerces_to(RingKind from, RingKind to);
bool is_polynomial_ring(RingKind r);

/// An element of one of the supported rings. Integers and rationals live in
/// `num` as constant polynomials so that coercion is free.
class RingElement {
 public:
  RingElement() = default;
  static RingElement integer(const Integer& n);
  static RingElement rational(const Rational& q);
  static RingElement zx(const Polynomial& p);
  static RingElement qx(const Polynomial& p);
  static RingElement fpx(const FpPolynomial& p);
  static RingElement fraction(const Polynomial& num, const Polynomial& den);

  RingKind ring() const { return ring_; }
  /// Numerator polynomial (constant for Z and Q).
  const Polynomial& num() const { return num_; }
  /// Denominator polynomial; 1 outside QXFrac.
  const Polynomial& den() const { return den_; }
  const FpPolynomial& fp() const { return fp_; }
  Prime modulus() const { return fp_.modulus(); }

  bool is_zero() const;
  /// Integer value; requires ring Z.
  Integer as_integer() const;
  /// Rational value; requires ring Z or Q.
  Rational as_rational() const;
  /// Reduction into F_p[X] for p-integral elements without X-denominators.
  FpPolynomial reduce_mod(Prime p) const;

  RingElement coerce(RingKind target, Prime p = 0) const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const;
  friend bool operator==(const RingElement& a, const RingElement& b);

  std::string to_string() const;

 private:
  RingKind ring_ = RingKind::Z;
  Polynomial num_;
  Polynomial den_ = Polynomial::constant(1);
  FpPolynomial fp_;
};

/// Smallest ring both coerce into; throws MixedRings if none.
RingKind common_ring(const RingElement& a, const RingElement& b);

}  // namespace speh
