#pragma once

#include <string>
#include <vector>

#include "speh/arith.hpp"

namespace speh {

/// Dense polynomial over Q, coefficients ascending (constant term first),
/// always trimmed so the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// X - a
  static Polynomial linear(const Rational& a);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(std::size_t i) const;
  bool has_integer_coeffs() const;

  Rational operator()(const Rational& x) const;
  GaussianRational operator()(const GaussianRational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Coefficients b_i with P(X) = sum b_i (X - a)^i, via repeated synthetic division.
std::vector<Rational> taylor_shift(const Polynomial& p, const Rational& a);
std::vector<GaussianRational> taylor_shift(const Polynomial& p, const GaussianRational& a);

/// Dense polynomial over F_p, coefficients ascending in [0, p).
class FpPolynomial {
 public:
  FpPolynomial() = default;
  FpPolynomial(Prime p, std::vector<unsigned long> coeffs);
  /// Reduction of an integer-coefficient (or p-integral) rational polynomial.
  static FpPolynomial reduce(Prime p, const Polynomial& poly);
  static FpPolynomial constant(Prime p, unsigned long c);
  static FpPolynomial x(Prime p);

  Prime modulus() const { return p_; }
  const std::vector<unsigned long>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  unsigned long leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  FpPolynomial monic() const;

  friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
  friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
  friend bool operator==(const FpPolynomial& a, const FpPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  Prime p_ = 2;
  std::vector<unsigned long> coeffs_;
};

struct FpDivision {
  FpPolynomial quotient;
  FpPolynomial remainder;
};
FpDivision divmod(const FpPolynomial& a, const FpPolynomial& b);
FpPolynomial gcd(const FpPolynomial& a, const FpPolynomial& b);
/// base^e mod m.
FpPolynomial powmod(const FpPolynomial& base, const Integer& e, const FpPolynomial& m);
/// Rabin-style test: deg P >= 1 and gcd(X^{p^d} - X, P) = 1 for d <= deg P / 2.
bool is_irreducible(const FpPolynomial& poly);
/// Multiplicity of the irreducible P in nonzero Q.
unsigned long ord(const FpPolynomial& q, const FpPolynomial& irreducible);

unsigned long inverse_mod(unsigned long a, Prime p);

}  // namespace speh
