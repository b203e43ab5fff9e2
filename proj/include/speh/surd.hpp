#pragma once

#include <compare>
#include <map>
#include <string>

#include "speh/arith.hpp"

namespace speh {

/// Nonnegative real of the form sum c_d * sqrt(d), d squarefree, c_d > 0.
/// The term map is canonical, so equality is structural.
class Surd {
 public:
  using Terms = std::map<Integer, Rational>;

  Surd() = default;
  explicit Surd(const Rational& q);
  /// Builds from arbitrary (d, c) pairs; d > 0 is split into square part and
  /// squarefree part, c must be >= 0.
  static Surd from_terms(const std::vector<std::pair<Rational, Integer>>& terms);
  /// sqrt(q) for q >= 0.
  static Surd sqrt_of(const Rational& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The rational value when is_rational().
  Rational rational_value() const;

  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) = default;
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

  /// Outward-rounded enclosure with width about 2^-bits per term.
  std::pair<Rational, Rational> enclosure(unsigned long bits) const;
  double to_double() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Sign of sum c_d sqrt(d) for signed coefficients and squarefree d.
int sign_of_signed_surd(const std::map<Integer, Rational>& terms);

}  // namespace speh
