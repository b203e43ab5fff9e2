#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "speh/error.hpp"

namespace speh {

using Integer = mpz_class;
using Rational = mpq_class;
using Prime = unsigned long;

Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// floor and ceiling of a rational as integers.
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

bool is_prime(const Integer& n);
bool is_prime(unsigned long n);
std::vector<Prime> primes_up_to(unsigned long bound);

/// Multiplicity of p in n. n must be nonzero.
unsigned long ord(const Integer& n, const Integer& p);
/// p-adic valuation of a nonzero rational.
long ord(const Rational& q, Prime p);

struct PrimePower {
  Integer prime;
  unsigned long exponent;
};
using Factorization = std::vector<PrimePower>;

/// Factorization of |n| (n != 0) into primes, ascending. Trial division
/// followed by Pollard-Brent; throws NotRepresentable if the work budget is
/// exhausted on a cofactor that has not been split.
Factorization factor(const Integer& n);

/// Distinct prime divisors of a nonzero integer, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// Positive divisors of a nonzero integer, ascending.
std::vector<Integer> divisors(const Integer& n);

/// n = s^2 * d with d squarefree, for n > 0.
struct SquareSplit {
  Integer square_root_part;
  Integer squarefree_part;
};
SquareSplit square_split(const Integer& n);

bool is_squarefree(const Integer& n);

/// Elements of Q(i). Used for archimedean evaluation points.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_rational() const { return sgn(im) == 0; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);

}  // namespace speh
