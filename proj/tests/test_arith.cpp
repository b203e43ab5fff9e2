#include <doctest.h>

#include <cmath>
#include <random>

#include "speh/random.hpp"

using namespace speh;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("10/-4"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_integer("1/2"), Error);
}

TEST_CASE("valuations") {
  CHECK(ord(Rational(12, 5), 2) == 2);
  CHECK(ord(Rational(1, 50), 5) == -2);
  CHECK(ord(Integer(81), Integer(3)) == 4);
}

TEST_CASE("factorization against trial division") {
  std::mt19937_64 gen(1);
  for (int t = 0; t < 300; ++t) {
    Integer n = static_cast<unsigned long>(gen() % 5000000) + 2;
    Integer prod = 1;
    for (const auto& pp : factor(n)) {
      for (Integer d = 2; d * d <= pp.prime; ++d) REQUIRE(pp.prime % d != 0);
      prod *= ipow(pp.prime, pp.exponent);
    }
    CHECK(prod == n);
  }
  Integer big = Integer("1000000007") * Integer("998244353");
  auto f = factor(big);
  REQUIRE(f.size() == 2);
  CHECK(f[0].prime == Integer("998244353"));
}

TEST_CASE("square split") {
  auto s = square_split(72);
  CHECK(s.square_root_part == 6);
  CHECK(s.squarefree_part == 2);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("primes") {
  CHECK(primes_up_to(30) == std::vector<Prime>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(100).size() == 25);
  CHECK(is_prime(Integer(97)));
  CHECK_FALSE(is_prime(Integer(91)));
}

TEST_CASE("polynomial division and gcd") {
  Random rng(3);
  for (int t = 0; t < 200; ++t) {
    Polynomial a = rng.rational_polynomial(6, 9, 5), b = rng.rational_polynomial(3, 9, 5);
    if (b.is_zero()) continue;
    auto qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());
  }
  Polynomial x1 = Polynomial::linear(1), x2 = Polynomial::linear(2), x3 = Polynomial::linear(3);
  CHECK(gcd(x1 * x2, x2 * x3) == x2);
}

TEST_CASE("taylor shift reproduces the polynomial") {
  Random rng(4);
  for (int t = 0; t < 200; ++t) {
    Polynomial p = rng.rational_polynomial(7, 9, 4);
    Rational a = rng.rational(9, 7), x = rng.rational(9, 5);
    auto b = taylor_shift(p, a);
    Rational sum = 0, pw = 1;
    for (const auto& c : b) {
      sum += c * pw;
      pw *= x - a;
    }
    CHECK(sum == p(x));
  }
  GaussianRational a{Rational(1, 3), Rational(2, 5)};
  Polynomial p({1, 2, 3});
  auto b = taylor_shift(p, a);
  CHECK(b[0] == p(a));
  CHECK(b[1] == p.derivative()(a));
  CHECK(b[2] == GaussianRational(3));
}

TEST_CASE("polynomials over F_p") {
  CHECK(is_irreducible(FpPolynomial(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(FpPolynomial(2, {1, 0, 1})));
  CHECK(is_irreducible(FpPolynomial(3, {1, 0, 1})));
  CHECK_FALSE(is_irreducible(FpPolynomial(5, {1, 0, 1})));
  FpPolynomial x = FpPolynomial::x(3), x1(3, {1, 1});
  CHECK(ord(x * x * x1, x) == 2);
  CHECK(ord(x1, x) == 0);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(FpPolynomial::reduce(3, Polynomial({Rational(1, 3)})), Error);
}

TEST_CASE("surd arithmetic") {
  Surd r2 = Surd::sqrt_of(2);
  CHECK(r2 + r2 == Surd::from_terms({{2, 2}}));
  CHECK(r2 * r2 == Surd(Rational(2)));
  CHECK((Surd(Rational(1)) + r2) * r2 == r2 + Surd(Rational(2)));
  CHECK(Surd::sqrt_of(Rational(8, 9)) == Surd::from_terms({{Rational(2, 3), 2}}));
  CHECK(Surd::sqrt_of(Rational(9, 4)) == Surd(Rational(3, 2)));
  CHECK(Surd::from_terms({{1, 12}}) == Surd::from_terms({{2, 3}}));
  CHECK_THROWS_AS(Surd::sqrt_of(-1), Error);
}

TEST_CASE("surd comparison") {
  Surd lhs = Surd::sqrt_of(2) + Surd::sqrt_of(3), rhs = Surd::sqrt_of(10);
  // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 and 2 sqrt6 < 5 since 24 < 25.
  CHECK((lhs <=> rhs) == std::strong_ordering::less);
  CHECK((rhs <=> lhs) == std::strong_ordering::greater);
  CHECK((lhs <=> lhs) == std::strong_ordering::equal);

  Random rng(5);
  const HaloDescriptor s = HaloDescriptor::surds();
  int decided = 0;
  for (int t = 0; t < 500; ++t) {
    Surd a = rng.unit(s).as_surd(), b = rng.unit(s).as_surd();
    double gap = a.to_double() - b.to_double();
    if (std::abs(gap) <= 1e-6) continue;
    ++decided;
    CHECK(((a <=> b) == std::strong_ordering::less) == (gap < 0));
  }
  CHECK(decided > 400);
}
