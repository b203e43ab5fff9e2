#include <doctest.h>

#include "speh/affine_line.hpp"
#include "speh/random.hpp"

using namespace speh;

namespace {

using T = AffinePoint::Type;

RingElement zx(std::vector<Rational> c) { return RingElement::zx(Polynomial(std::move(c))); }

}  // namespace

TEST_CASE("taxonomy") {
  CHECK(classify_affine_point(Place::gauss_point(3, 0, 1)).type == T::HKType2Gauss);
  CHECK(classify_affine_point(Place::arch_infinitesimal({1, 0})).type == T::ArchInfPoint);
  CHECK(classify_affine_point(Place::arch_infinity()).type == T::ArchInfinityPoint);
  CHECK(classify_affine_point(Place::arch_eval({1, 1})).type == T::ArchEvalPoint);
  CHECK(classify_affine_point(Place::trivial(RingKind::ZX)).type == T::TrivialPoint);
  CHECK(classify_affine_point(Place::padic_eval(5, 2)).type == T::HKType1);
  CHECK(classify_affine_point(Place::hk_case4(5, 2, Place::Major::All)).type == T::HKType4);
  CHECK(classify_affine_point(Place::fp_residual(2, FpPolynomial(2, {1, 1, 1}))).type == T::FpResidualPoint);
}

TEST_CASE("filter cases") {
  CHECK(hk_classify(classify_affine_point(Place::padic_eval(5, 2))).case_number == 1);
  CHECK(hk_classify(classify_affine_point(Place::gauss_point(5, 2, 0))).case_number == 2);
  auto r = hk_classify(classify_affine_point(Place::hk_case4(5, 2, Place::Major::Empty)));
  CHECK(r.case_number == 4);
  CHECK(r.subcase == 'a');
  CHECK(hk_classify(classify_affine_point(Place::hk_case4(5, 2, Place::Major::All))).subcase == 'b');
  CHECK(hk_classify(classify_affine_point(Place::hk_case4(5, 2, Place::Major::Cut, 5))).subcase == 'c');
  CHECK_THROWS_AS(hk_classify(classify_affine_point(Place::arch_infinity())), Error);
}

TEST_CASE("case 4 formulas") {
  RingElement f = zx({0, 10, 0, 25});  // 10X + 25X^3
  Place empty = Place::hk_case4(5, 0, Place::Major::Empty);
  HaloValue v = hk_evaluate(classify_affine_point(empty), f);
  // |a_3| q^3 with |25|_5 = 5^-2.
  CHECK(v.as_group().exponents == std::vector<Rational>{3, -2});
  Place all = Place::hk_case4(5, 0, Place::Major::All);
  HaloValue w = hk_evaluate(classify_affine_point(all), f);
  CHECK(w.as_group().exponents == std::vector<Rational>{-1, -1});
}

TEST_CASE("Gauss point at the unit disc is the coefficient maximum") {
  Random rng(51);
  for (Prime p : {2UL, 3UL, 5UL}) {
    Place g = Place::gauss_point(p, 0, 0);
    for (int t = 0; t < 100; ++t) {
      Polynomial f = rng.integer_polynomial(8, 200);
      if (f.is_zero()) continue;
      long best = 1000;
      for (const auto& c : f.coeffs()) {
        if (sgn(c) != 0) best = std::min(best, ord(c, p));
      }
      HaloValue v = evaluate(g, RingElement::zx(f));
      CHECK(v.as_group().exponents == std::vector<Rational>{Rational(-best)});
    }
  }
}

TEST_CASE("analyticity") {
  auto verdict = [](const Place& pl) { return is_analytic(classify_affine_point(pl)).analytic; };
  CHECK(verdict(Place::hk_case4(3, 1, Place::Major::Cut, 3)));
  CHECK_FALSE(verdict(Place::hk_case4(3, 1, Place::Major::Empty)));
  CHECK_FALSE(verdict(Place::hk_case4(3, 1, Place::Major::All)));
  CHECK_FALSE(verdict(Place::arch_infinitesimal({0, 1})));
  CHECK_FALSE(verdict(Place::arch_infinity()));
  CHECK(verdict(Place::padic_eval(3, 1)));
  CHECK(verdict(Place::gauss_point(3, 1, 0)));
  CHECK(verdict(Place::arch_eval({0, 1})));
}

TEST_CASE("disc membership") {
  Disc closed{Rational(2), Rational(-3), Disc::Kind::Closed, std::nullopt};
  CHECK(disc_membership(classify_affine_point(Place::padic_eval(5, 2)), closed));
  Disc unit{0, Rational(1), Disc::Kind::Closed, std::nullopt};
  CHECK(disc_membership(classify_affine_point(Place::gauss_point(5, 0, 1)), unit));
  CHECK_FALSE(disc_membership(classify_affine_point(Place::gauss_point(5, 0, 1)), {0, Rational(1), Disc::Kind::Open, std::nullopt}));
  auto all = classify_affine_point(Place::hk_case4(5, 2, Place::Major::All));
  for (long r = -5; r <= 5; ++r) CHECK(disc_membership(all, {2, Rational(r), Disc::Kind::Open, std::nullopt}));
  auto empty = classify_affine_point(Place::hk_case4(5, 2, Place::Major::Empty));
  for (long r = -5; r <= 5; ++r) CHECK_FALSE(disc_membership(empty, {2, Rational(r), Disc::Kind::Closed, std::nullopt}));

  // Monotone in the radius.
  Random rng(52);
  auto g = classify_affine_point(Place::gauss_point(3, Rational(1, 3), 0));
  for (int t = 0; t < 100; ++t) {
    Disc d{rng.rational(9, 4), rng.rational(6, 2), rng.coin() ? Disc::Kind::Open : Disc::Kind::Closed, std::nullopt};
    Disc bigger = d;
    bigger.radius_exp += 1;
    if (disc_membership(g, d)) CHECK(disc_membership(g, bigger));
  }
}

TEST_CASE("lines over F_p") {
  CHECK(fp_line_classify(Place::fp_residual(2, FpPolynomial(2, {1, 1, 1}))).type == T::FpResidualPoint);
  Place px = Place::fp_padic(3, FpPolynomial(3, {0, 1}));
  CHECK(fp_line_classify(px).type == T::FpPAdicPoint);
  FpPolynomial q = FpPolynomial(3, {0, 0, 1}) * FpPolynomial(3, {1, 1});
  CHECK(evaluate(px, RingElement::fpx(q)).as_group().exponents == std::vector<Rational>{-2});
}

TEST_CASE("immediate points") {
  Place hk;
  for (const auto& pl : catalog_places()) {
    if (pl.kind == Place::Kind::HKImmediate) hk = pl;
  }
  REQUIRE(hk.kind == Place::Kind::HKImmediate);
  CHECK(hk_classify(classify_affine_point(hk)).case_number == 3);
  Random rng(53);
  for (int t = 0; t < 200; ++t) {
    RingElement f = RingElement::zx(rng.integer_polynomial(5, 9)), g = RingElement::zx(rng.integer_polynomial(5, 9));
    CHECK(evaluate(hk, f * g) == evaluate(hk, f) * evaluate(hk, g));
  }
  auto short_seq = std::make_shared<const DiscSequence>(std::vector<Disc>{{0, 0, Disc::Kind::Closed, std::nullopt}});
  Place shallow = Place::hk_immediate(7, short_seq);
  CHECK_THROWS_AS(evaluate(shallow, zx({0, 1})), Error);
}

TEST_CASE("boundedness") {
  auto b = boundedness_oracle(Place::arch_eval({1, 1}));
  CHECK((b.upper && b.lower));
  b = boundedness_oracle(Place::arch_infinitesimal({1, 1}));
  CHECK((b.upper && !b.lower));
  b = boundedness_oracle(Place::arch_infinity());
  CHECK((!b.upper && b.lower));

  Place e = Place::arch_eval({Rational(1, 3), Rational(2, 5)});
  Random rng(54);
  for (int t = 0; t < 50; ++t) {
    RingElement f = RingElement::zx(rng.polynomial_of_degree(static_cast<std::size_t>(rng.integer(0, 6)), 9));
    auto lambda = upper_bound_witness(e, f, Integer(1) << 40);
    REQUIRE(lambda);
    CHECK(evaluate(e, f) <= evaluate(e, RingElement::integer(*lambda)));
    auto mu = lower_bound_witness(e, f, 200);
    REQUIRE(mu);
    CHECK(evaluate(e, RingElement::rational(*mu)) <= evaluate(e, f));
  }
  CHECK_FALSE(upper_bound_witness(Place::arch_infinity(), zx({0, 1}), 1000));
}
