#include <doctest.h>

#include "speh/random.hpp"

using namespace speh;

namespace {

RingElement Z(long n) { return RingElement::integer(n); }

RationalDomain dom(std::vector<long> nums, long den, bool strict = true) {
  RationalDomain d;
  for (long n : nums) d.numerators.push_back(Z(n));
  d.den = Z(den);
  d.strict = strict;
  return d;
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(speh_points_of_Z(10).size() == 10);
  CHECK(speh_points_of_Z(2).size() == 4);
  auto pts = speh_points_of_Z(50);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK((pts[i] == pts[j]) == (i == j));
  }
}

TEST_CASE("membership examples") {
  for (Prime p : {2UL, 3UL, 5UL}) {
    CHECK(domain_membership(Place::padic_real(p), dom({static_cast<long>(p)}, 1)));
    CHECK_FALSE(domain_membership(Place::residual(p), dom({}, static_cast<long>(p))));
  }
  for (long m : {1L, 2L, 6L, 30L, -7L}) CHECK(domain_membership(Place::trivial(RingKind::Z), dom({}, m)));
  // Non-strict variant |a| <= |b| != 0.
  CHECK(domain_membership(Place::padic_real(3), dom({1}, 2, false)));
  CHECK_FALSE(domain_membership(Place::padic_real(3), dom({1}, 2, true)));
  CHECK_FALSE(domain_membership(Place::residual(2), dom({0}, 2, false)));
}

TEST_CASE("divisor condition on non-multiplicative places") {
  // |6|_{6,0} = 0 while the divisors 2 and 3 of 6 fail multiplicativity.
  CHECK_FALSE(domain_membership(Place::composite_residual(6), dom({}, 6)));
  CHECK(domain_membership(Place::composite_residual(6), dom({}, 5)));
  CHECK_FALSE(domain_membership(Place::composite_adic(6), dom({}, 12)));
  CHECK(domain_membership(Place::composite_adic(6), dom({}, 7)));
}

TEST_CASE("polynomial denominators need factors") {
  RationalDomain d;
  d.ring = RingKind::ZX;
  d.den = RingElement::zx(Polynomial({-2, 0, 1}));
  CHECK(domain_membership(Place::arch_eval({0, 1}), d));

  // Coefficient sup-norm: not multiplicative, so divisors of b must be enumerated.
  ExternalSpec spec;
  spec.name = "coefficient_sup";
  spec.ring = RingKind::ZX;
  spec.codomain = HaloDescriptor::rationals();
  spec.evaluate = [](const RingElement& e) {
    Rational m = 0;
    for (const auto& c : e.num().coeffs()) m = std::max(m, Rational(abs(c)));
    return sgn(m) == 0 ? HaloValue::zero(HaloDescriptor::rationals()) : HaloValue::rational(m);
  };
  Place sup = Place::external_place(spec);
  CHECK_THROWS_AS(domain_membership(sup, d), Error);
  d.den_factors = {d.den};
  CHECK_NOTHROW(domain_membership(sup, d));
}

TEST_CASE("intersections") {
  auto pts = speh_points_of_Z(50);
  Random rng(61);
  for (int t = 0; t < 200; ++t) {
    RationalDomain a = rng.z_domain(), b = rng.z_domain();
    b.strict = a.strict;
    RationalDomain both = domain_intersection(a, b);
    for (const auto& x : pts) {
      CHECK(domain_membership(x, both) == (domain_membership(x, a) && domain_membership(x, b)));
    }
    RationalDomain self = domain_intersection(a, a);
    RationalDomain full = domain_intersection(a, dom({}, 1, a.strict));
    for (const auto& x : pts) {
      CHECK(domain_membership(x, self) == domain_membership(x, a));
      CHECK(domain_membership(x, full) == domain_membership(x, a));
    }
  }
}

TEST_CASE("Spev") {
  for (const auto& x : speh_points_of_Z(50)) CHECK(spev_subset_check(x) == is_nonarchimedean(x.place));
  CHECK_FALSE(spev_subset_check(SpehPoint{Place::archimedean()}));
}

TEST_CASE("Berkovich points") {
  using K = BerkovichPoint::Kind;
  CHECK(berkovich_to_speh({K::PPower, 3, Rational(1, 2)}) == SpehPoint{Place::padic_real(3)});
  CHECK(berkovich_to_speh({K::ArchPower, 0, 1}) == SpehPoint{Place::archimedean()});
  CHECK(berkovich_to_speh({K::PPower, 5, 0}) == SpehPoint{Place::trivial(RingKind::Z)});
  CHECK(berkovich_to_speh({K::ArchPower, 0, 0}) == SpehPoint{Place::trivial(RingKind::Z)});
  CHECK(berkovich_to_speh({K::ResidualPt, 7, 0}) == SpehPoint{Place::residual(7)});
  CHECK_THROWS_AS(berkovich_to_speh({K::ArchPower, 0, 2}), Error);
  CHECK_THROWS_AS(berkovich_to_speh({K::PPower, 2, -1}), Error);

  // Every enumerated point is hit.
  for (const auto& x : speh_points_of_Z(30)) {
    bool hit = x == berkovich_to_speh({K::PPower, 2, 0}) || x == berkovich_to_speh({K::ArchPower, 0, 1});
    for (Prime p : primes_up_to(30)) {
      hit = hit || x == berkovich_to_speh({K::PPower, p, 1}) || x == berkovich_to_speh({K::ResidualPt, p, 0});
    }
    CHECK(hit);
  }

  // |.|_3^(1/2) and |.|_3 bound each other multiplicatively.
  Random rng(62);
  std::vector<ElementTriple> triples;
  for (int i = 0; i < 2000; ++i) triples.push_back({Z(rng.integer(-300, 300)), Z(rng.integer(-300, 300)), Z(rng.integer(-300, 300))});
  Place half = berkovich_place({K::PPower, 3, Rational(1, 2)});
  CHECK(mult_bounded_by(half, Place::padic_real(3), triples).ok);
  CHECK(mult_bounded_by(Place::padic_real(3), half, triples).ok);
}
