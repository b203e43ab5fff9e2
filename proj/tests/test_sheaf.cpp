#include <doctest.h>

#include "speh/random.hpp"
#include "speh/sheaf.hpp"

using namespace speh;

namespace {

using RD = RingDescriptor;

RationalDomain dom(std::vector<long> nums, long den) {
  RationalDomain d;
  for (long n : nums) d.numerators.push_back(RingElement::integer(n));
  d.den = RingElement::integer(den);
  return d;
}

CompletedElement real(Rational lo, Rational hi) {
  CompletedElement e;
  e.ring = RD::reals();
  e.lo = lo;
  e.hi = hi;
  e.k = 2;
  return e;
}

}  // namespace

TEST_CASE("sections on the canonical shapes") {
  CHECK(sections_on_domain(dom({}, 6)) == RD::localized(6));
  CHECK(sections_on_domain(dom({}, 1)) == RD::localized(1));
  CHECK(sections_on_domain(dom({2}, 1)) == RD::padic_integers(2));
  CHECK(sections_on_domain(dom({3}, 1)) == RD::padic_integers(3));
  CHECK(sections_on_domain(dom({1}, 2)) == RD::reals());
  // {0 < |p|, |p| < 1}: numerators p^2 over p.
  CHECK(sections_on_domain(dom({25}, 5)) == RD::padic_field(5));
  CHECK(RD::localized(6).discrete());
  CHECK_FALSE(RD::padic_integers(2).discrete());
}

TEST_CASE("disjoint unions give products") {
  // |6| < 1 is {|2| < 1} union {|3| < 1}.
  RD r = sections_on_domain(dom({6}, 1));
  CHECK(r == RD::product({RD::padic_integers(2), RD::padic_integers(3)}));
  CHECK(RD::product({RD::product({RD::reals(), RD::padic_field(2)}), RD::padic_field(3)}).parts.size() == 3);
}

TEST_CASE("germs") {
  CHECK(germ_at(SpehPoint{Place::residual(3)}) == RD::padic_integers(3));
  CHECK(germ_at(SpehPoint{Place::padic_real(3)}) == RD::padic_field(3));
  CHECK(germ_at(SpehPoint{Place::archimedean()}) == RD::reals());
  CHECK(germ_at(SpehPoint{Place::trivial(RingKind::Z)}) == RD::rationals());
}

TEST_CASE("completion examples") {
  CompletedElement third = completion_map(Rational(1, 3), RD::padic_integers(2), 4);
  CHECK(third.residue == 11);
  CHECK(third.k == 4);
  CompletedElement half = completion_map(Rational(1, 2), RD::padic_field(2), 3);
  CHECK(half.val == -1);
  CHECK(half.residue == 1);
  CHECK_THROWS_AS(completion_map(5, RD::finite_field(5), 1), Error);
  CHECK_THROWS_AS(completion_map(Rational(1, 2), RD::padic_integers(2), 4), Error);
}

TEST_CASE("completed arithmetic") {
  auto z2 = RD::padic_integers(2);
  CompletedElement one = completion_map(1, z2, 3), seven = completion_map(7, z2, 3);
  CHECK(completed_add(one, seven).residue == 0);
  CHECK(completed_add(completion_map(1, z2, 4), completion_map(1, z2, 2)).k == 2);
  CompletedElement prod = completed_mul(real(Rational(5, 4), Rational(3, 2)), real(2, 2));
  CHECK(prod.lo <= Rational(5, 2));
  CHECK(prod.hi >= 3);
  CHECK(prod.hi - prod.lo <= Rational(3, 4));
  CHECK_THROWS_AS(completed_add(one, completion_map(1, RD::padic_integers(3), 3)), Error);
}

TEST_CASE("completion is a ring map") {
  Random rng(71);
  for (Prime p : {2UL, 3UL, 5UL}) {
    for (auto target : {RD::padic_integers(p), RD::padic_field(p)}) {
      for (int t = 0; t < 300; ++t) {
        Rational a = rng.rational(5000, 300), b = rng.rational(5000, 300);
        if (target.kind == RD::Kind::PAdicIntegers && (a.get_den() % p == 0 || b.get_den() % p == 0)) continue;
        auto ca = completion_map(a, target, 8), cb = completion_map(b, target, 8);
        CHECK(completed_contains(completed_add(ca, cb), a + b));
        CHECK(completed_contains(completed_mul(ca, cb), a * b));
        if (target.kind == RD::Kind::PAdicIntegers) {
          CHECK(completed_add(ca, cb) == completion_map(a + b, target, 8));
          CHECK(completed_mul(ca, cb) == completion_map(a * b, target, 8));
        }
      }
    }
  }
}

TEST_CASE("real intervals are conservative") {
  Random rng(72);
  for (int t = 0; t < 300; ++t) {
    Rational a = rng.rational(1000, 97), b = rng.rational(1000, 89);
    auto ca = completion_map(a, RD::reals(), 20), cb = completion_map(b, RD::reals(), 20);
    CHECK(completed_contains(ca, a));
    CHECK(completed_contains(completed_add(ca, cb), a + b));
    CHECK(completed_contains(completed_mul(ca, cb), a * b));
  }
}

TEST_CASE("adeles") {
  AdeleElement sixth = adele_diagonal(Rational(1, 6), 6, 20);
  std::vector<Prime> primes;
  for (const auto& [p, e] : sixth.exceptional) primes.push_back(p);
  CHECK(primes == std::vector<Prime>{2, 3});
  CHECK(sixth.tail == "integral");

  std::map<Prime, CompletedElement> ex{{2, completion_map(Rational(1, 2), RD::padic_field(2), 4)}};
  AdeleElement a = adele_germ_assemble(ex, real(Rational(1, 2), Rational(1, 2)));
  CHECK(a.exceptional.size() == 1);

  Random rng(73);
  for (int t = 0; t < 100; ++t) {
    Rational x = rng.rational(300, 60), y = rng.rational(300, 60);
    AdeleElement ax = adele_diagonal(x, 8, 30), ay = adele_diagonal(y, 8, 30);
    AdeleElement s = adele_add(ax, ay), m = adele_mul(ax, ay);
    CHECK(s.tail == "integral");
    for (const auto& [p, e] : s.exceptional) CHECK(completed_contains(e, x + y));
    for (const auto& [p, e] : m.exceptional) CHECK(completed_contains(e, x * y));
    CHECK(completed_contains(s.real, x + y));
    CHECK(completed_contains(m.real, x * y));
  }
}

TEST_CASE("tiny balls") {
  auto padic = tiny_ball_report(Place::padic_real(3));
  CHECK(padic.disjunct == TinyBallReport::Disjunct::LargeElement);
  CHECK(padic.witness == Rational(1, 3));
  auto arch = tiny_ball_report(Place::archimedean());
  CHECK(arch.witness == 3);
  auto triv = tiny_ball_report(Place::trivial(RingKind::FpX));
  CHECK(triv.disjunct == TinyBallReport::Disjunct::DiscreteBall);
  CHECK(triv.ring_topology);
  CHECK_THROWS_AS(tiny_ball_report(Place::composite_adic(6)), Error);
}
