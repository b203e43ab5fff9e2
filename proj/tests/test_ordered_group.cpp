#include <doctest.h>

#include "speh/random.hpp"

using namespace speh;

namespace {

GroupElement el(const GroupDescriptor& g, std::vector<Rational> e) { return GroupElement(g, std::move(e)); }

}  // namespace

TEST_CASE("lex comparison") {
  GroupDescriptor g2({"a", "b"});
  CHECK(group_cmp(el(g2, {1, 0}), el(g2, {0, 5})) > 0);
  CHECK(group_cmp(el(g2, {0, 0}), el(g2, {0, 0})) == 0);
  CHECK(group_cmp(el(g2, {Rational(1, 2), -3}), el(g2, {Rational(1, 2), -2})) < 0);
  CHECK_THROWS_AS(group_cmp(el(g2, {1, 0}), el(GroupDescriptor({"c"}), {1})), Error);
}

TEST_CASE("generated convex subgroups") {
  GroupDescriptor g3({"a", "b", "c"});
  CHECK(convex_subgroup_generated(el(g3, {0, 1, 0})).cut_index == 1);
  CHECK(convex_subgroup_generated(el(g3, {0, 0, 5})).cut_index == 2);
  CHECK(convex_subgroup_generated(el(GroupDescriptor({"a", "b"}), {1, 0})).cut_index == 0);
  CHECK_THROWS_AS(convex_subgroup_generated(GroupElement::identity(g3)), Error);
}

TEST_CASE("generated subgroups are convex and minimal") {
  GroupDescriptor g3({"a", "b", "c"});
  Random rng(11);
  auto draw = [&] {
    std::vector<Rational> e(3);
    for (auto& x : e) x = rng.coin(0.4) ? Rational(0) : rng.rational(4, 3);
    return GroupElement(g3, e);
  };
  for (int t = 0; t < 2000; ++t) {
    GroupElement g = draw(), a = draw(), b = draw(), h = draw();
    if (g.is_identity()) continue;
    ConvexSubgroup H = convex_subgroup_generated(g);
    REQUIRE(H.contains(g));
    if (H.contains(a) && H.contains(b) && group_cmp(a, h) < 0 && group_cmp(h, b) < 0) CHECK(H.contains(h));
    if (H.cut_index + 1 <= 3) {
      ConvexSubgroup smaller{g3, H.cut_index + 1};
      CHECK_FALSE(smaller.contains(g));
    }
  }
}

TEST_CASE("quotients truncate") {
  GroupDescriptor g2({"a", "b"});
  auto q = quotient_by_convex(g2, {g2, 1});
  CHECK(q.project(el(g2, {3, 7})).exponents == std::vector<Rational>{3});
  CHECK(quotient_by_convex(g2, {g2, 0}).target.rank() == 0);
  CHECK(quotient_by_convex(g2, {g2, 2}).project(el(g2, {3, 7})) == el(g2, {3, 7}));

  Random rng(12);
  for (int t = 0; t < 500; ++t) {
    GroupElement a = el(g2, {rng.rational(5, 3), rng.rational(5, 3)}), b = el(g2, {rng.rational(5, 3), rng.rational(5, 3)});
    CHECK(q.project(group_mul(a, b)) == group_mul(q.project(a), q.project(b)));
    if (group_cmp(a, b) <= 0) CHECK(group_cmp(q.project(a), q.project(b)) <= 0);
  }
}

TEST_CASE("huber delta") {
  GroupDescriptor g1({"t"}), g2({"log", "1/q"});
  CHECK(huber_delta(g2, GroupElement::identity(g2)).is_trivial());
  CHECK(huber_delta(g2, el(g2, {-1, 0})).is_trivial());
  CHECK(huber_delta(g1, el(g1, {1})).is_trivial());
  ConvexSubgroup d = huber_delta(g2, el(g2, {1, 0}));
  CHECK(d.cut_index == 1);

  // Squeezing condition max(1,|2|)^-1 <= gamma^n <= max(1,|2|), n = 1..100.
  GroupElement two = el(g2, {1, 0});
  auto squeezed = [&](const GroupElement& gamma) {
    for (int n = 1; n <= 100; ++n) {
      GroupElement gn = group_pow(gamma, n);
      if (group_cmp(group_inv(two), gn) > 0 || group_cmp(gn, two) > 0) return false;
    }
    return true;
  };
  Random rng(13);
  for (int t = 0; t < 200; ++t) {
    GroupElement inside = el(g2, {0, rng.rational(50, 3)});
    CHECK(d.contains(inside));
    CHECK(squeezed(inside));
  }
  CHECK_FALSE(squeezed(el(g2, {1, 0})));
  CHECK_FALSE(squeezed(el(g2, {Rational(1, 50), 0})));
}
