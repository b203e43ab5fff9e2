#pragma once

#include <vector>

#include "speh/checks.hpp"

namespace speh {

/// A point of a harmonious spectrum, represented by a canonical place.
struct SpehPoint {
  Place place;

  friend bool operator==(const SpehPoint& a, const SpehPoint& b) { return equivalent_oracle(a.place, b.place); }
};

/// Trivial, archimedean, then PAdicReal(p) and Residual(p) for ascending p.
std::vector<SpehPoint> speh_points_of_Z(unsigned long prime_bound);

/// R(a_1, ..., a_n / b). An empty numerator list reads as the single numerator 0,
/// i.e. the domain {0 < |b|}.
struct RationalDomain {
  RingKind ring = RingKind::Z;
  std::vector<RingElement> numerators;
  RingElement den = RingElement::integer(1);
  bool strict = true;
  /// Irreducible factors of a polynomial denominator, with multiplicity.
  std::vector<RingElement> den_factors;
};

bool domain_membership(const Place& x, const RationalDomain& d);
inline bool domain_membership(const SpehPoint& x, const RationalDomain& d) { return domain_membership(x.place, d); }

/// R(f k, g h / h k) for R(f / h) and R(g / k).
RationalDomain domain_intersection(const RationalDomain& r1, const RationalDomain& r2);

/// Spev = points with |2| <= 1.
bool spev_subset_check(const SpehPoint& x);

struct BerkovichPoint {
  enum class Kind { PPower, ArchPower, ResidualPt };
  Kind kind = Kind::PPower;
  Prime p = 0;
  Rational t;
};

SpehPoint berkovich_to_speh(const BerkovichPoint& b);
/// A concrete seminorm realizing the Berkovich point, for sampling.
Place berkovich_place(const BerkovichPoint& b);

}  // namespace speh
