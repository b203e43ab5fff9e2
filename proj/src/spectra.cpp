#include "speh/spectra.hpp"

namespace speh {

std::vector<SpehPoint> speh_points_of_Z(unsigned long prime_bound) {
  if (prime_bound < 2) throw Error(ErrorCode::InvalidArgument, "prime bound must be at least 2");
  std::vector<SpehPoint> points{{Place::trivial(RingKind::Z)}, {Place::archimedean()}};
  for (Prime p : primes_up_to(prime_bound)) {
    points.push_back({Place::padic_real(p)});
    points.push_back({Place::residual(p)});
  }
  return points;
}

namespace {

bool le(const HaloValue& x, const HaloValue& y) { return halo_cmp(x.halo(), x, y) != std::strong_ordering::greater; }

const std::vector<RingElement>& sample_multipliers() {
  static const std::vector<RingElement> sample = [] {
    std::vector<RingElement> v;
    for (long n = -30; n <= 30; ++n) {
      if (n != 0) v.push_back(RingElement::integer(n));
    }
    return v;
  }();
  return sample;
}

bool divisor_multiplicative(const Place& x, const RingElement& d) {
  using K = Place::Kind;
  if (x.kind == K::CompositeAdic || x.kind == K::CompositeResidual) {
    Integer n = abs(d.as_integer());
    const Integer& m = x.m;
    if (x.kind == K::CompositeResidual) return n % m == 0 || gcd(n, m) == 1;
    while (n % m == 0) n /= m;
    return gcd(n, m) == 1;
  }
  // Sampled check for places outside the catalog.
  HaloValue vd = evaluate(x, d);
  for (const auto& y : sample_multipliers()) {
    if (!(evaluate(x, d * y) == vd * evaluate(x, y))) return false;
  }
  return true;
}

std::vector<RingElement> divisors_of(const RationalDomain& d) {
  std::vector<RingElement> out;
  if (d.den.ring() == RingKind::Z) {
    for (const auto& k : divisors(d.den.as_integer())) out.push_back(RingElement::integer(k));
    return out;
  }
  if (d.den_factors.empty()) {
    throw Error(ErrorCode::FactorizationRequired, "denominator " + d.den.to_string() + " needs a factor list");
  }
  // Products over sub-multisets of the factor list.
  out.push_back(RingElement::integer(1));
  for (const auto& f : d.den_factors) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * f);
  }
  return out;
}

}  // namespace

bool domain_membership(const Place& x, const RationalDomain& d) {
  if (d.den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational domain with zero denominator");
  HaloValue b = evaluate(x, d.den);
  if (b.is_zero()) return false;
  std::vector<RingElement> nums = d.numerators;
  if (nums.empty()) nums.push_back(RingElement::integer(0));
  for (const auto& a : nums) {
    HaloValue va = evaluate(x, a);
    bool ok = d.strict ? halo_cmp(b.halo(), va, b) == std::strong_ordering::less : le(va, b);
    if (!ok) return false;
  }
  if (x.is_multiplicative()) return true;
  for (const auto& div : divisors_of(d)) {
    if (!divisor_multiplicative(x, div)) return false;
  }
  return true;
}

RationalDomain domain_intersection(const RationalDomain& r1, const RationalDomain& r2) {
  if (r1.strict != r2.strict) throw Error(ErrorCode::DomainMismatch, "intersecting domains of different topologies");
  auto nums = [](const RationalDomain& r) {
    return r.numerators.empty() ? std::vector<RingElement>{RingElement::integer(0)} : r.numerators;
  };
  RationalDomain out;
  out.ring = r1.ring == r2.ring ? r1.ring : common_ring(r1.den, r2.den);
  out.strict = r1.strict;
  out.den = r1.den * r2.den;
  for (const auto& f : nums(r1)) out.numerators.push_back(f * r2.den);
  for (const auto& g : nums(r2)) out.numerators.push_back(g * r1.den);
  if (!r1.den_factors.empty() || !r2.den_factors.empty()) {
    out.den_factors = r1.den_factors;
    out.den_factors.insert(out.den_factors.end(), r2.den_factors.begin(), r2.den_factors.end());
  }
  return out;
}

bool spev_subset_check(const SpehPoint& x) { return x.place.is_multiplicative() && is_nonarchimedean(x.place); }

SpehPoint berkovich_to_speh(const BerkovichPoint& b) {
  switch (b.kind) {
    case BerkovichPoint::Kind::PPower:
      if (sgn(b.t) < 0) throw Error(ErrorCode::RangeError, "p-adic power must be >= 0");
      if (sgn(b.t) == 0) return {Place::trivial(RingKind::Z)};
      return {Place::padic_real(b.p)};
    case BerkovichPoint::Kind::ArchPower:
      if (sgn(b.t) < 0 || b.t > 1) throw Error(ErrorCode::RangeError, "archimedean power must lie in [0, 1]");
      if (sgn(b.t) == 0) return {Place::trivial(RingKind::Z)};
      return {Place::archimedean()};
    case BerkovichPoint::Kind::ResidualPt: return {Place::residual(b.p)};
  }
  throw Error(ErrorCode::RangeError, "unknown Berkovich point");
}

Place berkovich_place(const BerkovichPoint& b) {
  switch (b.kind) {
    case BerkovichPoint::Kind::PPower: return Place::padic_power(b.p, b.t);
    case BerkovichPoint::Kind::ResidualPt: return Place::residual(b.p);
    case BerkovichPoint::Kind::ArchPower:
      // |n|^t is irrational in general; t = 1 and t = 0 are the representable cases.
      if (b.t == 1) return Place::archimedean();
      if (sgn(b.t) == 0) return Place::trivial(RingKind::Z);
      break;
  }
  throw Error(ErrorCode::NotRepresentable, "archimedean power with 0 < t < 1");
}

}  // namespace speh
