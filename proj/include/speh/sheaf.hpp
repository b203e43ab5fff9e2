#pragma once

#include <map>
#include <string>
#include <vector>

#include "speh/spectra.hpp"

namespace speh {

struct RingDescriptor {
  enum class Kind { LocalizedIntegers, PAdicIntegers, PAdicField, RealField, RationalField, FiniteField, ProductOf };
  Kind kind = Kind::RationalField;
  Integer m;
  Prime p = 0;
  std::vector<RingDescriptor> parts;

  static RingDescriptor localized(const Integer& m);
  static RingDescriptor padic_integers(Prime p);
  static RingDescriptor padic_field(Prime p);
  static RingDescriptor reals();
  static RingDescriptor rationals();
  static RingDescriptor finite_field(Prime p);
  /// Flattens nested products; a single factor is returned as is.
  static RingDescriptor product(std::vector<RingDescriptor> parts);

  /// Z[1/m] and Q carry the discrete topology.
  bool discrete() const { return kind == Kind::LocalizedIntegers || kind == Kind::RationalField; }
  std::string to_string() const;
  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// A truncated element of a completed ring.
///  - Z[1/m], Q: `exact`.
///  - Z_p: `residue` mod p^k.
///  - Q_p: p^val * residue with residue a unit mod p^k; zero is residue 0, k 0,
///    and val the absolute precision.
///  - R: dyadic interval [lo, hi] on the 2^-k grid.
///  - F_p: `residue` mod p.
///  - products: `parts`.
struct CompletedElement {
  RingDescriptor ring;
  Rational exact;
  Integer residue;
  long k = 0;
  long val = 0;
  Rational lo;
  Rational hi;
  std::vector<CompletedElement> parts;

  bool is_zero_padic() const { return ring.kind == RingDescriptor::Kind::PAdicField && residue == 0; }
  std::string to_string() const;
  friend bool operator==(const CompletedElement&, const CompletedElement&) = default;
};

RingDescriptor sections_on_domain(const RationalDomain& d);
RingDescriptor germ_at(const SpehPoint& x);

CompletedElement completion_map(const Rational& q, const RingDescriptor& target, long precision);
CompletedElement completed_add(const CompletedElement& x, const CompletedElement& y);
CompletedElement completed_mul(const CompletedElement& x, const CompletedElement& y);
/// True when the exact rational q is compatible with x at x's precision.
bool completed_contains(const CompletedElement& x, const Rational& q);

struct AdeleElement {
  std::map<Prime, CompletedElement> exceptional;
  CompletedElement real;
  std::string tail = "integral";

  std::string to_string() const;
  friend bool operator==(const AdeleElement&, const AdeleElement&) = default;
};

/// Components must be Q_p elements keyed by their prime, and a real interval.
AdeleElement adele_germ_assemble(std::map<Prime, CompletedElement> exceptional, CompletedElement real);
/// Diagonal image of q: exceptional primes are those dividing the denominator.
AdeleElement adele_diagonal(const Rational& q, long padic_precision, long real_bits);
AdeleElement adele_add(const AdeleElement& x, const AdeleElement& y);
AdeleElement adele_mul(const AdeleElement& x, const AdeleElement& y);

struct TinyBallReport {
  enum class Disjunct { LargeElement, DiscreteBall };
  Disjunct disjunct = Disjunct::LargeElement;
  /// u with |u| > 2 for LargeElement, a with |a| > 0 and B(0, |a|) = {0} otherwise.
  Rational witness;
  bool ring_topology = true;
};

TinyBallReport tiny_ball_report(const Place& place, unsigned long search_bound = 1000);

}  // namespace speh
