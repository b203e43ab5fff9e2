#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speh/place.hpp"

namespace speh {

struct CheckResult {
  bool ok = true;
  /// The offending elements, in the order the property names them.
  std::vector<RingElement> counterexample;
  std::string detail;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<RingElement> elems, std::string detail);
  explicit operator bool() const { return ok; }
};

using ElementPair = std::pair<RingElement, RingElement>;
using ElementTriple = std::vector<RingElement>;

CheckResult check_multiplicative_on(const Place& place, const std::vector<ElementPair>& pairs);
CheckResult check_power_multiplicative_on(const Place& place, const std::vector<RingElement>& elems, unsigned long n_max);
CheckResult check_ultrametric_on(const Place& place, const std::vector<ElementPair>& pairs);
CheckResult check_prearchimedean_on(const Place& place, const std::vector<ElementPair>& pairs);
CheckResult check_subadditive_on(const Place& place, const std::vector<ElementPair>& pairs);
CheckResult check_submultiplicative_on(const Place& place, const std::vector<ElementPair>& pairs);
/// |a|_2 |c|_2 <= |b|_2 implies |a|_1 |c|_1 <= |b|_1, over (a, b, c) triples.
CheckResult mult_bounded_by(const Place& place1, const Place& place2, const std::vector<ElementTriple>& triples);
CheckResult negation_symmetry_check(const Place& place, const std::vector<RingElement>& elems);

/// |2| <= 1.
bool is_nonarchimedean(const Place& place);

/// Table-driven equivalence of catalog places.
bool equivalent_oracle(const Place& a, const Place& b);

struct ZClass {
  enum class Tag { Trivial, PAdic, Residual, Archimedean };
  Tag tag = Tag::Trivial;
  Prime p = 0;

  std::string to_string() const;
  friend bool operator==(const ZClass&, const ZClass&) = default;
};

inline constexpr unsigned long kDefaultPrimeBound = 10000;

/// Mirrors the classification proof: kernel, then |2|, then a prime search.
ZClass classify_on_Z(const Place& place, unsigned long prime_bound = kDefaultPrimeBound);

/// The induced place on Z for a polynomial-ring place; Z-places map to themselves.
Place restrict_to_Z(const Place& place);

}  // namespace speh
