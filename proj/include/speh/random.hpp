#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "speh/spectra.hpp"

namespace speh {

/// Seeded generator of library objects. Draws depend only on the seed and
/// the sequence of calls.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi);
  bool coin(double p_true = 0.5);
  std::size_t index(std::size_t n);
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[index(v.size())];
  }

  /// num in [-num_max, num_max], den in [1, den_max].
  Rational rational(long num_max, long den_max);
  Rational positive_rational(long num_max, long den_max);
  Polynomial integer_polynomial(std::size_t max_degree, long coeff_max);
  Polynomial rational_polynomial(std::size_t max_degree, long num_max, long den_max);
  /// Nonzero polynomial of degree exactly `degree`.
  Polynomial polynomial_of_degree(std::size_t degree, long coeff_max);

  /// Random value of a halo; zero with probability zero_rate.
  HaloValue value(const HaloDescriptor& h, double zero_rate = 0.1);
  HaloValue unit(const HaloDescriptor& h);

  RingElement element(RingKind ring, Prime p = 2);
  /// Random catalog place with a JSON form.
  Place place();
  /// Domain over Z with up to two numerators in [-60, 60] and denominator in [1, 60].
  RationalDomain z_domain();

 private:
  std::mt19937_64 engine_;
};

/// Representative halo descriptors covering every constructor.
std::vector<HaloDescriptor> catalog_halos();

/// Representative places of every catalog kind except External.
std::vector<Place> catalog_places();

}  // namespace speh
