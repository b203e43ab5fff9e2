#include "speh/random.hpp"

namespace speh {

long Random::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

bool Random::coin(double p_true) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p_true; }

std::size_t Random::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

Rational Random::rational(long num_max, long den_max) {
  Rational q(integer(-num_max, num_max), integer(1, den_max));
  q.canonicalize();
  return q;
}

Rational Random::positive_rational(long num_max, long den_max) {
  Rational q(integer(1, num_max), integer(1, den_max));
  q.canonicalize();
  return q;
}

Polynomial Random::integer_polynomial(std::size_t max_degree, long coeff_max) {
  std::vector<Rational> c(index(max_degree + 1) + 1);
  for (auto& x : c) x = integer(-coeff_max, coeff_max);
  return Polynomial(std::move(c));
}

Polynomial Random::rational_polynomial(std::size_t max_degree, long num_max, long den_max) {
  std::vector<Rational> c(index(max_degree + 1) + 1);
  for (auto& x : c) x = rational(num_max, den_max);
  return Polynomial(std::move(c));
}

Polynomial Random::polynomial_of_degree(std::size_t degree, long coeff_max) {
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = integer(-coeff_max, coeff_max);
  while (c.back() == 0) c.back() = integer(-coeff_max, coeff_max);
  return Polynomial(std::move(c));
}

HaloValue Random::unit(const HaloDescriptor& h) {
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial: return HaloValue::one(h);
    case HaloDescriptor::Kind::Tropical: {
      std::vector<Rational> e(h.group.rank());
      for (auto& x : e) x = rational(6, 4);
      return HaloValue::group(h, std::move(e));
    }
    case HaloDescriptor::Kind::NonnegRationals: return HaloValue::rational(positive_rational(12, 8));
    case HaloDescriptor::Kind::NonnegSurds: {
      static const std::vector<long> radicands{1, 2, 3, 5, 6, 7, 10};
      std::vector<std::pair<Rational, Integer>> terms;
      std::size_t n = index(3) + 1;
      for (std::size_t i = 0; i < n; ++i) terms.emplace_back(positive_rational(6, 4), Integer(pick(radicands)));
      return HaloValue::surd(Surd::from_terms(terms));
    }
    case HaloDescriptor::Kind::Lex: return HaloValue::pair(h, unit(*h.first), unit(*h.second));
  }
  return HaloValue::zero(h);
}

HaloValue Random::value(const HaloDescriptor& h, double zero_rate) {
  if (coin(zero_rate)) return HaloValue::zero(h);
  return unit(h);
}

RingElement Random::element(RingKind ring, Prime p) {
  switch (ring) {
    case RingKind::Z: return RingElement::integer(integer(-1000, 1000));
    case RingKind::Q: return RingElement::rational(rational(1000, 200));
    case RingKind::ZX: return RingElement::zx(integer_polynomial(6, 20));
    case RingKind::QX: return RingElement::qx(rational_polynomial(5, 20, 12));
    case RingKind::FpX: {
      std::vector<unsigned long> c(index(7) + 1);
      for (auto& x : c) x = static_cast<unsigned long>(integer(0, static_cast<long>(p) - 1));
      return RingElement::fpx(FpPolynomial(p, c));
    }
    case RingKind::QXFrac: {
      Polynomial den = rational_polynomial(3, 10, 6);
      while (den.is_zero()) den = rational_polynomial(3, 10, 6);
      return RingElement::fraction(rational_polynomial(4, 10, 6), den);
    }
  }
  return {};
}

Place Random::place() {
  static const std::vector<Prime> primes{2, 3, 5, 7, 11, 13};
  Prime p = pick(primes);
  switch (index(16)) {
    case 0: return Place::trivial(coin() ? RingKind::Z : RingKind::ZX);
    case 1: return Place::padic_trop(p);
    case 2: return Place::padic_real(p);
    case 3: return Place::archimedean();
    case 4: return Place::residual(p);
    case 5: return Place::composite_adic(integer(2, 10) * 2);
    case 6: return Place::composite_residual(integer(2, 10) * 3);
    case 7: return Place::fp_residual(p, FpPolynomial(p, {0, 1}));
    case 8: return Place::fp_padic(p, FpPolynomial(p, {static_cast<unsigned long>(integer(0, static_cast<long>(p) - 1)), 1}));
    case 9: return Place::gauss_point(p, rational(20, 9), rational(6, 3));
    case 10: {
      std::vector<Disc> discs;
      Rational c = 0;
      for (long i = 0; i < 4; ++i) {
        discs.push_back({c, Rational(-i), coin() ? Disc::Kind::Closed : Disc::Kind::Open, std::nullopt});
        c += Rational(integer(0, static_cast<long>(p) - 1)) * rpow(Rational(p), i);
      }
      return Place::hk_immediate(p, std::make_shared<const DiscSequence>(std::move(discs)));
    }
    case 11: {
      Rational c = rational(20, 9);
      switch (index(3)) {
        case 0: return Place::hk_case4(p, c, Place::Major::Empty);
        case 1: return Place::hk_case4(p, c, Place::Major::All);
        default: return Place::hk_case4(p, c, Place::Major::Cut, rpow(Rational(p), integer(-3, 3)));
      }
    }
    case 12: return Place::arch_eval({rational(9, 5), rational(9, 5)});
    case 13: return coin() ? Place::arch_infinitesimal({rational(9, 5), rational(9, 5)}) : Place::arch_infinity();
    case 14: return coin() ? Place::padic_eval(p, rational(20, 9)) : Place::padic_power(p, positive_rational(9, 4));
    default: return Place::retracted(Place::arch_infinitesimal({rational(9, 5), rational(9, 5)}));
  }
}

RationalDomain Random::z_domain() {
  RationalDomain d;
  std::size_t n = index(3);
  for (std::size_t i = 0; i < n; ++i) d.numerators.push_back(RingElement::integer(integer(-60, 60)));
  d.den = RingElement::integer(integer(1, 60));
  d.strict = coin(0.7);
  return d;
}

std::vector<HaloDescriptor> catalog_halos() {
  auto trop1 = HaloDescriptor::tropical(std::vector<std::string>{"t"});
  auto trop2 = HaloDescriptor::tropical(std::vector<std::string>{"s", "t"});
  auto q = HaloDescriptor::rationals();
  auto s = HaloDescriptor::surds();
  auto triv = HaloDescriptor::trivial();
  return {
      triv,
      trop1,
      trop2,
      q,
      s,
      HaloDescriptor::lex(trop1, q),
      HaloDescriptor::lex(HaloDescriptor::tropical(std::vector<std::string>{"1/q"}), s),
      HaloDescriptor::lex(trop1, trop2),
      HaloDescriptor::lex(q, q),
      HaloDescriptor::lex(s, trop1),
      HaloDescriptor::lex(triv, q),
      HaloDescriptor::lex(HaloDescriptor::lex(trop1, trop2), s),
      HaloDescriptor::lex(HaloDescriptor::lex(q, s), trop1),
  };
}

std::vector<Place> catalog_places() {
  // Closed discs around truncations of sum_k 7^(k!), a 7-adic limit outside Q.
  std::vector<Disc> discs;
  for (long i = 1; i <= 24; ++i) {
    Integer c = 0;
    for (unsigned long k = 1, f = 1; f < static_cast<unsigned long>(i); f *= ++k) c += ipow(Integer(7), f);
    discs.push_back({Rational(c), Rational(-i), Disc::Kind::Closed, std::nullopt});
  }
  auto seq = std::make_shared<const DiscSequence>(std::move(discs));
  return {
      Place::trivial(RingKind::Z),
      Place::trivial(RingKind::ZX),
      Place::padic_trop(2),
      Place::padic_trop(5),
      Place::padic_real(2),
      Place::padic_real(3),
      Place::padic_real(7),
      Place::archimedean(),
      Place::residual(2),
      Place::residual(5),
      Place::composite_adic(6),
      Place::composite_adic(12),
      Place::composite_residual(6),
      Place::fp_residual(2, FpPolynomial(2, {1, 1, 1})),
      Place::fp_residual(3, FpPolynomial(3, {1, 1})),
      Place::fp_padic(3, FpPolynomial(3, {0, 1})),
      Place::fp_padic(2, FpPolynomial(2, {1, 1, 1})),
      Place::gauss_point(2, 0, 0),
      Place::gauss_point(3, Rational(1, 2), -1),
      Place::gauss_point(5, 0, Rational(1, 2)),
      Place::hk_immediate(7, seq),
      Place::hk_case4(3, 0, Place::Major::Empty),
      Place::hk_case4(3, Rational(1, 2), Place::Major::All),
      Place::hk_case4(5, 1, Place::Major::Cut, Rational(1, 25)),
      Place::padic_eval(3, Rational(2, 5)),
      Place::padic_power(5, Rational(1, 2)),
      Place::arch_eval({Rational(1, 3), Rational(2, 5)}),
      Place::arch_eval({Rational(-1, 2), 0}),
      Place::arch_infinitesimal({Rational(1, 3), Rational(2, 5)}),
      Place::arch_infinitesimal({0, 0}),
      Place::arch_infinity(),
      Place::retracted(Place::arch_infinitesimal({Rational(1, 3), Rational(2, 5)})),
  };
}

}  // namespace speh
