#include "speh/checks.hpp"

namespace speh {

CheckResult CheckResult::fail(std::vector<RingElement> elems, std::string detail) {
  CheckResult r;
  r.ok = false;
  r.counterexample = std::move(elems);
  r.detail = std::move(detail);
  return r;
}

namespace {

bool le(const HaloValue& x, const HaloValue& y) { return halo_cmp(x.halo(), x, y) != std::strong_ordering::greater; }

HaloValue hmax(const HaloValue& x, const HaloValue& y) { return le(x, y) ? y : x; }

}  // namespace

CheckResult check_multiplicative_on(const Place& place, const std::vector<ElementPair>& pairs) {
  for (const auto& [a, b] : pairs) {
    HaloValue lhs = evaluate(place, a * b);
    HaloValue rhs = evaluate(place, a) * evaluate(place, b);
    if (!(lhs == rhs)) {
      return CheckResult::fail({a, b}, "|ab| = " + lhs.to_string() + " but |a||b| = " + rhs.to_string());
    }
  }
  return CheckResult::pass();
}

CheckResult check_power_multiplicative_on(const Place& place, const std::vector<RingElement>& elems,
                                          unsigned long n_max) {
  for (const auto& a : elems) {
    HaloValue va = evaluate(place, a);
    RingElement power = a;
    for (unsigned long n = 2; n <= n_max; ++n) {
      power = power * a;
      HaloValue lhs = evaluate(place, power);
      HaloValue rhs = halo_pow(va, n);
      if (!(lhs == rhs)) {
        return CheckResult::fail({a}, "|a^" + std::to_string(n) + "| = " + lhs.to_string() + " but |a|^" +
                                          std::to_string(n) + " = " + rhs.to_string());
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_ultrametric_on(const Place& place, const std::vector<ElementPair>& pairs) {
  for (const auto& [a, b] : pairs) {
    HaloValue lhs = evaluate(place, a + b);
    HaloValue rhs = hmax(evaluate(place, a), evaluate(place, b));
    if (!le(lhs, rhs)) {
      return CheckResult::fail({a, b}, "|a+b| = " + lhs.to_string() + " exceeds max = " + rhs.to_string());
    }
  }
  return CheckResult::pass();
}

CheckResult check_prearchimedean_on(const Place& place, const std::vector<ElementPair>& pairs) {
  HaloValue two = evaluate(place, Integer(2));
  HaloValue c = hmax(two, HaloValue::one(two.halo()));
  for (const auto& [a, b] : pairs) {
    HaloValue lhs = evaluate(place, a + b);
    HaloValue rhs = c * hmax(evaluate(place, a), evaluate(place, b));
    if (!le(lhs, rhs)) {
      return CheckResult::fail({a, b}, "|a+b| = " + lhs.to_string() + " exceeds " + rhs.to_string());
    }
  }
  return CheckResult::pass();
}

CheckResult check_subadditive_on(const Place& place, const std::vector<ElementPair>& pairs) {
  for (const auto& [a, b] : pairs) {
    HaloValue lhs = evaluate(place, a + b);
    HaloValue rhs = evaluate(place, a) + evaluate(place, b);
    if (!le(lhs, rhs)) {
      return CheckResult::fail({a, b}, "|a+b| = " + lhs.to_string() + " exceeds |a|+|b| = " + rhs.to_string());
    }
  }
  return CheckResult::pass();
}

CheckResult check_submultiplicative_on(const Place& place, const std::vector<ElementPair>& pairs) {
  for (const auto& [a, b] : pairs) {
    HaloValue lhs = evaluate(place, a * b);
    HaloValue rhs = evaluate(place, a) * evaluate(place, b);
    if (!le(lhs, rhs)) {
      return CheckResult::fail({a, b}, "|ab| = " + lhs.to_string() + " exceeds |a||b| = " + rhs.to_string());
    }
  }
  return CheckResult::pass();
}

CheckResult mult_bounded_by(const Place& place1, const Place& place2, const std::vector<ElementTriple>& triples) {
  for (const auto& t : triples) {
    if (t.size() != 3) throw Error(ErrorCode::InvalidArgument, "mult_bounded_by expects triples");
    const auto& [a, b, c] = std::tie(t[0], t[1], t[2]);
    if (le(evaluate(place2, a) * evaluate(place2, c), evaluate(place2, b)) &&
        !le(evaluate(place1, a) * evaluate(place1, c), evaluate(place1, b))) {
      return CheckResult::fail(t, "bound holds for the second place but not the first");
    }
  }
  return CheckResult::pass();
}

CheckResult negation_symmetry_check(const Place& place, const std::vector<RingElement>& elems) {
  HaloValue minus_one = evaluate(place, Integer(-1));
  if (!le(HaloValue::one(minus_one.halo()), minus_one)) {
    return CheckResult::fail({RingElement::integer(-1)}, "|-1| = " + minus_one.to_string() + " < 1");
  }
  for (const auto& a : elems) {
    HaloValue x = evaluate(place, a);
    HaloValue y = evaluate(place, -a);
    if (!(x == y)) return CheckResult::fail({a}, "|a| = " + x.to_string() + " but |-a| = " + y.to_string());
  }
  return CheckResult::pass();
}

bool is_nonarchimedean(const Place& place) {
  HaloValue two = evaluate(place, Integer(2));
  return le(two, HaloValue::one(two.halo()));
}

// ---------------------------------------------------------------------------

std::string ZClass::to_string() const {
  switch (tag) {
    case Tag::Trivial: return "trivial";
    case Tag::PAdic: return "padic(" + std::to_string(p) + ")";
    case Tag::Residual: return "residual(" + std::to_string(p) + ")";
    case Tag::Archimedean: return "archimedean";
  }
  return "?";
}

Place restrict_to_Z(const Place& place) {
  using K = Place::Kind;
  switch (place.kind) {
    case K::Trivial: return Place::trivial(RingKind::Z);
    case K::GaussPoint:
    case K::HKImmediate:
    case K::HKCase4:
    case K::PAdicEval: return Place::padic_trop(place.p);
    case K::FpResidual:
    case K::FpPAdic: return Place::residual(place.p);
    case K::ArchEval:
    case K::ArchInfinitesimal:
    case K::ArchInfinity: return Place::archimedean();
    case K::Retracted: return restrict_to_Z(*place.inner);
    case K::External: {
      if (!place.on_polynomial_ring()) return place;
      ExternalSpec spec = *place.external;
      spec.name += "|Z";
      spec.ring = RingKind::Z;
      return Place::external_place(std::move(spec));
    }
    default: return place;
  }
}

ZClass classify_on_Z(const Place& place_in, unsigned long prime_bound) {
  using K = Place::Kind;
  const Place place = restrict_to_Z(place_in);
  if (!place.is_multiplicative() && place.kind != K::External) {
    throw Error(ErrorCode::Inconclusive, place.to_string() + " is not multiplicative, so it is not a point of Speh^m(Z)");
  }
  const bool catalog = place.kind != K::External;
  if (catalog) {
    IdealDescriptor ker = kernel(place);
    if (ker.kind == IdealDescriptor::Kind::PrincipalInt) return {ZClass::Tag::Residual, ker.generator.get_ui()};
  } else {
    for (Prime p : primes_up_to(prime_bound)) {
      if (evaluate(place, Integer(p)).is_zero()) return {ZClass::Tag::Residual, p};
    }
  }
  if (!is_nonarchimedean(place)) return {ZClass::Tag::Archimedean, 0};
  if (catalog) {
    switch (place.kind) {
      case K::PAdicTrop:
      case K::PAdicReal: return {ZClass::Tag::PAdic, place.p};
      case K::PAdicPower:
        if (sgn(place.exponent) > 0) return {ZClass::Tag::PAdic, place.p};
        return {ZClass::Tag::Trivial, 0};
      default: break;
    }
  }
  for (Prime p : primes_up_to(prime_bound)) {
    HaloValue v = evaluate(place, Integer(p));
    if (halo_cmp(v.halo(), v, HaloValue::one(v.halo())) == std::strong_ordering::less) return {ZClass::Tag::PAdic, p};
  }
  if (catalog) return {ZClass::Tag::Trivial, 0};
  throw Error(ErrorCode::Inconclusive, "no prime up to " + std::to_string(prime_bound) + " has |p| < 1");
}

// ---------------------------------------------------------------------------

namespace {

bool conjugate_or_equal(const GaussianRational& a, const GaussianRational& b) {
  return a == b || (a.re == b.re && a.im == -b.im);
}

// Class on Z of a catalog Z-place, or nullopt for non-multiplicative ones.
std::optional<ZClass> z_table(const Place& pl) {
  using K = Place::Kind;
  switch (pl.kind) {
    case K::Trivial: return ZClass{ZClass::Tag::Trivial, 0};
    case K::PAdicTrop:
    case K::PAdicReal: return ZClass{ZClass::Tag::PAdic, pl.p};
    case K::PAdicPower:
      if (sgn(pl.exponent) == 0) return ZClass{ZClass::Tag::Trivial, 0};
      return ZClass{ZClass::Tag::PAdic, pl.p};
    case K::ArchimedeanZ: return ZClass{ZClass::Tag::Archimedean, 0};
    case K::Residual: return ZClass{ZClass::Tag::Residual, pl.p};
    default: return std::nullopt;
  }
}

}  // namespace

bool equivalent_oracle(const Place& a, const Place& b) {
  using K = Place::Kind;
  if (a.kind == K::External || b.kind == K::External || a.kind == K::Retracted || b.kind == K::Retracted) {
    throw Error(ErrorCode::UnsupportedPair, a.to_string() + " vs " + b.to_string());
  }
  if (a.on_polynomial_ring() != b.on_polynomial_ring()) {
    throw Error(ErrorCode::UnsupportedPair, "places on different rings: " + a.to_string() + " vs " + b.to_string());
  }
  if (!a.on_polynomial_ring()) {
    auto ca = z_table(a);
    auto cb = z_table(b);
    if (ca && cb) return *ca == *cb;
    // Non-multiplicative composite places only match themselves.
    if (!ca && !cb) return a.kind == b.kind && a.m == b.m;
    return false;
  }
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case K::Trivial: return true;
    case K::FpResidual:
    case K::FpPAdic: return a.p == b.p && a.modulus == b.modulus;
    case K::GaussPoint:
      // Same closed disc: equal radius and |a - b|_p <= p^r.
      if (a.p != b.p || a.exponent != b.exponent) return false;
      return a.center == b.center || Rational(-ord(Rational(a.center - b.center), a.p)) <= a.exponent;
    case K::HKCase4:
      return a.p == b.p && a.center == b.center && a.major == b.major && a.cut == b.cut;
    case K::PAdicEval: return a.p == b.p && a.center == b.center;
    case K::ArchEval:
    case K::ArchInfinitesimal: return conjugate_or_equal(a.arch_center, b.arch_center);
    case K::ArchInfinity: return true;
    default: break;
  }
  throw Error(ErrorCode::UnsupportedPair, a.to_string() + " vs " + b.to_string());
}

}  // namespace speh
