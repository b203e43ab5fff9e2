#include "speh/affine_line.hpp"

namespace speh {

namespace {

void require_irreducible_modulus(const Place& place) {
  if (!is_irreducible(place.modulus)) throw Error(ErrorCode::ReducibleModulus, place.modulus.to_string());
}

}  // namespace

std::string_view affine_type_name(AffinePoint::Type t) {
  using T = AffinePoint::Type;
  switch (t) {
    case T::TrivialPoint: return "trivial";
    case T::FpResidualPoint: return "fp_residual";
    case T::FpPAdicPoint: return "fp_padic";
    case T::HKType1: return "hk_type1";
    case T::HKType2Gauss: return "hk_type2_gauss";
    case T::HKType3Immediate: return "hk_type3_immediate";
    case T::HKType4: return "hk_type4";
    case T::ArchEvalPoint: return "arch_eval";
    case T::ArchInfPoint: return "arch_infinitesimal";
    case T::ArchInfinityPoint: return "arch_infinity";
  }
  return "?";
}

AffinePoint classify_affine_point(const Place& place) {
  using K = Place::Kind;
  using T = AffinePoint::Type;
  if (!place.on_polynomial_ring()) {
    throw Error(ErrorCode::DomainMismatch, place.to_string() + " is not a place on a polynomial ring");
  }
  if (place.kind == K::External || place.kind == K::Retracted) {
    throw Error(ErrorCode::Inconclusive, place.to_string() + " is outside the catalog");
  }
  ZClass base = classify_on_Z(place);
  switch (base.tag) {
    case ZClass::Tag::Trivial: return {T::TrivialPoint, place};
    case ZClass::Tag::Residual: return fp_line_classify(place);
    case ZClass::Tag::PAdic:
      switch (place.kind) {
        case K::PAdicEval: return {T::HKType1, place};
        case K::GaussPoint: return {T::HKType2Gauss, place};
        case K::HKImmediate: return {T::HKType3Immediate, place};
        case K::HKCase4: return {T::HKType4, place};
        default: break;
      }
      break;
    case ZClass::Tag::Archimedean: {
      Boundedness b = boundedness_oracle(place);
      if (kernel(place).kind != IdealDescriptor::Kind::Zero || (b.upper && b.lower)) return {T::ArchEvalPoint, place};
      if (b.upper) return {T::ArchInfPoint, place};
      return {T::ArchInfinityPoint, place};
    }
  }
  throw Error(ErrorCode::Inconclusive, "no affine type for " + place.to_string());
}

FilterCaseReport hk_classify(const AffinePoint& point) {
  using T = AffinePoint::Type;
  const Place& pl = point.place;
  switch (point.type) {
    case T::HKType1:
      return {1, 0, "principal filter at " + to_string(pl.center) + ": P -> |P(" + to_string(pl.center) + ")|"};
    case T::HKType2Gauss:
      return {2, 0,
              "closed discs containing B+(" + to_string(pl.center) + ", p^" + to_string(pl.exponent) +
                  "): generalized Gauss valuation"};
    case T::HKType3Immediate: return {3, 0, "nested discs with empty intersection: immediate extension"};
    case T::HKType4:
      switch (pl.major) {
        case Place::Major::Empty: return {4, 'a', "center " + to_string(pl.center) + ", M empty: |X-a| above every radius"};
        case Place::Major::All: return {4, 'b', "center " + to_string(pl.center) + ", M everything: |X-a| below every radius"};
        case Place::Major::Cut:
          return {4, 'c', "center " + to_string(pl.center) + ", M = radii above |" + to_string(pl.cut) + "|"};
      }
      break;
    default: break;
  }
  throw Error(ErrorCode::NotNonArchimedean,
              std::string(affine_type_name(point.type)) + " is not a Huber-Knebusch point over Q_p");
}

HaloValue hk_evaluate(const AffinePoint& point, const RingElement& f) {
  hk_classify(point);
  return evaluate(point.place, f);
}

AnalyticityVerdict is_analytic(const AffinePoint& point) {
  using T = AffinePoint::Type;
  using R = AnalyticityVerdict::Reason;
  switch (point.type) {
    case T::HKType4:
      if (point.place.major == Place::Major::Empty) return {false, R::InfinitesimalNbhdOfInfinity};
      if (point.place.major == Place::Major::All) return {false, R::InfinitesimalNbhdOfAlgebraicPoint};
      break;
    case T::ArchInfPoint: return {false, R::InfinitesimalNbhdOfAlgebraicPoint};
    case T::ArchInfinityPoint: return {false, R::InfinitesimalNbhdOfInfinity};
    default: break;
  }
  return {true, R::Analytic};
}

bool disc_membership(const AffinePoint& point, const Disc& disc) {
  HaloValue dist = value_of_linear(point.place, disc.center);
  HaloValue radius = radius_value(point.place, disc);
  auto c = halo_cmp(dist.halo(), dist, radius);
  return disc.kind == Disc::Kind::Closed ? c != std::strong_ordering::greater : c == std::strong_ordering::less;
}

AffinePoint fp_line_classify(const Place& place) {
  using K = Place::Kind;
  switch (place.kind) {
    case K::FpResidual:
      require_irreducible_modulus(place);
      return {AffinePoint::Type::FpResidualPoint, place};
    case K::FpPAdic:
      require_irreducible_modulus(place);
      return {AffinePoint::Type::FpPAdicPoint, place};
    default: break;
  }
  throw Error(ErrorCode::Inconclusive, place.to_string() + " is not a place over F_p[X]");
}

Boundedness boundedness_oracle(const Place& place) {
  using K = Place::Kind;
  switch (place.kind) {
    case K::ArchEval: return {true, true};
    case K::ArchInfinitesimal: return {true, false};
    case K::ArchInfinity: return {false, true};
    default: break;
  }
  throw Error(ErrorCode::UnsupportedPlace, place.to_string() + " is not an archimedean affine place");
}

std::optional<Integer> upper_bound_witness(const Place& place, const RingElement& f, const Integer& limit) {
  HaloValue v = evaluate(place, f);
  // Doubling search, then bisection for the least lambda.
  Integer hi = 1;
  auto fits = [&](const Integer& lambda) {
    HaloValue l = evaluate(place, lambda);
    return halo_cmp(v.halo(), v, l) != std::strong_ordering::greater;
  };
  while (!fits(hi)) {
    hi *= 2;
    if (hi > limit) return std::nullopt;
  }
  Integer lo = hi / 2;
  while (lo + 1 < hi) {
    Integer mid = (lo + hi) / 2;
    if (fits(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

std::optional<Rational> lower_bound_witness(const Place& place, const RingElement& f, unsigned long max_k) {
  HaloValue v = evaluate(place, f);
  for (unsigned long k = 0; k <= max_k; ++k) {
    Rational mu(Integer(1), Integer(1) << k);
    HaloValue m = evaluate(place, RingElement::rational(mu));
    if (halo_cmp(v.halo(), m, v) != std::strong_ordering::greater) return mu;
  }
  return std::nullopt;
}

}  // namespace speh
