#include "speh/huber.hpp"

namespace speh {

GroupPresentation huber_presentation(const Place& place) {
  using K = Place::Kind;
  auto make = [](std::vector<std::string> labels, std::vector<Rational> two) {
    GroupDescriptor g(std::move(labels));
    return GroupPresentation{g, GroupElement(g, std::move(two))};
  };
  switch (place.kind) {
    case K::Trivial:
    case K::Residual:
    case K::CompositeResidual:
    case K::FpResidual: return make({}, {});
    case K::CompositeAdic: return make({speh::to_string(place.m)}, {Rational(0)});
    case K::PAdicTrop:
    case K::PAdicReal:
    case K::GaussPoint:
    case K::HKImmediate:
    case K::PAdicEval:
    case K::PAdicPower: {
      Rational t = place.kind == K::PAdicPower ? place.exponent : Rational(1);
      return make({std::to_string(place.p)}, {Rational(-ord(Rational(2), place.p)) * t});
    }
    case K::FpPAdic: return make({"P"}, {Rational(0)});
    case K::HKCase4: {
      auto labels = place.codomain().group.labels;
      std::vector<Rational> two(2, Rational(0));
      two[place.major == Place::Major::Cut ? 0 : 1] = -ord(Rational(2), place.p);
      return make(labels, two);
    }
    case K::ArchimedeanZ:
    case K::ArchEval: return make({"log"}, {Rational(1)});
    // The real magnitude dominates the infinitesimal q-coordinate.
    case K::ArchInfinitesimal: return make({"log", "1/q"}, {Rational(1), Rational(0)});
    // q exceeds every real, so |2| sits below the q-coordinate.
    case K::ArchInfinity: return make({"q", "log"}, {Rational(0), Rational(1)});
    case K::Retracted: {
      GroupPresentation inner = huber_presentation(*place.inner);
      ConvexSubgroup delta = huber_delta(inner.group, inner.two);
      GroupQuotient quotient = quotient_by_convex(inner.group, delta);
      return GroupPresentation{quotient.target, quotient.project(inner.two)};
    }
    case K::External: break;
  }
  throw Error(ErrorCode::UnsupportedPlace, place.to_string() + " has no value-group presentation");
}

Place huber_retract(const Place& place) {
  GroupPresentation pres = huber_presentation(place);
  ConvexSubgroup delta = huber_delta(pres.group, pres.two);
  if (delta.is_trivial()) return place;
  return Place::retracted(place);
}

}  // namespace speh
