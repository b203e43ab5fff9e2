#include "speh/place.hpp"

namespace speh {

DiscSequence::DiscSequence(std::vector<Disc> prefix, Extension extension, std::size_t max_depth)
    : prefix_(std::move(prefix)), extension_(std::move(extension)), max_depth_(max_depth) {
  if (prefix_.empty() && !extension_) throw Error(ErrorCode::InvalidArgument, "empty disc sequence");
}

Disc DiscSequence::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (!extension_ || i >= max_depth_) {
    throw Error(ErrorCode::InsufficientFilterDepth, "disc " + std::to_string(i) + " is beyond the sequence");
  }
  std::size_t j = i - prefix_.size();
  while (cache_.size() <= j) cache_.push_back(extension_(prefix_.size() + cache_.size()));
  return cache_[j];
}

// ---------------------------------------------------------------------------

namespace {

void require_prime(Prime p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

void require_irreducible(Prime p, const FpPolynomial& modulus) {
  require_prime(p);
  if (modulus.modulus() != p) throw Error(ErrorCode::MixedRings, "modulus polynomial is over a different field");
  if (!is_irreducible(modulus)) {
    throw Error(ErrorCode::ReducibleModulus, modulus.to_string() + " is reducible over F_" + std::to_string(p));
  }
}

Place make(Place::Kind kind, Prime p = 0) {
  Place pl;
  pl.kind = kind;
  pl.p = p;
  if (p != 0) require_prime(p);
  return pl;
}

std::string plabel(Prime p) { return std::to_string(p); }

Rational neg_ord(const Rational& q, Prime p) { return Rational(-ord(q, p)); }

HaloValue trop(const HaloDescriptor& h, std::vector<Rational> e) { return HaloValue::group(h, std::move(e)); }

GaussianRational divide(const GaussianRational& a, const GaussianRational& b) {
  Rational n = b.norm();
  GaussianRational conj(b.re, -b.im);
  GaussianRational num = a * conj;
  return {num.re / n, num.im / n};
}

Surd magnitude(const GaussianRational& z) {
  if (sgn(z.im) == 0) return Surd(abs(z.re));
  if (sgn(z.re) == 0) return Surd(abs(z.im));
  return Surd::sqrt_of(z.norm());
}

std::size_t lowest_nonzero(const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

std::size_t lowest_nonzero(const std::vector<GaussianRational>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

}  // namespace

Place Place::trivial(RingKind ring) {
  Place pl;
  pl.kind = Kind::Trivial;
  pl.ring = ring;
  return pl;
}

Place Place::padic_trop(Prime p) { return make(Kind::PAdicTrop, p); }
Place Place::padic_real(Prime p) { return make(Kind::PAdicReal, p); }
Place Place::archimedean() { return make(Kind::ArchimedeanZ); }
Place Place::residual(Prime p) { return make(Kind::Residual, p); }

Place Place::composite_adic(const Integer& m) {
  if (m < 4 || is_prime(m)) throw Error(ErrorCode::InvalidArgument, "composite_adic needs a composite m");
  Place pl = make(Kind::CompositeAdic);
  pl.m = m;
  return pl;
}

Place Place::composite_residual(const Integer& m) {
  if (m < 4 || is_prime(m)) throw Error(ErrorCode::InvalidArgument, "composite_residual needs a composite m");
  Place pl = make(Kind::CompositeResidual);
  pl.m = m;
  return pl;
}

Place Place::fp_residual(Prime p, const FpPolynomial& modulus) {
  require_irreducible(p, modulus);
  Place pl = make(Kind::FpResidual, p);
  pl.modulus = modulus.monic();
  return pl;
}

Place Place::fp_padic(Prime p, const FpPolynomial& modulus) {
  require_irreducible(p, modulus);
  Place pl = make(Kind::FpPAdic, p);
  pl.modulus = modulus.monic();
  return pl;
}

Place Place::gauss_point(Prime p, const Rational& center, const Rational& radius_exp) {
  Place pl = make(Kind::GaussPoint, p);
  pl.center = center;
  pl.exponent = radius_exp;
  return pl;
}

Place Place::hk_immediate(Prime p, std::shared_ptr<const DiscSequence> discs) {
  if (!discs) throw Error(ErrorCode::InvalidArgument, "missing disc sequence");
  Place pl = make(Kind::HKImmediate, p);
  pl.discs = std::move(discs);
  return pl;
}

Place Place::hk_case4(Prime p, const Rational& center, Major major, const Rational& cut) {
  if (major == Major::Cut && sgn(cut) == 0) throw Error(ErrorCode::InvalidArgument, "cut value must be nonzero");
  Place pl = make(Kind::HKCase4, p);
  pl.center = center;
  pl.major = major;
  if (major == Major::Cut) pl.cut = cut;
  return pl;
}

Place Place::arch_eval(const GaussianRational& a) {
  Place pl = make(Kind::ArchEval);
  pl.arch_center = a;
  return pl;
}

Place Place::arch_infinitesimal(const GaussianRational& a) {
  Place pl = make(Kind::ArchInfinitesimal);
  pl.arch_center = a;
  return pl;
}

Place Place::arch_infinity() { return make(Kind::ArchInfinity); }

Place Place::padic_eval(Prime p, const Rational& a) {
  Place pl = make(Kind::PAdicEval, p);
  pl.center = a;
  return pl;
}

Place Place::padic_power(Prime p, const Rational& t) {
  if (sgn(t) < 0) throw Error(ErrorCode::RangeError, "power must be nonnegative");
  Place pl = make(Kind::PAdicPower, p);
  pl.exponent = t;
  return pl;
}

Place Place::retracted(const Place& inner) {
  Place pl = make(Kind::Retracted);
  pl.inner = std::make_shared<const Place>(inner);
  return pl;
}

Place Place::external_place(ExternalSpec spec) {
  Place pl = make(Kind::External);
  pl.external = std::make_shared<const ExternalSpec>(std::move(spec));
  return pl;
}

RingKind Place::domain() const {
  switch (kind) {
    case Kind::Trivial: return ring;
    case Kind::PAdicTrop:
    case Kind::PAdicReal:
    case Kind::ArchimedeanZ:
    case Kind::PAdicPower: return RingKind::Q;
    case Kind::Residual:
    case Kind::CompositeAdic:
    case Kind::CompositeResidual: return RingKind::Z;
    case Kind::FpResidual:
    case Kind::FpPAdic: return RingKind::FpX;
    case Kind::Retracted: return inner->domain();
    case Kind::External: return external->ring;
    default: return RingKind::QXFrac;
  }
}

bool Place::accepts(RingKind r) const {
  if (kind == Kind::FpResidual || kind == Kind::FpPAdic) return r != RingKind::QXFrac;
  return coerces_to(r, domain());
}

HaloDescriptor Place::codomain() const {
  switch (kind) {
    case Kind::Trivial:
    case Kind::Residual:
    case Kind::CompositeResidual:
    case Kind::FpResidual: return HaloDescriptor::trivial();
    case Kind::PAdicTrop:
    case Kind::PAdicPower:
    case Kind::GaussPoint:
    case Kind::HKImmediate:
    case Kind::PAdicEval: return HaloDescriptor::tropical({plabel(p)});
    case Kind::FpPAdic: return HaloDescriptor::tropical({"P"});
    case Kind::PAdicReal:
    case Kind::ArchimedeanZ:
    case Kind::CompositeAdic: return HaloDescriptor::rationals();
    case Kind::ArchEval: return HaloDescriptor::surds();
    case Kind::ArchInfinitesimal:
      return HaloDescriptor::lex(HaloDescriptor::tropical({"1/q"}), HaloDescriptor::surds());
    case Kind::ArchInfinity: return HaloDescriptor::lex(HaloDescriptor::tropical({"q"}), HaloDescriptor::surds());
    case Kind::HKCase4:
      switch (major) {
        case Major::Empty: return HaloDescriptor::tropical({"q", plabel(p)});
        case Major::All: return HaloDescriptor::tropical({"1/q", plabel(p)});
        case Major::Cut: return HaloDescriptor::tropical({plabel(p), "eps"});
      }
      break;
    case Kind::Retracted: {
      HaloDescriptor h = inner->codomain();
      return h.kind == HaloDescriptor::Kind::Lex ? *h.second : h;
    }
    case Kind::External: return external->codomain;
  }
  return HaloDescriptor::trivial();
}

bool Place::is_multiplicative() const {
  switch (kind) {
    case Kind::CompositeAdic:
    case Kind::CompositeResidual: return false;
    case Kind::Retracted: return inner->is_multiplicative();
    case Kind::External: return external->multiplicative;
    default: return true;
  }
}

std::string Place::to_string() const {
  auto ps = [&] { return std::to_string(p); };
  switch (kind) {
    case Kind::Trivial: return "TrivialOn(" + std::string(ring_name(ring)) + ")";
    case Kind::PAdicTrop: return "PAdicTrop(" + ps() + ")";
    case Kind::PAdicReal: return "PAdicReal(" + ps() + ")";
    case Kind::ArchimedeanZ: return "ArchimedeanZ";
    case Kind::Residual: return "Residual(" + ps() + ")";
    case Kind::CompositeAdic: return "CompositeAdic(" + speh::to_string(m) + ")";
    case Kind::CompositeResidual: return "CompositeResidual(" + speh::to_string(m) + ")";
    case Kind::FpResidual: return "FpResidual(" + ps() + ", " + modulus.to_string() + ")";
    case Kind::FpPAdic: return "FpPAdic(" + ps() + ", " + modulus.to_string() + ")";
    case Kind::GaussPoint:
      return "GaussPoint(" + ps() + ", " + speh::to_string(center) + ", " + speh::to_string(exponent) + ")";
    case Kind::HKImmediate: return "HKImmediate(" + ps() + ")";
    case Kind::HKCase4: {
      std::string mm = major == Major::Empty ? "Empty" : major == Major::All ? "All" : "CutAt(" + speh::to_string(cut) + ")";
      return "HKCase4(" + ps() + ", " + speh::to_string(center) + ", " + mm + ")";
    }
    case Kind::ArchEval: return "ArchEval(" + speh::to_string(arch_center) + ")";
    case Kind::ArchInfinitesimal: return "ArchInfinitesimal(" + speh::to_string(arch_center) + ")";
    case Kind::ArchInfinity: return "ArchInfinity";
    case Kind::PAdicEval: return "PAdicEval(" + ps() + ", " + speh::to_string(center) + ")";
    case Kind::PAdicPower: return "PAdicPower(" + ps() + ", " + speh::to_string(exponent) + ")";
    case Kind::Retracted: return "Retract(" + inner->to_string() + ")";
    case Kind::External: return "External(" + external->name + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

// Value of a nonzero-or-zero polynomial at a polynomial-ring place.
HaloValue poly_value(const Place& pl, const HaloDescriptor& h, const Polynomial& f) {
  using K = Place::Kind;
  if (f.is_zero()) return HaloValue::zero(h);
  switch (pl.kind) {
    case K::GaussPoint: {
      auto b = taylor_shift(f, pl.center);
      std::optional<Rational> best;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) == 0) continue;
        Rational e = neg_ord(b[i], pl.p) + pl.exponent * static_cast<unsigned long>(i);
        if (!best || e > *best) best = e;
      }
      return trop(h, {*best});
    }
    case K::HKCase4: {
      auto b = taylor_shift(f, pl.center);
      if (pl.major == Place::Major::Empty) {
        std::size_t n = b.size() - 1;
        return trop(h, {Rational(static_cast<unsigned long>(n)), neg_ord(b[n], pl.p)});
      }
      if (pl.major == Place::Major::All) {
        std::size_t i0 = lowest_nonzero(b);
        return trop(h, {Rational(-static_cast<long>(i0)), neg_ord(b[i0], pl.p)});
      }
      // |X - a| = |cut| * eps with eps infinitesimally above 1.
      Rational step = neg_ord(pl.cut, pl.p);
      std::optional<HaloValue> best;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) == 0) continue;
        Rational ii(static_cast<unsigned long>(i));
        HaloValue v = trop(h, {neg_ord(b[i], pl.p) + step * ii, ii});
        if (!best || halo_cmp(h, v, *best) == std::strong_ordering::greater) best = v;
      }
      return *best;
    }
    case K::PAdicEval: {
      Rational v = f(pl.center);
      if (sgn(v) == 0) return HaloValue::zero(h);
      return trop(h, {neg_ord(v, pl.p)});
    }
    case K::ArchEval: return HaloValue::surd(magnitude(f(pl.arch_center)));
    case K::ArchInfinitesimal: {
      auto b = taylor_shift(f, pl.arch_center);
      std::size_t i0 = lowest_nonzero(b);
      return HaloValue::pair(h, trop(*h.first, {Rational(-static_cast<long>(i0))}), HaloValue::surd(magnitude(b[i0])));
    }
    case K::ArchInfinity:
      return HaloValue::pair(h, trop(*h.first, {Rational(f.degree())}), HaloValue::surd(Surd(abs(f.leading()))));
    default: throw Error(ErrorCode::UnsupportedPlace, pl.to_string() + " is not a polynomial-ring place");
  }
}

// Constant Taylor term strictly (closed) or weakly (open) dominates on the disc.
bool dominated_on(const Polynomial& f, const Disc& d, Prime p) {
  auto b = taylor_shift(f, d.center);
  if (sgn(b[0]) == 0) return false;
  Rational lead = neg_ord(b[0], p);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (sgn(b[i]) == 0) continue;
    Rational e = neg_ord(b[i], p) + d.radius_exp * static_cast<unsigned long>(i);
    if (d.kind == Disc::Kind::Closed ? !(lead > e) : !(lead >= e)) return false;
  }
  return true;
}

HaloValue immediate_value(const Place& pl, const HaloDescriptor& h, const Polynomial& num, const Polynomial& den) {
  if (num.is_zero()) return HaloValue::zero(h);
  const DiscSequence& seq = *pl.discs;
  for (std::size_t i = 0; i < seq.max_depth(); ++i) {
    Disc d = seq.at(i);
    if (dominated_on(num, d, pl.p) && dominated_on(den, d, pl.p)) {
      return trop(h, {neg_ord(num(d.center), pl.p) - neg_ord(den(d.center), pl.p)});
    }
  }
  throw Error(ErrorCode::InsufficientFilterDepth,
              "no disc among the first " + std::to_string(seq.max_depth()) + " avoids the zeros");
}

Integer composite_order(Integer n, const Integer& m) {
  Integer k = 0;
  while (n % m == 0) {
    n /= m;
    ++k;
  }
  return k;
}

}  // namespace

HaloValue evaluate(const Place& pl, const RingElement& elem) {
  using K = Place::Kind;
  if (!pl.accepts(elem.ring())) {
    throw Error(ErrorCode::DomainMismatch,
                pl.to_string() + " is not defined on " + std::string(ring_name(elem.ring())) + " elements");
  }
  const HaloDescriptor h = pl.codomain();
  switch (pl.kind) {
    case K::Trivial: {
      if (elem.is_zero()) return HaloValue::zero(h);
      return HaloValue::one(h);
    }
    case K::PAdicTrop:
    case K::PAdicPower: {
      Rational q = elem.as_rational();
      if (sgn(q) == 0) return HaloValue::zero(h);
      Rational t = pl.kind == K::PAdicTrop ? Rational(1) : pl.exponent;
      return trop(h, {neg_ord(q, pl.p) * t});
    }
    case K::PAdicReal: {
      Rational q = elem.as_rational();
      if (sgn(q) == 0) return HaloValue::zero(h);
      return HaloValue::rational(rpow(Rational(pl.p), -ord(q, pl.p)));
    }
    case K::ArchimedeanZ: return HaloValue::rational(abs(elem.as_rational()));
    case K::Residual: {
      Integer n = elem.as_integer();
      return n % pl.p == 0 ? HaloValue::zero(h) : HaloValue::one(h);
    }
    case K::CompositeAdic: {
      Integer n = elem.as_integer();
      if (n == 0) return HaloValue::zero(h);
      Integer k = composite_order(n, pl.m);
      return HaloValue::rational(Rational(1) / Rational(ipow(pl.m, k.get_ui())));
    }
    case K::CompositeResidual: {
      Integer n = elem.as_integer();
      return n % pl.m == 0 ? HaloValue::zero(h) : HaloValue::one(h);
    }
    case K::FpResidual: {
      FpPolynomial q = elem.reduce_mod(pl.p);
      return divmod(q, pl.modulus).remainder.is_zero() ? HaloValue::zero(h) : HaloValue::one(h);
    }
    case K::FpPAdic: {
      FpPolynomial q = elem.reduce_mod(pl.p);
      if (q.is_zero()) return HaloValue::zero(h);
      return trop(h, {Rational(-static_cast<long>(ord(q, pl.modulus)))});
    }
    case K::HKImmediate: return immediate_value(pl, h, elem.num(), elem.den());
    case K::ArchEval: {
      GaussianRational d = elem.den()(pl.arch_center);
      if (d.is_zero()) throw Error(ErrorCode::DomainMismatch, "denominator vanishes at the evaluation point");
      return HaloValue::surd(magnitude(divide(elem.num()(pl.arch_center), d)));
    }
    case K::PAdicEval: {
      if (sgn(elem.den()(pl.center)) == 0) {
        throw Error(ErrorCode::DomainMismatch, "denominator vanishes at the evaluation point");
      }
      [[fallthrough]];
    }
    case K::GaussPoint:
    case K::HKCase4:
    case K::ArchInfinitesimal:
    case K::ArchInfinity: {
      HaloValue n = poly_value(pl, h, elem.num());
      if (elem.den().degree() == 0 && elem.den().coeff(0) == 1) return n;
      return halo_div(n, poly_value(pl, h, elem.den()));
    }
    case K::Retracted: {
      HaloValue v = evaluate(*pl.inner, elem);
      HaloDescriptor inner_h = pl.inner->codomain();
      if (inner_h.kind != HaloDescriptor::Kind::Lex) return v;
      if (v.is_zero()) return HaloValue::zero(h);
      return v.second();
    }
    case K::External: {
      HaloValue v = pl.external->evaluate(elem);
      if (!(v.halo() == h)) throw Error(ErrorCode::MixedHalos, "external place returned a value outside its codomain");
      return v;
    }
  }
  throw Error(ErrorCode::UnsupportedPlace, pl.to_string());
}

HaloValue evaluate(const Place& place, const Integer& n) { return evaluate(place, RingElement::integer(n)); }

// ---------------------------------------------------------------------------

std::string IdealDescriptor::to_string() const {
  switch (kind) {
    case Kind::Zero: return "(0)";
    case Kind::PrincipalInt: return "(" + speh::to_string(generator) + ")";
    case Kind::PrincipalPoly:
      return "(" + (modulus == 0 ? poly.to_string() : fp.to_string()) + ")";
    case Kind::PrincipalLinear: return "(X - " + speh::to_string(point) + ")";
  }
  return "?";
}

IdealDescriptor kernel(const Place& pl) {
  using K = Place::Kind;
  IdealDescriptor ideal;
  switch (pl.kind) {
    case K::Residual:
      ideal.kind = IdealDescriptor::Kind::PrincipalInt;
      ideal.generator = pl.p;
      break;
    case K::CompositeResidual:
      ideal.kind = IdealDescriptor::Kind::PrincipalInt;
      ideal.generator = pl.m;
      break;
    case K::FpResidual:
      ideal.kind = IdealDescriptor::Kind::PrincipalPoly;
      ideal.modulus = pl.p;
      ideal.fp = pl.modulus;
      break;
    case K::PAdicEval:
      ideal.kind = IdealDescriptor::Kind::PrincipalLinear;
      ideal.point = pl.center;
      break;
    case K::ArchEval:
      if (pl.arch_center.is_rational()) {
        ideal.kind = IdealDescriptor::Kind::PrincipalLinear;
        ideal.point = pl.arch_center.re;
      } else {
        // X^2 - 2 Re(a) X + |a|^2
        ideal.kind = IdealDescriptor::Kind::PrincipalPoly;
        ideal.poly = Polynomial({pl.arch_center.norm(), Rational(-2 * pl.arch_center.re), Rational(1)});
      }
      break;
    case K::External:
      if (pl.domain() == RingKind::Z || pl.domain() == RingKind::Q) {
        for (Prime q : primes_up_to(100)) {
          if (evaluate(pl, Integer(q)).is_zero()) {
            ideal.kind = IdealDescriptor::Kind::PrincipalInt;
            ideal.generator = q;
            break;
          }
        }
      }
      break;
    default: break;
  }
  return ideal;
}

HaloValue value_of_linear(const Place& place, const Rational& a) {
  return evaluate(place, RingElement::qx(Polynomial::linear(a)));
}

HaloValue radius_value(const Place& place, const Disc& disc) {
  HaloDescriptor h = place.codomain();
  if (h.kind == HaloDescriptor::Kind::NonnegSurds || h.kind == HaloDescriptor::Kind::Lex) {
    if (!disc.radius || sgn(*disc.radius) <= 0) {
      throw Error(ErrorCode::DomainMismatch, "archimedean discs need a positive rational radius");
    }
    HaloValue r = HaloValue::surd(Surd(*disc.radius));
    if (h.kind == HaloDescriptor::Kind::NonnegSurds) return r;
    return HaloValue::pair(h, HaloValue::one(*h.first), r);
  }
  if (h.kind == HaloDescriptor::Kind::Tropical) {
    const auto& labels = h.group.labels;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (labels[j] == plabel(place.p)) {
        std::vector<Rational> e(labels.size(), Rational(0));
        e[j] = disc.radius_exp;
        return trop(h, std::move(e));
      }
    }
  }
  throw Error(ErrorCode::DomainMismatch, place.to_string() + " has no disc radii");
}

}  // namespace speh
