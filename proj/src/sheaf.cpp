#include "speh/sheaf.hpp"

#include <algorithm>
#include <set>

namespace speh {

RingDescriptor RingDescriptor::localized(const Integer& m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "Z[1/0] is not a ring of sections");
  RingDescriptor r;
  r.kind = Kind::LocalizedIntegers;
  r.m = abs(m);
  return r;
}

RingDescriptor RingDescriptor::padic_integers(Prime p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  RingDescriptor r;
  r.kind = Kind::PAdicIntegers;
  r.p = p;
  return r;
}

RingDescriptor RingDescriptor::padic_field(Prime p) {
  RingDescriptor r = padic_integers(p);
  r.kind = Kind::PAdicField;
  return r;
}

RingDescriptor RingDescriptor::reals() {
  RingDescriptor r;
  r.kind = Kind::RealField;
  return r;
}

RingDescriptor RingDescriptor::rationals() { return {}; }

RingDescriptor RingDescriptor::finite_field(Prime p) {
  RingDescriptor r = padic_integers(p);
  r.kind = Kind::FiniteField;
  return r;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> parts) {
  std::vector<RingDescriptor> flat;
  for (auto& part : parts) {
    if (part.kind == Kind::ProductOf) {
      flat.insert(flat.end(), part.parts.begin(), part.parts.end());
    } else {
      flat.push_back(std::move(part));
    }
  }
  if (flat.size() == 1) return flat.front();
  RingDescriptor r;
  r.kind = Kind::ProductOf;
  r.parts = std::move(flat);
  return r;
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case Kind::LocalizedIntegers: return "Z[1/" + speh::to_string(m) + "]";
    case Kind::PAdicIntegers: return "Z_" + std::to_string(p);
    case Kind::PAdicField: return "Q_" + std::to_string(p);
    case Kind::RealField: return "R";
    case Kind::RationalField: return "Q";
    case Kind::FiniteField: return "F_" + std::to_string(p);
    case Kind::ProductOf: {
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i].to_string();
      return s;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

RingDescriptor sections_on_domain(const RationalDomain& d) {
  if (d.den.ring() != RingKind::Z) throw Error(ErrorCode::DomainMismatch, "sections are computed over Z");
  if (domain_membership(Place::trivial(RingKind::Z), d)) return RingDescriptor::localized(d.den.as_integer());

  // Primes outside the support of the data behave like the trivial point.
  std::set<Prime> support;
  auto collect = [&](const RingElement& e) {
    if (e.is_zero()) return;
    for (const auto& q : prime_divisors(e.as_integer())) support.insert(q.get_ui());
  };
  collect(d.den);
  for (const auto& a : d.numerators) collect(a);

  std::vector<RingDescriptor> blocks;
  if (domain_membership(Place::archimedean(), d)) blocks.push_back(RingDescriptor::reals());
  for (Prime p : support) {
    bool adic = domain_membership(Place::padic_real(p), d);
    bool res = domain_membership(Place::residual(p), d);
    if (adic && res) blocks.push_back(RingDescriptor::padic_integers(p));
    else if (adic) blocks.push_back(RingDescriptor::padic_field(p));
    else if (res) throw Error(ErrorCode::UnrecognizedDomainShape, "domain contains a residual point without its p-adic point");
  }
  if (blocks.empty()) throw Error(ErrorCode::UnrecognizedDomainShape, "domain has no points");
  return RingDescriptor::product(std::move(blocks));
}

RingDescriptor germ_at(const SpehPoint& x) {
  using K = Place::Kind;
  switch (x.place.kind) {
    case K::Residual: return RingDescriptor::padic_integers(x.place.p);
    case K::PAdicReal:
    case K::PAdicTrop: return RingDescriptor::padic_field(x.place.p);
    case K::ArchimedeanZ: return RingDescriptor::reals();
    case K::Trivial: return RingDescriptor::rationals();
    default: break;
  }
  throw Error(ErrorCode::UnsupportedPlace, x.place.to_string() + " is not an enumerated point of Speh^a(Z)");
}

// ---------------------------------------------------------------------------

namespace {

Integer ppow(Prime p, long k) { return ipow(Integer(p), static_cast<unsigned long>(std::max(0L, k))); }

Integer mod_residue(const Rational& q, const Integer& modulus) {
  Integer inv;
  Integer den = q.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    if (modulus == 1) return 0;
    throw Error(ErrorCode::NotIntegral, to_string(q) + " has a non-invertible denominator");
  }
  Integer r = (q.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

Rational grid_floor(const Rational& x, long k) {
  Integer scale = Integer(1) << static_cast<unsigned long>(std::max(0L, k));
  Rational r(floor_of(x * Rational(scale)), scale);
  r.canonicalize();
  return r;
}

Rational grid_ceil(const Rational& x, long k) {
  Integer scale = Integer(1) << static_cast<unsigned long>(std::max(0L, k));
  Rational r(ceil_of(x * Rational(scale)), scale);
  r.canonicalize();
  return r;
}

CompletedElement qp_zero(const RingDescriptor& ring, long absolute) {
  CompletedElement e;
  e.ring = ring;
  e.residue = 0;
  e.k = 0;
  e.val = absolute;
  return e;
}

// p^v * x known modulo p^absolute, renormalized.
CompletedElement qp_normalize(const RingDescriptor& ring, Integer x, long v, long absolute) {
  const Prime p = ring.p;
  if (absolute <= v) return qp_zero(ring, absolute);
  Integer modulus = ppow(p, absolute - v);
  x %= modulus;
  if (x < 0) x += modulus;
  if (x == 0) return qp_zero(ring, absolute);
  unsigned long shift = ord(x, Integer(p));
  x /= ppow(p, static_cast<long>(shift));
  CompletedElement e;
  e.ring = ring;
  e.val = v + static_cast<long>(shift);
  e.k = absolute - e.val;
  e.residue = x % ppow(p, e.k);
  return e;
}

void same_ring(const CompletedElement& x, const CompletedElement& y) {
  if (!(x.ring == y.ring)) throw Error(ErrorCode::MixedRings, x.ring.to_string() + " vs " + y.ring.to_string());
}

}  // namespace

CompletedElement completion_map(const Rational& q, const RingDescriptor& target, long precision) {
  using K = RingDescriptor::Kind;
  CompletedElement e;
  e.ring = target;
  e.k = precision;
  switch (target.kind) {
    case K::LocalizedIntegers: {
      Integer den = q.get_den();
      Integer g;
      while ((g = gcd(den, target.m)) != 1) den /= g;
      if (den != 1) throw Error(ErrorCode::NotIntegral, to_string(q) + " is not in " + target.to_string());
      e.exact = q;
      e.k = 0;
      return e;
    }
    case K::RationalField:
      e.exact = q;
      e.k = 0;
      return e;
    case K::PAdicIntegers:
      if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
      if (q.get_den() % target.p == 0) throw Error(ErrorCode::NotIntegral, to_string(q) + " is not in " + target.to_string());
      e.residue = mod_residue(q, ppow(target.p, precision));
      return e;
    case K::PAdicField: {
      if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
      if (sgn(q) == 0) return qp_zero(target, precision);
      e.val = ord(q, target.p);
      Rational unit = q * rpow(Rational(target.p), -e.val);
      e.residue = mod_residue(unit, ppow(target.p, precision));
      return e;
    }
    case K::RealField:
      e.lo = grid_floor(q, precision);
      e.hi = grid_ceil(q, precision);
      return e;
    case K::ProductOf:
      e.k = 0;
      for (const auto& part : target.parts) e.parts.push_back(completion_map(q, part, precision));
      return e;
    case K::FiniteField: break;
  }
  throw Error(ErrorCode::InvalidTarget, target.to_string() + " is not a completion of Z[1/m]");
}

namespace {

template <typename Op>
CompletedElement combine(const CompletedElement& x, const CompletedElement& y, bool multiply, Op op) {
  using K = RingDescriptor::Kind;
  same_ring(x, y);
  CompletedElement e;
  e.ring = x.ring;
  switch (x.ring.kind) {
    case K::LocalizedIntegers:
    case K::RationalField:
      e.exact = op(x.exact, y.exact);
      return e;
    case K::PAdicIntegers:
    case K::FiniteField: {
      e.k = std::min(x.k, y.k);
      Integer modulus = x.ring.kind == K::FiniteField ? Integer(x.ring.p) : ppow(x.ring.p, e.k);
      e.residue = Integer(op(Rational(x.residue), Rational(y.residue)).get_num()) % modulus;
      if (e.residue < 0) e.residue += modulus;
      return e;
    }
    case K::PAdicField: {
      const Prime p = x.ring.p;
      if (multiply) {
        // A zero's val is its absolute precision, so the bound is val + val either way.
        if (x.is_zero_padic() || y.is_zero_padic()) return qp_zero(x.ring, x.val + y.val);
        long k = std::min(x.k, y.k);
        return qp_normalize(x.ring, x.residue * y.residue, x.val + y.val, x.val + y.val + k);
      }
      long ax = x.val + x.k;
      long ay = y.val + y.k;
      long absolute = std::min(ax, ay);
      long v = std::min(x.val, y.val);
      Integer sum = x.residue * ppow(p, x.val - v) + y.residue * ppow(p, y.val - v);
      return qp_normalize(x.ring, sum, v, absolute);
    }
    case K::RealField: {
      e.k = std::min(x.k, y.k);
      std::vector<Rational> c{op(x.lo, y.lo), op(x.lo, y.hi), op(x.hi, y.lo), op(x.hi, y.hi)};
      e.lo = grid_floor(*std::min_element(c.begin(), c.end()), e.k);
      e.hi = grid_ceil(*std::max_element(c.begin(), c.end()), e.k);
      return e;
    }
    case K::ProductOf:
      for (std::size_t i = 0; i < x.parts.size(); ++i) e.parts.push_back(combine(x.parts[i], y.parts[i], multiply, op));
      return e;
  }
  return e;
}

}  // namespace

CompletedElement completed_add(const CompletedElement& x, const CompletedElement& y) {
  if (x.ring.kind == RingDescriptor::Kind::RealField) {
    same_ring(x, y);
    CompletedElement e;
    e.ring = x.ring;
    e.k = std::min(x.k, y.k);
    e.lo = grid_floor(x.lo + y.lo, e.k);
    e.hi = grid_ceil(x.hi + y.hi, e.k);
    return e;
  }
  return combine(x, y, false, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

CompletedElement completed_mul(const CompletedElement& x, const CompletedElement& y) {
  return combine(x, y, true, [](const Rational& a, const Rational& b) { return Rational(a * b); });
}

bool completed_contains(const CompletedElement& x, const Rational& q) {
  using K = RingDescriptor::Kind;
  switch (x.ring.kind) {
    case K::LocalizedIntegers:
    case K::RationalField: return x.exact == q;
    case K::PAdicIntegers: return mod_residue(q, ppow(x.ring.p, x.k)) == x.residue;
    case K::FiniteField: return mod_residue(q, Integer(x.ring.p)) == x.residue;
    case K::PAdicField: {
      // q - p^val * residue must vanish modulo p^(val + k).
      Rational diff = q - rpow(Rational(x.ring.p), x.val) * Rational(x.residue);
      if (sgn(diff) == 0) return true;
      return ord(diff, x.ring.p) >= x.val + x.k;
    }
    case K::RealField: return x.lo <= q && q <= x.hi;
    case K::ProductOf:
      for (const auto& part : x.parts) {
        if (!completed_contains(part, q)) return false;
      }
      return true;
  }
  return false;
}

std::string CompletedElement::to_string() const {
  using K = RingDescriptor::Kind;
  switch (ring.kind) {
    case K::LocalizedIntegers:
    case K::RationalField: return speh::to_string(exact);
    case K::PAdicIntegers: return speh::to_string(residue) + " + O(" + std::to_string(ring.p) + "^" + std::to_string(k) + ")";
    case K::PAdicField:
      if (residue == 0) return "O(" + std::to_string(ring.p) + "^" + std::to_string(val) + ")";
      return std::to_string(ring.p) + "^" + std::to_string(val) + " * (" + speh::to_string(residue) + " + O(" +
             std::to_string(ring.p) + "^" + std::to_string(k) + "))";
    case K::RealField: return "[" + speh::to_string(lo) + ", " + speh::to_string(hi) + "]";
    case K::FiniteField: return speh::to_string(residue) + " mod " + std::to_string(ring.p);
    case K::ProductOf: {
      std::string s = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].to_string();
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

AdeleElement adele_germ_assemble(std::map<Prime, CompletedElement> exceptional, CompletedElement real) {
  for (const auto& [p, e] : exceptional) {
    if (e.ring.kind != RingDescriptor::Kind::PAdicField || e.ring.p != p) {
      throw Error(ErrorCode::MixedRings, "adele component at " + std::to_string(p) + " is not in Q_" + std::to_string(p));
    }
  }
  if (real.ring.kind != RingDescriptor::Kind::RealField) throw Error(ErrorCode::MixedRings, "adele real part must be in R");
  AdeleElement a;
  a.exceptional = std::move(exceptional);
  a.real = std::move(real);
  return a;
}

AdeleElement adele_diagonal(const Rational& q, long padic_precision, long real_bits) {
  std::map<Prime, CompletedElement> ex;
  for (const auto& p : prime_divisors(q.get_den())) {
    Prime pp = p.get_ui();
    ex.emplace(pp, completion_map(q, RingDescriptor::padic_field(pp), padic_precision));
  }
  return adele_germ_assemble(std::move(ex), completion_map(q, RingDescriptor::reals(), real_bits));
}

namespace {

// An unlisted component of the integral tail: some element of Z_p, known to O(p^0).
CompletedElement unknown_integral(Prime p) { return qp_zero(RingDescriptor::padic_field(p), 0); }

AdeleElement adele_combine(const AdeleElement& x, const AdeleElement& y, bool multiply) {
  std::set<Prime> primes;
  for (const auto& [p, e] : x.exceptional) primes.insert(p);
  for (const auto& [p, e] : y.exceptional) primes.insert(p);
  std::map<Prime, CompletedElement> out;
  for (Prime p : primes) {
    auto ix = x.exceptional.find(p);
    auto iy = y.exceptional.find(p);
    CompletedElement a = ix != x.exceptional.end() ? ix->second : unknown_integral(p);
    CompletedElement b = iy != y.exceptional.end() ? iy->second : unknown_integral(p);
    CompletedElement c = multiply ? completed_mul(a, b) : completed_add(a, b);
    // Components known only to lie in Z_p rejoin the integral tail.
    if (c.is_zero_padic() && c.val <= 0) continue;
    out.emplace(p, std::move(c));
  }
  CompletedElement r = multiply ? completed_mul(x.real, y.real) : completed_add(x.real, y.real);
  return adele_germ_assemble(std::move(out), std::move(r));
}

}  // namespace

AdeleElement adele_add(const AdeleElement& x, const AdeleElement& y) { return adele_combine(x, y, false); }
AdeleElement adele_mul(const AdeleElement& x, const AdeleElement& y) { return adele_combine(x, y, true); }

std::string AdeleElement::to_string() const {
  std::string s = "{";
  for (const auto& [p, e] : exceptional) s += std::to_string(p) + ": " + e.to_string() + ", ";
  return s + "oo: " + real.to_string() + ", tail: " + tail + "}";
}

// ---------------------------------------------------------------------------

TinyBallReport tiny_ball_report(const Place& place, unsigned long search_bound) {
  if (place.kind == Place::Kind::External || place.kind == Place::Kind::Retracted || !place.is_multiplicative()) {
    throw Error(ErrorCode::Inconclusive, place.to_string() + " is outside the multiplicative catalog");
  }
  HaloDescriptor h = place.codomain();
  TinyBallReport report;
  if (h.kind == HaloDescriptor::Kind::Trivial) {
    // |b| < 1 forces |b| = 0, so B(0, |1|) = {0}.
    report.disjunct = TinyBallReport::Disjunct::DiscreteBall;
    report.witness = 1;
    return report;
  }
  HaloValue two = halo_natural(h, 2);
  RingKind field = place.domain() == RingKind::Z ? RingKind::Z : RingKind::Q;
  for (unsigned long n = 2; n <= search_bound; ++n) {
    std::vector<Rational> candidates{Rational(n)};
    if (field != RingKind::Z) candidates.emplace_back(Integer(1), Integer(n));
    for (const auto& u : candidates) {
      RingElement e = field == RingKind::Z ? RingElement::integer(u.get_num()) : RingElement::rational(u);
      HaloValue v = evaluate(place, e);
      if (halo_cmp(h, v, two) == std::strong_ordering::greater) {
        report.disjunct = TinyBallReport::Disjunct::LargeElement;
        report.witness = u;
        return report;
      }
    }
  }
  throw Error(ErrorCode::Inconclusive, "no tiny-ball witness up to " + std::to_string(search_bound));
}

}  // namespace speh
