#include "speh/json_io.hpp"

namespace speh {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string str_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  bad("expected a string or integer, got " + j.dump());
}

Rational rat_of(const Json& j) { return parse_rational(str_of(j)); }
Integer int_of(const Json& j) { return parse_integer(str_of(j)); }

Prime prime_of(const Json& j) {
  Integer n = int_of(j);
  if (n < 2 || !n.fits_ulong_p()) bad("expected a prime, got " + j.dump());
  return n.get_ui();
}

std::string rat_str(const Rational& q) { return to_string(q); }

Json rat_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

std::vector<Rational> rats_of(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rat_of(x));
  return v;
}

Json gauss_to_json(const GaussianRational& z) { return {{"re", rat_str(z.re)}, {"im", rat_str(z.im)}}; }

GaussianRational gauss_of(const Json& j) {
  if (j.is_object()) return {rat_of(field(j, "re")), j.contains("im") ? rat_of(j.at("im")) : Rational(0)};
  return GaussianRational(rat_of(j));
}

Json unit_payload(const HaloValue& v) {
  switch (v.halo().kind) {
    case HaloDescriptor::Kind::Trivial: return 1;
    case HaloDescriptor::Kind::Tropical: return rat_array(v.as_group().exponents);
    case HaloDescriptor::Kind::NonnegRationals: return rat_str(v.as_rational());
    case HaloDescriptor::Kind::NonnegSurds: {
      Json a = Json::array();
      for (const auto& [d, c] : v.as_surd().terms()) a.push_back({rat_str(c), to_string(d)});
      return a;
    }
    case HaloDescriptor::Kind::Lex: return Json::array({unit_payload(v.first()), unit_payload(v.second())});
  }
  return nullptr;
}

HaloValue unit_from(const HaloDescriptor& h, const Json& j) {
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
      if (!(j == 1 || j == "1")) bad("trivial halo units are 1");
      return HaloValue::one(h);
    case HaloDescriptor::Kind::Tropical: return HaloValue::group(h, rats_of(j));
    case HaloDescriptor::Kind::NonnegRationals: {
      Rational q = rat_of(j);
      if (sgn(q) <= 0) bad("units of Q+ are positive");
      return HaloValue::rational(q);
    }
    case HaloDescriptor::Kind::NonnegSurds: {
      if (!j.is_array()) bad("surds are arrays of [c, d] pairs");
      std::vector<std::pair<Rational, Integer>> terms;
      for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) bad("surd terms are [c, d] pairs");
        terms.emplace_back(rat_of(t[0]), int_of(t[1]));
      }
      Surd s = Surd::from_terms(terms);
      if (s.is_zero()) bad("surd units are nonzero");
      return HaloValue::surd(s);
    }
    case HaloDescriptor::Kind::Lex:
      if (!j.is_array() || j.size() != 2) bad("lex units are pairs");
      return HaloValue::pair(h, unit_from(*h.first, j[0]), unit_from(*h.second, j[1]));
  }
  bad("unknown halo");
}

Json poly_json(const Polynomial& p) { return rat_array(p.coeffs()); }
Polynomial poly_of(const Json& j) { return Polynomial(rats_of(j)); }

Json element_or_int(const RingElement& e) {
  if (e.ring() == RingKind::Z) return to_string(e.as_integer());
  return to_json(e);
}

RingElement element_or_int_of(const Json& j) {
  if (j.is_object()) return element_from_json(j);
  return RingElement::integer(int_of(j));
}

}  // namespace

Json to_json(const GroupDescriptor& g) { return {{"rank", g.rank()}, {"labels", g.labels}}; }

GroupDescriptor group_from_json(const Json& j) {
  const Json& labels = field(j, "labels");
  if (!labels.is_array()) bad("labels must be an array");
  std::vector<std::string> l;
  for (const auto& x : labels) l.push_back(str_of(x));
  if (j.contains("rank") && j.at("rank") != l.size()) bad("rank differs from the number of labels");
  return GroupDescriptor(std::move(l));
}

Json to_json(const HaloDescriptor& h) {
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial: return {{"kind", "trivial"}};
    case HaloDescriptor::Kind::Tropical: return {{"kind", "tropical"}, {"group", to_json(h.group)}};
    case HaloDescriptor::Kind::NonnegRationals: return {{"kind", "nonneg_rationals"}};
    case HaloDescriptor::Kind::NonnegSurds: return {{"kind", "nonneg_surds"}};
    case HaloDescriptor::Kind::Lex: return {{"kind", "lex"}, {"first", to_json(*h.first)}, {"second", to_json(*h.second)}};
  }
  return nullptr;
}

HaloDescriptor halo_from_json(const Json& j) {
  std::string kind = str_of(field(j, "kind"));
  if (kind == "trivial") return HaloDescriptor::trivial();
  if (kind == "tropical") return HaloDescriptor::tropical(group_from_json(field(j, "group")));
  if (kind == "nonneg_rationals") return HaloDescriptor::rationals();
  if (kind == "nonneg_surds") return HaloDescriptor::surds();
  if (kind == "lex") return HaloDescriptor::lex(halo_from_json(field(j, "first")), halo_from_json(field(j, "second")));
  bad("unknown halo kind \"" + kind + "\"");
}

Json to_json(const HaloValue& v) {
  Json value = v.is_zero() ? Json("zero") : Json{{"unit", unit_payload(v)}};
  return {{"halo", to_json(v.halo())}, {"value", value}};
}

HaloValue value_from_json(const Json& j) {
  HaloDescriptor h = halo_from_json(field(j, "halo"));
  const Json& v = field(j, "value");
  if (v == "zero") return HaloValue::zero(h);
  return unit_from(h, field(v, "unit"));
}

// ---------------------------------------------------------------------------

Json to_json(const RingElement& e) {
  switch (e.ring()) {
    case RingKind::Z: return {{"ring", "Z"}, {"n", to_string(e.as_integer())}};
    case RingKind::Q: return {{"ring", "Q"}, {"q", rat_str(e.as_rational())}};
    case RingKind::ZX: return {{"ring", "ZX"}, {"coeffs", poly_json(e.num())}};
    case RingKind::QX: return {{"ring", "QX"}, {"coeffs", poly_json(e.num())}};
    case RingKind::FpX: return {{"ring", "FpX"}, {"p", e.modulus()}, {"coeffs", e.fp().coeffs()}};
    case RingKind::QXFrac: return {{"ring", "QXfrac"}, {"num", poly_json(e.num())}, {"den", poly_json(e.den())}};
  }
  return nullptr;
}

RingElement element_from_json(const Json& j) {
  std::string ring = str_of(field(j, "ring"));
  if (ring == "Z") return RingElement::integer(int_of(field(j, "n")));
  if (ring == "Q") return RingElement::rational(rat_of(field(j, "q")));
  if (ring == "ZX") return RingElement::zx(poly_of(field(j, "coeffs")));
  if (ring == "QX") return RingElement::qx(poly_of(field(j, "coeffs")));
  if (ring == "FpX") {
    Prime p = prime_of(field(j, "p"));
    std::vector<unsigned long> c;
    for (const auto& x : field(j, "coeffs")) {
      Integer n = int_of(x) % p;
      if (n < 0) n += p;
      c.push_back(n.get_ui());
    }
    return RingElement::fpx(FpPolynomial(p, c));
  }
  if (ring == "QXfrac") return RingElement::fraction(poly_of(field(j, "num")), poly_of(field(j, "den")));
  bad("unknown ring \"" + ring + "\"");
}

Json to_json(const Disc& d) {
  Json j{{"center", rat_str(d.center)},
         {"radiusExp", rat_str(d.radius_exp)},
         {"kind", d.kind == Disc::Kind::Closed ? "closed" : "open"}};
  if (d.radius) j["radius"] = rat_str(*d.radius);
  return j;
}

Disc disc_from_json(const Json& j) {
  Disc d;
  d.center = rat_of(field(j, "center"));
  if (j.contains("radiusExp")) d.radius_exp = rat_of(j.at("radiusExp"));
  if (j.contains("radius")) d.radius = rat_of(j.at("radius"));
  std::string kind = j.contains("kind") ? str_of(j.at("kind")) : "closed";
  if (kind == "closed") d.kind = Disc::Kind::Closed;
  else if (kind == "open") d.kind = Disc::Kind::Open;
  else bad("disc kind must be closed or open");
  return d;
}

// ---------------------------------------------------------------------------

Json to_json(const Place& p) {
  using K = Place::Kind;
  auto fp_json = [&](const char* name) {
    return Json{{"place", name}, {"p", p.p}, {"modulus", p.modulus.coeffs()}};
  };
  switch (p.kind) {
    case K::Trivial: return {{"place", "trivial"}, {"ring", std::string(ring_name(p.ring))}};
    case K::PAdicTrop: return {{"place", "padic_trop"}, {"p", p.p}};
    case K::PAdicReal: return {{"place", "padic_real"}, {"p", p.p}};
    case K::ArchimedeanZ: return {{"place", "archimedean"}};
    case K::Residual: return {{"place", "residual"}, {"p", p.p}};
    case K::CompositeAdic: return {{"place", "composite_adic"}, {"m", to_string(p.m)}};
    case K::CompositeResidual: return {{"place", "composite_residual"}, {"m", to_string(p.m)}};
    case K::FpResidual: return fp_json("fp_residual");
    case K::FpPAdic: return fp_json("fp_padic");
    case K::GaussPoint:
      return {{"place", "gauss_point"}, {"p", p.p}, {"center", rat_str(p.center)}, {"radius_exp", rat_str(p.exponent)}};
    case K::HKImmediate: {
      Json discs = Json::array();
      for (const auto& d : p.discs->prefix()) discs.push_back(to_json(d));
      return {{"place", "hk_immediate"}, {"p", p.p}, {"discs", discs}};
    }
    case K::HKCase4: {
      Json m = p.major == Place::Major::Empty ? Json("empty")
               : p.major == Place::Major::All ? Json("all")
                                              : Json{{"cut", rat_str(p.cut)}};
      return {{"place", "hk_case4"}, {"p", p.p}, {"center", rat_str(p.center)}, {"M", m}};
    }
    case K::ArchEval: return {{"place", "arch_eval"}, {"a", gauss_to_json(p.arch_center)}};
    case K::ArchInfinitesimal: return {{"place", "arch_infinitesimal"}, {"a", gauss_to_json(p.arch_center)}};
    case K::ArchInfinity: return {{"place", "arch_infinity"}};
    case K::PAdicEval: return {{"place", "padic_eval"}, {"p", p.p}, {"a", rat_str(p.center)}};
    case K::PAdicPower: return {{"place", "padic_power"}, {"p", p.p}, {"t", rat_str(p.exponent)}};
    case K::Retracted: return {{"place", "retract"}, {"inner", to_json(*p.inner)}};
    case K::External: break;
  }
  throw Error(ErrorCode::UnsupportedPlace, p.to_string() + " has no JSON form");
}

Place place_from_json(const Json& j) {
  std::string name = str_of(field(j, "place"));
  auto fp_mod = [&] {
    Prime p = prime_of(field(j, "p"));
    std::vector<unsigned long> c;
    for (const auto& x : field(j, "modulus")) {
      Integer n = int_of(x) % p;
      if (n < 0) n += p;
      c.push_back(n.get_ui());
    }
    return FpPolynomial(p, c);
  };
  if (name == "trivial") {
    std::string ring = j.contains("ring") ? str_of(j.at("ring")) : "Z";
    for (RingKind r : {RingKind::Z, RingKind::Q, RingKind::FpX, RingKind::ZX, RingKind::QX, RingKind::QXFrac}) {
      if (ring_name(r) == ring) return Place::trivial(r);
    }
    bad("unknown ring \"" + ring + "\"");
  }
  if (name == "padic_trop") return Place::padic_trop(prime_of(field(j, "p")));
  if (name == "padic_real") return Place::padic_real(prime_of(field(j, "p")));
  if (name == "archimedean") return Place::archimedean();
  if (name == "residual") return Place::residual(prime_of(field(j, "p")));
  if (name == "composite_adic") return Place::composite_adic(int_of(field(j, "m")));
  if (name == "composite_residual") return Place::composite_residual(int_of(field(j, "m")));
  if (name == "fp_residual") {
    FpPolynomial m = fp_mod();
    return Place::fp_residual(m.modulus(), m);
  }
  if (name == "fp_padic") {
    FpPolynomial m = fp_mod();
    return Place::fp_padic(m.modulus(), m);
  }
  if (name == "gauss_point") {
    return Place::gauss_point(prime_of(field(j, "p")), rat_of(field(j, "center")), rat_of(field(j, "radius_exp")));
  }
  if (name == "hk_immediate") {
    std::vector<Disc> discs;
    for (const auto& d : field(j, "discs")) discs.push_back(disc_from_json(d));
    return Place::hk_immediate(prime_of(field(j, "p")), std::make_shared<const DiscSequence>(std::move(discs)));
  }
  if (name == "hk_case4") {
    Prime p = prime_of(field(j, "p"));
    Rational c = rat_of(field(j, "center"));
    const Json& m = field(j, "M");
    if (m == "empty") return Place::hk_case4(p, c, Place::Major::Empty);
    if (m == "all") return Place::hk_case4(p, c, Place::Major::All);
    return Place::hk_case4(p, c, Place::Major::Cut, rat_of(field(m, "cut")));
  }
  if (name == "arch_eval") return Place::arch_eval(gauss_of(field(j, "a")));
  if (name == "arch_infinitesimal") return Place::arch_infinitesimal(gauss_of(field(j, "a")));
  if (name == "arch_infinity") return Place::arch_infinity();
  if (name == "padic_eval") return Place::padic_eval(prime_of(field(j, "p")), rat_of(field(j, "a")));
  if (name == "padic_power") return Place::padic_power(prime_of(field(j, "p")), rat_of(field(j, "t")));
  if (name == "retract") return Place::retracted(place_from_json(field(j, "inner")));
  bad("unknown place \"" + name + "\"");
}

// ---------------------------------------------------------------------------

Json to_json(const RationalDomain& d) {
  Json nums = Json::array();
  for (const auto& a : d.numerators) nums.push_back(element_or_int(a));
  Json j{{"num", nums}, {"den", element_or_int(d.den)}, {"strict", d.strict}};
  if (!d.den_factors.empty()) {
    Json f = Json::array();
    for (const auto& x : d.den_factors) f.push_back(element_or_int(x));
    j["factors"] = f;
  }
  return j;
}

RationalDomain domain_from_json(const Json& j) {
  RationalDomain d;
  const Json& nums = field(j, "num");
  if (!nums.is_array()) bad("\"num\" must be an array");
  for (const auto& a : nums) d.numerators.push_back(element_or_int_of(a));
  d.den = element_or_int_of(field(j, "den"));
  if (d.den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational domain with zero denominator");
  d.ring = d.den.ring();
  if (j.contains("strict")) {
    if (!j.at("strict").is_boolean()) bad("\"strict\" must be a boolean");
    d.strict = j.at("strict").get<bool>();
  }
  if (j.contains("factors")) {
    for (const auto& f : j.at("factors")) d.den_factors.push_back(element_or_int_of(f));
  }
  return d;
}

Json to_json(const RingDescriptor& r) {
  using K = RingDescriptor::Kind;
  switch (r.kind) {
    case K::LocalizedIntegers: return {{"kind", "localized_integers"}, {"m", to_string(r.m)}, {"topology", "discrete"}};
    case K::PAdicIntegers: return {{"kind", "padic_integers"}, {"p", r.p}};
    case K::PAdicField: return {{"kind", "padic_field"}, {"p", r.p}};
    case K::RealField: return {{"kind", "real_field"}};
    case K::RationalField: return {{"kind", "rational_field"}, {"topology", "discrete"}};
    case K::FiniteField: return {{"kind", "finite_field"}, {"p", r.p}};
    case K::ProductOf: {
      Json parts = Json::array();
      for (const auto& x : r.parts) parts.push_back(to_json(x));
      return {{"kind", "product"}, {"parts", parts}};
    }
  }
  return nullptr;
}

RingDescriptor ring_from_json(const Json& j) {
  std::string kind = str_of(field(j, "kind"));
  if (kind == "localized_integers") return RingDescriptor::localized(int_of(field(j, "m")));
  if (kind == "padic_integers") return RingDescriptor::padic_integers(prime_of(field(j, "p")));
  if (kind == "padic_field") return RingDescriptor::padic_field(prime_of(field(j, "p")));
  if (kind == "real_field") return RingDescriptor::reals();
  if (kind == "rational_field") return RingDescriptor::rationals();
  if (kind == "finite_field") return RingDescriptor::finite_field(prime_of(field(j, "p")));
  if (kind == "product") {
    std::vector<RingDescriptor> parts;
    for (const auto& x : field(j, "parts")) parts.push_back(ring_from_json(x));
    return RingDescriptor::product(std::move(parts));
  }
  bad("unknown ring kind \"" + kind + "\"");
}

Json to_json(const CompletedElement& e) {
  using K = RingDescriptor::Kind;
  switch (e.ring.kind) {
    case K::LocalizedIntegers:
    case K::RationalField: return {{"ring", to_json(e.ring)}, {"exact", rat_str(e.exact)}};
    case K::PAdicIntegers:
    case K::PAdicField:
    case K::FiniteField:
      return {{"ring", to_json(e.ring)}, {"p", e.ring.p}, {"k", e.k}, {"residue", to_string(e.residue)}, {"val", e.val}};
    case K::RealField: return {{"ring", to_json(e.ring)}, {"k", e.k}, {"real", {rat_str(e.lo), rat_str(e.hi)}}};
    case K::ProductOf: {
      Json parts = Json::array();
      for (const auto& x : e.parts) parts.push_back(to_json(x));
      return {{"ring", to_json(e.ring)}, {"parts", parts}};
    }
  }
  return nullptr;
}

CompletedElement completed_from_json(const Json& j) {
  using K = RingDescriptor::Kind;
  CompletedElement e;
  e.ring = ring_from_json(field(j, "ring"));
  switch (e.ring.kind) {
    case K::LocalizedIntegers:
    case K::RationalField: e.exact = rat_of(field(j, "exact")); break;
    case K::PAdicIntegers:
    case K::PAdicField:
    case K::FiniteField:
      e.k = field(j, "k").get<long>();
      e.val = field(j, "val").get<long>();
      e.residue = int_of(field(j, "residue"));
      break;
    case K::RealField: {
      e.k = field(j, "k").get<long>();
      const Json& r = field(j, "real");
      if (!r.is_array() || r.size() != 2) bad("real intervals are [lo, hi]");
      e.lo = rat_of(r[0]);
      e.hi = rat_of(r[1]);
      if (e.lo > e.hi) bad("interval with lo > hi");
      break;
    }
    case K::ProductOf:
      for (const auto& x : field(j, "parts")) e.parts.push_back(completed_from_json(x));
      break;
  }
  return e;
}

Json to_json(const AdeleElement& a) {
  Json ex = Json::object();
  for (const auto& [p, e] : a.exceptional) {
    ex[std::to_string(p)] = {{"p", p}, {"k", e.k}, {"residue", to_string(e.residue)}, {"val", e.val}};
  }
  return {{"exceptional", ex},
          {"real", {rat_str(a.real.lo), rat_str(a.real.hi)}},
          {"real_bits", a.real.k},
          {"tail", a.tail}};
}

AdeleElement adele_from_json(const Json& j) {
  std::map<Prime, CompletedElement> ex;
  for (const auto& [key, v] : field(j, "exceptional").items()) {
    Prime p = prime_of(Json(key));
    CompletedElement e;
    e.ring = RingDescriptor::padic_field(p);
    e.k = field(v, "k").get<long>();
    e.val = field(v, "val").get<long>();
    e.residue = int_of(field(v, "residue"));
    ex.emplace(p, e);
  }
  const Json& r = field(j, "real");
  if (!r.is_array() || r.size() != 2) bad("real intervals are [lo, hi]");
  CompletedElement real;
  real.ring = RingDescriptor::reals();
  real.lo = rat_of(r[0]);
  real.hi = rat_of(r[1]);
  real.k = j.contains("real_bits") ? j.at("real_bits").get<long>() : 0;
  if (j.contains("tail") && j.at("tail") != "integral") bad("the adele tail is always \"integral\"");
  return adele_germ_assemble(std::move(ex), std::move(real));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace speh
