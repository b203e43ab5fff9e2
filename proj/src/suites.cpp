#include "speh/suites.hpp"

#include <functional>

#include "speh/huber.hpp"
#include "speh/random.hpp"

namespace speh {

namespace {

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Random suite_rng(const std::string& name, std::uint64_t seed) { return Random(seed ^ name_hash(name)); }

Json values_json(const std::vector<HaloValue>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json elements_json(const std::vector<RingElement>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json place_json_or_name(const Place& p) {
  try {
    return to_json(p);
  } catch (const Error&) {
    return p.to_string();
  }
}

void fail(SuiteReport& r, Json counterexample, std::string detail) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = std::move(counterexample);
  r.detail = std::move(detail);
}

RingElement sample_for(Random& rng, const Place& place) {
  switch (place.domain()) {
    case RingKind::Z: return RingElement::integer(rng.integer(-1000, 1000));
    case RingKind::Q: return RingElement::rational(rng.rational(1000, 200));
    case RingKind::FpX: return rng.element(RingKind::FpX, place.p);
    default: return RingElement::zx(rng.integer_polynomial(6, 9));
  }
}

void record(SuiteReport& r, const Place& place, const CheckResult& c) {
  ++r.checks;
  if (!c.ok) fail(r, {{"place", place_json_or_name(place)}, {"elements", elements_json(c.counterexample)}}, c.detail);
}

void halo_axioms(SuiteReport& r, Random& rng, std::size_t trials) {
  using std::strong_ordering;
  for (const auto& h : catalog_halos()) {
    const HaloValue zero = HaloValue::zero(h), one = HaloValue::one(h);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
      HaloValue x = rng.value(h), y = rng.value(h), z = rng.value(h);
      auto law = [&](bool ok, const char* what) {
        ++r.checks;
        if (!ok) fail(r, values_json({x, y, z}), std::string(what) + " fails in " + h.to_string());
      };
      law(x + y == y + x, "commutativity of +");
      law((x + y) + z == x + (y + z), "associativity of +");
      law(x * y == y * x, "commutativity of *");
      law((x * y) * z == x * (y * z), "associativity of *");
      law(x * (y + z) == x * y + x * z, "distributivity");
      law(x + zero == x && x * one == x && x * zero == zero, "identities");
      law(zero <= x, "positivity");
      if (x <= y) {
        law(x + z <= y + z, "order compatibility of +");
        law(x * z <= y * z, "order compatibility of *");
      }
    }
  }
}

void ordered_group(SuiteReport& r, Random& rng, std::size_t trials) {
  GroupDescriptor g({"a", "b", "c"});
  auto elem = [&] {
    std::vector<Rational> e(3);
    for (auto& x : e) x = rng.coin(0.3) ? Rational(0) : rng.rational(5, 3);
    return GroupElement(g, e);
  };
  for (std::size_t t = 0; t < trials && r.passed; ++t) {
    GroupElement x = elem(), y = elem(), z = elem();
    auto law = [&](bool ok, const char* what) {
      ++r.checks;
      if (!ok) {
        Json c = Json::array();
        for (const auto* e : {&x, &y, &z}) c.push_back(to_json(HaloValue::group(HaloDescriptor::tropical(g), *e)));
        fail(r, c, what);
      }
    };
    law(group_mul(group_mul(x, y), z) == group_mul(x, group_mul(y, z)), "associativity");
    law(group_mul(x, group_inv(x)).is_identity(), "inverses");
    law((group_cmp(x, y) < 0) == (group_cmp(group_mul(x, z), group_mul(y, z)) < 0), "translation invariance");
    if (!x.is_identity()) {
      ConvexSubgroup h = convex_subgroup_generated(x);
      GroupElement lo = group_cmp(x, GroupElement::identity(g)) < 0 ? x : group_inv(x);
      GroupElement hi = group_inv(lo);
      bool between = group_cmp(lo, y) <= 0 && group_cmp(y, hi) <= 0;
      law(h.contains(x) && (!between || h.contains(y)), "convexity of the generated subgroup");
    }
  }
}

void classification(SuiteReport& r, Random& rng, std::size_t trials) {
  auto primes = primes_up_to(100);
  for (std::size_t t = 0; t < trials && r.passed; ++t) {
    Prime p = rng.pick(primes);
    Place place;
    ZClass expected;
    switch (rng.index(5)) {
      case 0: place = Place::padic_real(p); expected = {ZClass::Tag::PAdic, p}; break;
      case 1: place = Place::padic_trop(p); expected = {ZClass::Tag::PAdic, p}; break;
      case 2: place = Place::residual(p); expected = {ZClass::Tag::Residual, p}; break;
      case 3: place = Place::archimedean(); expected = {ZClass::Tag::Archimedean, 0}; break;
      default: place = Place::trivial(RingKind::Z); expected = {ZClass::Tag::Trivial, 0}; break;
    }
    ZClass got = classify_on_Z(place, 200);
    ++r.checks;
    if (!(got == expected)) {
      fail(r, {{"place", to_json(place)}}, "classified as " + got.to_string() + ", expected " + expected.to_string());
    }
  }
}

std::vector<ElementPair> sample_pairs(Random& rng, const Place& place, std::size_t n) {
  std::vector<ElementPair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(sample_for(rng, place), sample_for(rng, place));
  return pairs;
}

void nonarchimedean(SuiteReport& r, Random& rng, std::size_t trials) {
  for (const auto& place : catalog_places()) {
    auto pairs = sample_pairs(rng, place, trials);
    pairs.insert(pairs.begin(), {RingElement::integer(1), RingElement::integer(1)});
    bool ultra = check_ultrametric_on(place, pairs).ok;
    ++r.checks;
    if (ultra != is_nonarchimedean(place)) {
      fail(r, {{"place", to_json(place)}}, "is_nonarchimedean disagrees with ultrametric sampling");
    }
  }
}

void multiplicativity(SuiteReport& r, Random& rng, std::size_t trials) {
  for (const auto& place : catalog_places()) {
    if (!place.is_multiplicative()) continue;
    record(r, place, check_multiplicative_on(place, sample_pairs(rng, place, trials)));
  }
}

void negation_symmetry(SuiteReport& r, Random& rng, std::size_t trials, bool inject_broken) {
  auto places = catalog_places();
  if (inject_broken) places.push_back(broken_negation_place());
  for (const auto& place : places) {
    std::vector<RingElement> elems;
    for (std::size_t i = 0; i < trials; ++i) elems.push_back(sample_for(rng, place));
    record(r, place, negation_symmetry_check(place, elems));
  }
}

void huber(SuiteReport& r, Random& rng, std::size_t trials) {
  for (const auto& place : catalog_places()) {
    Place once = huber_retract(place);
    Place twice = huber_retract(once);
    bool nonarch = is_nonarchimedean(place);
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
      RingElement f = sample_for(rng, place);
      HaloValue v1 = evaluate(once, f);
      ++r.checks;
      if (!(evaluate(twice, f) == v1)) {
        fail(r, {{"place", to_json(place)}, {"elements", elements_json({f})}}, "retraction is not idempotent");
      } else if (nonarch && !(evaluate(place, f) == v1)) {
        fail(r, {{"place", to_json(place)}, {"elements", elements_json({f})}},
             "retraction moves a non-archimedean place");
      }
    }
  }
}

void topology(SuiteReport& r, Random& rng, std::size_t trials) {
  auto points = speh_points_of_Z(30);
  for (std::size_t t = 0; t < trials && r.passed; ++t) {
    RationalDomain d1 = rng.z_domain(), d2 = rng.z_domain();
    d2.strict = d1.strict;
    RationalDomain both = domain_intersection(d1, d2);
    for (const auto& x : points) {
      ++r.checks;
      if (domain_membership(x, both) != (domain_membership(x, d1) && domain_membership(x, d2))) {
        fail(r, {{"domains", {to_json(d1), to_json(d2)}}, {"point", to_json(x.place)}},
             "intersection formula disagrees with set intersection");
        break;
      }
    }
  }
}

void completion(SuiteReport& r, Random& rng, std::size_t trials) {
  for (Prime p : {2UL, 3UL, 5UL}) {
    RingDescriptor zp = RingDescriptor::padic_integers(p);
    auto p_integral = [&] {
      Rational q = rng.rational(10000, 500);
      while (q.get_den() % p == 0) q = rng.rational(10000, 500);
      return q;
    };
    for (std::size_t t = 0; t < trials && r.passed; ++t) {
      Rational a = p_integral(), b = p_integral();
      CompletedElement ca = completion_map(a, zp, 8), cb = completion_map(b, zp, 8);
      ++r.checks;
      bool ok = completed_add(ca, cb) == completion_map(a + b, zp, 8) &&
                completed_mul(ca, cb) == completion_map(a * b, zp, 8);
      if (!ok) fail(r, {{"p", p}, {"pair", {to_string(a), to_string(b)}}}, "completion is not a ring map mod p^8");
    }
  }
}

void roundtrip(SuiteReport& r, Random& rng, std::size_t trials) {
  auto halos = catalog_halos();
  static const std::vector<RingKind> rings{RingKind::Z, RingKind::Q, RingKind::ZX,
                                           RingKind::QX, RingKind::FpX, RingKind::QXFrac};
  for (std::size_t t = 0; t < trials && r.passed; ++t) {
    std::vector<Json> specs{to_json(rng.place()), to_json(rng.value(rng.pick(halos))),
                            to_json(rng.element(rng.pick(rings), 5)), to_json(rng.z_domain())};
    std::vector<Json> again{to_json(place_from_json(specs[0])), to_json(value_from_json(specs[1])),
                            to_json(element_from_json(specs[2])), to_json(domain_from_json(specs[3]))};
    for (std::size_t i = 0; i < specs.size(); ++i) {
      ++r.checks;
      if (specs[i].dump() != again[i].dump()) fail(r, specs[i], "serialization does not round-trip");
    }
  }
}

}  // namespace

Place broken_negation_place() {
  ExternalSpec spec;
  spec.name = "broken_negation";
  spec.ring = RingKind::Z;
  spec.codomain = HaloDescriptor::rationals();
  spec.evaluate = [](const RingElement& e) {
    Integer n = e.as_integer();
    if (n == 0) return HaloValue::zero(HaloDescriptor::rationals());
    return HaloValue::rational(n > 0 ? Rational(n) : Rational(Integer(-2 * n)));
  };
  return Place::external_place(std::move(spec));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"halo_axioms", "ordered_group",     "classification",
                                              "nonarchimedean", "multiplicativity", "negation_symmetry",
                                              "huber",       "topology",          "completion",
                                              "roundtrip"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport r;
  r.name = name;
  Random rng = suite_rng(name, options.seed);
  std::size_t n = options.trials;
  if (name == "halo_axioms") halo_axioms(r, rng, n);
  else if (name == "ordered_group") ordered_group(r, rng, n);
  else if (name == "classification") classification(r, rng, n);
  else if (name == "nonarchimedean") nonarchimedean(r, rng, n);
  else if (name == "multiplicativity") multiplicativity(r, rng, n);
  else if (name == "negation_symmetry") negation_symmetry(r, rng, n, options.inject_broken);
  else if (name == "huber") huber(r, rng, n);
  else if (name == "topology") topology(r, rng, n);
  else if (name == "completion") completion(r, rng, n);
  else if (name == "roundtrip") roundtrip(r, rng, n);
  else throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + name + "\"");
  return r;
}

Json check_suites(const std::vector<std::string>& names, const SuiteOptions& options) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
    else expanded.push_back(n);
  }
  Json suites = Json::array();
  bool passed = true;
  for (const auto& n : expanded) {
    SuiteReport r = run_suite(n, options);
    passed = passed && r.passed;
    Json s{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"counterexample", r.counterexample}};
    if (!r.detail.empty()) s["detail"] = r.detail;
    suites.push_back(std::move(s));
  }
  return {{"passed", passed}, {"seed", options.seed}, {"trials", options.trials}, {"suites", suites}};
}

}  // namespace speh
