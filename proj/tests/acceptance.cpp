// Runs the twelve acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "speh/affine_line.hpp"
#include "speh/cli.hpp"
#include "speh/json_io.hpp"
#include "speh/huber.hpp"
#include "speh/random.hpp"
#include "speh/sheaf.hpp"

using namespace speh;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

RingElement Z(const Integer& n) { return RingElement::integer(n); }

// Integers with a controlled p-part, so valuation comparisons are not vacuous.
Integer with_p_part(Random& rng, Prime p) {
  Integer n = rng.integer(1, 200);
  if (rng.coin()) n = -n;
  return n * ipow(Integer(p), static_cast<unsigned long>(rng.integer(0, 4)));
}

// ---------------------------------------------------------------------------

Outcome halo_axioms() {
  Random rng(1001);
  std::size_t checks = 0;
  auto halos = catalog_halos();
  for (const auto& h : halos) {
    const HaloValue zero = HaloValue::zero(h), one = HaloValue::one(h);
    if (!(zero < one)) return fail("0 < 1 fails in " + h.to_string());
    for (int t = 0; t < 1000; ++t) {
      HaloValue x = rng.value(h), y = rng.value(h), z = rng.value(h);
      bool ok = x + y == y + x && (x + y) + z == x + (y + z) && x * y == y * x && (x * y) * z == x * (y * z) &&
                x * (y + z) == x * y + x * z && x + zero == x && x * one == x && (x * zero).is_zero() && zero <= x;
      if (x <= y) ok = ok && x + z <= y + z && x * z <= y * z;
      if (x <= y && y <= z) ok = ok && x <= z;
      ++checks;
      if (!ok) return fail("law violated in " + h.to_string() + " at " + x.to_string() + ", " + y.to_string() + ", " + z.to_string());
    }
  }
  return {true, std::to_string(halos.size()) + " descriptors x 1000 triples, " + std::to_string(checks) + " checked"};
}

Outcome classification() {
  auto primes = primes_up_to(100);
  std::size_t n = 0;
  auto expect = [&](const Place& pl, ZClass want) {
    ++n;
    return classify_on_Z(pl) == want;
  };
  for (Prime p : primes) {
    if (!expect(Place::padic_real(p), {ZClass::Tag::PAdic, p}) || !expect(Place::padic_trop(p), {ZClass::Tag::PAdic, p}) ||
        !expect(Place::residual(p), {ZClass::Tag::Residual, p})) {
      return fail("wrong tag at p = " + std::to_string(p));
    }
  }
  if (!expect(Place::archimedean(), {ZClass::Tag::Archimedean, 0}) || !expect(Place::trivial(RingKind::Z), {ZClass::Tag::Trivial, 0})) {
    return fail("wrong tag for the archimedean or trivial place");
  }
  auto pts = speh_points_of_Z(100);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (equivalent_oracle(pts[i].place, pts[j].place)) return fail(pts[i].place.to_string() + " ~ " + pts[j].place.to_string());
    }
  }
  Random rng(1002);
  for (Prime p : {2UL, 3UL, 5UL}) {
    std::vector<ElementTriple> triples;
    for (int t = 0; t < 10000; ++t) triples.push_back({Z(with_p_part(rng, p)), Z(with_p_part(rng, p)), Z(with_p_part(rng, p))});
    if (!mult_bounded_by(Place::padic_trop(p), Place::padic_real(p), triples).ok ||
        !mult_bounded_by(Place::padic_real(p), Place::padic_trop(p), triples).ok) {
      return fail("PAdicTrop/PAdicReal bound fails at p = " + std::to_string(p));
    }
  }
  return {true, std::to_string(n) + " places tagged, " + std::to_string(pts.size()) + " points pairwise distinct, 3 x 10^4 triples"};
}

Outcome ostrowski() {
  Place arch = Place::archimedean();
  Random rng(1003);
  std::vector<ElementPair> pairs;
  for (int t = 0; t < 10000; ++t) pairs.emplace_back(Z(rng.integer(-100000, 100000)), Z(rng.integer(-100000, 100000)));
  auto c = check_prearchimedean_on(arch, pairs);
  if (!c.ok) return fail(c.detail);
  HaloValue prev = evaluate(arch, 0);
  for (long n = 1; n <= 10000; ++n) {
    HaloValue v = evaluate(arch, n);
    if (!(prev < v)) return fail("not increasing at " + std::to_string(n));
    prev = v;
  }
  return {true, "10^4 pairs, increasing on 0..10^4"};
}

Outcome nonarchimedean_lemma() {
  Random rng(1004);
  std::size_t n = 0;
  for (const auto& pl : catalog_places()) {
    std::vector<ElementPair> pairs;
    for (int t = 0; t < 500; ++t) {
      auto draw = [&]() -> RingElement {
        if (pl.domain() == RingKind::FpX) return rng.element(RingKind::FpX, pl.p);
        if (rng.coin()) return Z(rng.integer(-20, 20));
        if (pl.on_polynomial_ring()) return RingElement::zx(rng.integer_polynomial(6, 9));
        return Z(rng.integer(-10000, 10000));
      };
      pairs.emplace_back(draw(), draw());
    }
    bool ultra = check_ultrametric_on(pl, pairs).ok;
    ++n;
    if (ultra != is_nonarchimedean(pl)) return fail("disagreement at " + pl.to_string());
  }
  return {true, std::to_string(n) + " catalog places x 500 pairs"};
}

Outcome composite_six() {
  Place six = Place::composite_adic(6);
  std::vector<RingElement> elems;
  for (long n = -10000; n <= 10000; ++n) elems.push_back(Z(n));
  auto pm = check_power_multiplicative_on(six, elems, 6);
  if (!pm.ok) return fail("power-multiplicativity: " + pm.detail);
  std::vector<ElementPair> sorted;
  for (long a = 1; a <= 30; ++a) {
    for (long b = a; b <= 30; ++b) sorted.emplace_back(Z(a), Z(b));
  }
  auto m = check_multiplicative_on(six, sorted);
  if (m.ok) return fail("no multiplicativity counterexample");
  if (!(m.counterexample == std::vector<RingElement>{Z(2), Z(3)})) {
    return fail("first counterexample " + m.counterexample[0].to_string() + ", " + m.counterexample[1].to_string());
  }
  if (!(evaluate(six, 6) == HaloValue::rational(Rational(1, 6)))) return fail("|6|_6 != 1/6");
  return {true, "power-multiplicative to N = 6 on |n| <= 10^4, first failure (2,3), |6|_6 = 1/6"};
}

Outcome tempered() {
  using Tag = TemperedVerdict::Tag;
  auto Q = HaloDescriptor::rationals(), S = HaloDescriptor::surds();
  auto T1 = HaloDescriptor::tropical(std::vector<std::string>{"t"});
  auto T2 = HaloDescriptor::tropical(std::vector<std::string>{"s", "t"});
  struct Row {
    HaloDescriptor h;
    Tag want;
  };
  std::vector<Row> matrix{
      {T1, Tag::Tempered},
      {T2, Tag::Tempered},
      {HaloDescriptor::trivial(), Tag::Tempered},
      {Q, Tag::Tempered},
      {S, Tag::Tempered},
      {HaloDescriptor::lex(T1, Q), Tag::Tempered},
      {HaloDescriptor::lex(T2, S), Tag::Tempered},
      {HaloDescriptor::lex(T1, HaloDescriptor::lex(T1, Q)), Tag::Tempered},
      {HaloDescriptor::lex(Q, Q), Tag::NotTempered},
      {HaloDescriptor::lex(Q, T1), Tag::Unknown},
      {HaloDescriptor::lex(HaloDescriptor::lex(Q, Q), Q), Tag::Unknown},
      {HaloDescriptor::lex(T1, HaloDescriptor::lex(Q, Q)), Tag::Unknown},
  };
  for (const auto& row : matrix) {
    if (tempered_class(row.h).tag != row.want) return fail("wrong verdict for " + row.h.to_string());
  }
  auto qq = HaloDescriptor::lex(Q, Q);
  auto v = tempered_class(qq);
  HaloValue w = HaloValue::pair(qq, HaloValue::rational(1), HaloValue::rational(2));
  if (!v.witness || !(*v.witness == w) || v.bound_poly != std::vector<unsigned long>{2, 1}) return fail("wrong witness");
  if (!(HaloValue::one(qq) < w)) return fail("witness is not above 1");
  if (!tempered_witness_check(qq, w, {2, 1}, 1000)) return fail("witness check fails at N = 1000");
  // Direct oracle: (1,2)^n = (1, 2^n) and P(n) = (n+2, n+2) with 1 < n+2.
  if (tempered_witness_check(Q, HaloValue::rational(2), {2, 1}, 4)) return fail("2^4 <= 6 accepted");
  return {true, std::to_string(matrix.size()) + " shapes, witness (1,2) holds to N = 1000"};
}

Outcome gauss_hk() {
  Random rng(1007);
  std::vector<Place> cases{Place::padic_eval(3, Rational(2, 5)), Place::gauss_point(5, Rational(1, 2), Rational(-2, 3)),
                           Place::hk_case4(3, 1, Place::Major::Empty), Place::hk_case4(3, 1, Place::Major::All),
                           Place::hk_case4(2, Rational(1, 3), Place::Major::Cut, Rational(4, 3))};
  for (const auto& pl : cases) {
    AffinePoint pt = classify_affine_point(pl);
    hk_classify(pt);
    for (int t = 0; t < 500; ++t) {
      RingElement f = RingElement::qx(rng.rational_polynomial(8, 30, 8)), g = RingElement::qx(rng.rational_polynomial(8, 30, 8));
      if (!(hk_evaluate(pt, f * g) == hk_evaluate(pt, f) * hk_evaluate(pt, g))) {
        return fail("not multiplicative at " + pl.to_string() + " on " + f.to_string() + ", " + g.to_string());
      }
    }
  }
  for (Prime p : {2UL, 3UL, 5UL, 7UL}) {
    AffinePoint pt = classify_affine_point(Place::gauss_point(p, 0, 0));
    for (int t = 0; t < 500; ++t) {
      Polynomial f = rng.integer_polynomial(8, 1000);
      HaloValue v = hk_evaluate(pt, RingElement::zx(f));
      if (f.is_zero()) {
        if (!v.is_zero()) return fail("|0| != 0");
        continue;
      }
      // Oracle: min over coefficients of the exponent of p, by repeated division.
      long best = -1;
      for (const auto& c : f.coeffs()) {
        Integer n = c.get_num();
        if (n == 0) continue;
        long k = 0;
        while (n % p == 0) {
          n /= p;
          ++k;
        }
        if (best < 0 || k < best) best = k;
      }
      if (!(v.as_group().exponents == std::vector<Rational>{Rational(-best)})) return fail("coefficient max differs for " + f.to_string());
    }
  }
  return {true, "5 points x 500 pairs multiplicative, coefficient-max oracle on 4 x 500 polynomials"};
}

// Taylor coefficients at a by binomial expansion, independent of taylor_shift.
std::vector<GaussianRational> binomial_taylor(const Polynomial& f, const GaussianRational& a) {
  std::size_t n = f.coeffs().size();
  std::vector<GaussianRational> b(n, GaussianRational(0));
  std::vector<GaussianRational> apow(n, GaussianRational(1));
  for (std::size_t i = 1; i < n; ++i) apow[i] = apow[i - 1] * a;
  for (std::size_t j = 0; j < n; ++j) {
    Integer binom = 1;
    for (std::size_t k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * (j - k + 1) / k;
      b[j - k] = b[j - k] + GaussianRational(f.coeffs()[j] * Rational(binom)) * apow[k];
    }
  }
  return b;
}

Outcome archimedean_line() {
  Random rng(1008);
  GaussianRational a{Rational(1, 3), Rational(2, 5)};
  Place inf = Place::arch_infinitesimal(a), at_inf = Place::arch_infinity();
  for (int t = 0; t < 500; ++t) {
    Polynomial f = rng.integer_polynomial(6, 9);
    if (f.is_zero()) continue;
    // Occasionally force a root at a by multiplying in the minimal polynomial.
    if (t % 10 == 0) f = f * Polynomial({61, -150, 225});
    auto b = binomial_taylor(f, a);
    std::size_t i0 = 0;
    while (b[i0].is_zero()) ++i0;
    HaloValue v = evaluate(inf, RingElement::zx(f));
    Surd s = v.second().as_surd();
    if (!(v.first().as_group().exponents == std::vector<Rational>{Rational(-static_cast<long>(i0))}) ||
        !(s * s == Surd(b[i0].norm()))) {
      return fail("infinitesimal value differs on " + f.to_string());
    }
    HaloValue w = evaluate(at_inf, RingElement::zx(f));
    if (!(w.first().as_group().exponents == std::vector<Rational>{Rational(f.degree())}) ||
        !(w.second() == HaloValue::surd(Surd(abs(f.leading()))))) {
      return fail("value at infinity differs on " + f.to_string());
    }
  }
  auto e = boundedness_oracle(Place::arch_eval(a)), i = boundedness_oracle(inf), n = boundedness_oracle(at_inf);
  if (!(e.upper && e.lower) || !(i.upper && !i.lower) || !(!n.upper && n.lower)) return fail("boundedness table");
  return {true, "500 polynomials against binomial Taylor expansion, case table matches"};
}

Outcome huber_retraction() {
  Random rng(1009);
  GaussianRational a{Rational(1, 3), Rational(2, 5)};
  Place r = huber_retract(Place::arch_infinitesimal(a)), e = Place::arch_eval(a);
  for (int t = 0; t < 100; ++t) {
    RingElement f = RingElement::zx(rng.integer_polynomial(6, 9));
    if (!(evaluate(r, f) == evaluate(e, f))) return fail("retraction differs from evaluation on " + f.to_string());
  }
  std::size_t n = 0;
  for (const auto& pl : catalog_places()) {
    Place once = huber_retract(pl), twice = huber_retract(once);
    bool nonarch = is_nonarchimedean(pl);
    if (nonarch && once.kind != pl.kind) return fail("retraction moves " + pl.to_string());
    for (int t = 0; t < 30; ++t) {
      RingElement f = pl.domain() == RingKind::FpX ? rng.element(RingKind::FpX, pl.p)
                      : pl.on_polynomial_ring()     ? RingElement::zx(rng.integer_polynomial(6, 9))
                                                    : Z(rng.integer(-1000, 1000));
      HaloValue v = evaluate(once, f);
      if (!(evaluate(twice, f) == v)) return fail("not idempotent at " + pl.to_string());
      if (nonarch && !(evaluate(pl, f) == v)) return fail("not the identity at " + pl.to_string());
    }
    ++n;
  }
  return {true, "100 polynomials, " + std::to_string(n) + " catalog places"};
}

Outcome topology() {
  auto pts = speh_points_of_Z(50);
  Random rng(1010);
  for (int t = 0; t < 200; ++t) {
    RationalDomain d1 = rng.z_domain(), d2 = rng.z_domain();
    d2.strict = d1.strict;
    RationalDomain both = domain_intersection(d1, d2);
    for (const auto& x : pts) {
      if (domain_membership(x, both) != (domain_membership(x, d1) && domain_membership(x, d2))) {
        return fail("intersection disagrees at " + x.place.to_string());
      }
    }
  }
  for (const auto& x : pts) {
    if (spev_subset_check(x) != is_nonarchimedean(x.place)) return fail("Spev test disagrees at " + x.place.to_string());
  }
  return {true, "200 pairs x " + std::to_string(pts.size()) + " points"};
}

Outcome sheaf_table() {
  using RD = RingDescriptor;
  auto domain = [](std::vector<long> nums, long den) {
    RationalDomain d;
    for (long v : nums) d.numerators.push_back(Z(v));
    d.den = Z(den);
    return d;
  };
  for (long p : {2L, 3L, 5L, 7L}) {
    Prime pp = static_cast<Prime>(p);
    if (!(sections_on_domain(domain({}, p)) == RD::localized(p))) return fail("{0 < |m|}");
    if (!(sections_on_domain(domain({p}, 1)) == RD::padic_integers(pp))) return fail("{|p| < 1}");
    if (!(sections_on_domain(domain({p * p}, p)) == RD::padic_field(pp))) return fail("{0 < |p| < 1}");
    if (!(germ_at(SpehPoint{Place::residual(pp)}) == RD::padic_integers(pp))) return fail("germ at residual point");
    if (!(germ_at(SpehPoint{Place::padic_real(pp)}) == RD::padic_field(pp))) return fail("germ at p-adic point");
  }
  if (!(sections_on_domain(domain({}, 30)) == RD::localized(30))) return fail("{0 < |30|}");
  if (!(sections_on_domain(domain({1}, 2)) == RD::reals())) return fail("{1 < |2|}");
  if (!(germ_at(SpehPoint{Place::archimedean()}) == RD::reals())) return fail("germ at the archimedean point");
  if (!(germ_at(SpehPoint{Place::trivial(RingKind::Z)}) == RD::rationals())) return fail("germ at the trivial point");

  Random rng(1011);
  for (Prime p : {2UL, 3UL, 5UL}) {
    Integer mod = ipow(Integer(p), 8);
    auto oracle = [&](const Rational& q) {
      Integer inv, den = q.get_den();
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
      Integer r = (q.get_num() * inv) % mod;
      return r < 0 ? Integer(r + mod) : r;
    };
    auto draw = [&] {
      Rational q = rng.rational(100000, 1000);
      while (q.get_den() % p == 0) q = rng.rational(100000, 1000);
      return q;
    };
    for (int t = 0; t < 500; ++t) {
      Rational a = draw(), b = draw();
      auto ca = completion_map(a, RD::padic_integers(p), 8), cb = completion_map(b, RD::padic_integers(p), 8);
      if (ca.residue != oracle(a) || completed_add(ca, cb).residue != oracle(a + b) || completed_mul(ca, cb).residue != oracle(a * b)) {
        return fail("completion is not a ring map mod " + std::to_string(p) + "^8");
      }
    }
  }
  return {true, "4 shapes x 4 primes, 4 point kinds, 3 x 500 pairs mod p^8"};
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "speh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

Outcome cli_contract() {
  std::vector<std::string> check{"check", "--trials", "30", "--seed", "12345"};
  CliRun first = cli(check), second = cli(check);
  if (first.code != 0 || first.out != second.out) return fail("check output is not reproducible");
  std::vector<std::string> eval{"eval", "--full", "--place", R"({"place":"arch_infinitesimal","a":{"re":"1/3","im":"2/5"}})", "--elem",
                                R"({"ring":"ZX","coeffs":["3","0","7"]})"};
  if (cli(eval).out != cli(eval).out) return fail("eval output is not reproducible");

  Random rng(1012);
  auto halos = catalog_halos();
  for (int t = 0; t < 100; ++t) {
    std::vector<Json> specs{to_json(rng.place()), to_json(rng.value(rng.pick(halos))), to_json(rng.z_domain()),
                            to_json(rng.element(RingKind::QXFrac)), to_json(rng.element(RingKind::FpX, 5))};
    std::vector<Json> again{to_json(place_from_json(parse_json(specs[0].dump()))), to_json(value_from_json(parse_json(specs[1].dump()))),
                            to_json(domain_from_json(parse_json(specs[2].dump()))), to_json(element_from_json(parse_json(specs[3].dump()))),
                            to_json(element_from_json(parse_json(specs[4].dump())))};
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (specs[i].dump() != again[i].dump()) return fail("round trip changes " + specs[i].dump());
    }
  }

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  std::vector<Case> cases{
      {{"classify", "--place", R"({"place":"padic_real","p":7})"}, 0},
      {{"classify", "--place", R"({"place":"padic_real","p":)"}, 1},
      {{"classify", "--place", R"({"place":"unknown"})"}, 1},
      {{"classify"}, 1},
      {{"eval", "--place", R"({"place":"archimedean"})", "--elem", R"({"ring":"Z","n":"x"})"}, 1},
      {{"nonsense"}, 1},
      {{"classify", "--place", R"({"place":"padic_real","p":9})"}, 2},
      {{"eval", "--place", R"({"place":"padic_real","p":3})", "--elem", R"({"ring":"ZX","coeffs":["1","1"]})"}, 2},
      {{"sections", "--domain", R"({"num":["1"],"den":"0"})"}, 2},
  };
  for (const auto& c : cases) {
    int code = cli(c.args).code;
    if (code != c.code) return fail("exit code " + std::to_string(code) + " for " + c.args[0] + " " + (c.args.size() > 2 ? c.args[2] : ""));
  }
  return {true, "byte-identical reruns, 500 specs round-trip, " + std::to_string(cases.size()) + " exit-code cases"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "halo axiom suite", halo_axioms},
      {2, "classification of Speh^m(Z)", classification},
      {3, "archimedean seminorm on Z", ostrowski},
      {4, "non-archimedean iff |2| <= 1", nonarchimedean_lemma},
      {5, "|.|_6 example", composite_six},
      {6, "tempered growth", tempered},
      {7, "Gauss/HK valuations", gauss_hk},
      {8, "archimedean line", archimedean_line},
      {9, "Huber retraction", huber_retraction},
      {10, "rational-domain topology", topology},
      {11, "sheaf table and completions", sheaf_table},
      {12, "CLI contract", cli_contract},
  };
  int failures = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    if (!o.ok) ++failures;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
