#include "speh/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#include "speh/affine_line.hpp"
#include "speh/json_io.hpp"
#include "speh/suites.hpp"

namespace speh {

namespace {

struct Args {
  std::string place, elem, elem2, op = "add", domain, point;
  std::vector<std::string> suites;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::optional<unsigned long> prime_bound;
  long precision = 20;
  bool full = false;
  bool inject_broken = false;
};

unsigned long prime_bound(const Args& a, unsigned long fallback) {
  if (a.prime_bound) return *a.prime_bound;
  if (const char* env = std::getenv("SPEH_PRIME_BOUND")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 2) throw Error(ErrorCode::ParseError, "SPEH_PRIME_BOUND must be an integer >= 2");
    return v;
  }
  return fallback;
}

std::string_view tag_name(ZClass::Tag t) {
  switch (t) {
    case ZClass::Tag::Trivial: return "trivial";
    case ZClass::Tag::PAdic: return "padic";
    case ZClass::Tag::Residual: return "residual";
    case ZClass::Tag::Archimedean: return "archimedean";
  }
  return "";
}

Json cmd_classify(const Args& a) {
  Place place = place_from_json(parse_json(a.place));
  ZClass c = classify_on_Z(place, prime_bound(a, kDefaultPrimeBound));
  Json out{{"nonarchimedean", is_nonarchimedean(place)}, {"on_Z", tag_name(c.tag)}};
  if (c.p != 0) out["p"] = c.p;
  if (place.on_polynomial_ring() && place.kind != Place::Kind::Trivial) {
    out["affine_type"] = affine_type_name(classify_affine_point(place).type);
  }
  return out;
}

Json cmd_eval(const Args& a) {
  Place place = place_from_json(parse_json(a.place));
  HaloValue v = evaluate(place, element_from_json(parse_json(a.elem)));
  Json out{{"value", v.to_string()}};
  if (a.full) out["halo_value"] = to_json(v);
  return out;
}

Json cmd_domain(const Args& a) {
  RationalDomain d = domain_from_json(parse_json(a.domain));
  if (!a.point.empty()) return {{"member", domain_membership(place_from_json(parse_json(a.point)), d)}};
  Json members = Json::array();
  for (const auto& x : speh_points_of_Z(prime_bound(a, 50))) {
    if (domain_membership(x, d)) members.push_back(to_json(x.place));
  }
  return {{"domain", to_json(d)}, {"members", members}};
}

Json cmd_spectrum(const Args& a) {
  Json points = Json::array();
  for (const auto& x : speh_points_of_Z(prime_bound(a, 50))) {
    points.push_back({{"point", to_json(x.place)}, {"spev", spev_subset_check(x)}, {"germ", to_json(germ_at(x))}});
  }
  return {{"count", points.size()}, {"points", points}};
}

Json cmd_germ(const Args& a) {
  Place place = place_from_json(parse_json(a.point));
  return {{"germ", to_json(germ_at(SpehPoint{place}))}};
}

Json cmd_sections(const Args& a) {
  return {{"sections", to_json(sections_on_domain(domain_from_json(parse_json(a.domain))))}};
}

Json cmd_check(const Args& a) {
  SuiteOptions o;
  o.seed = a.seed;
  o.trials = a.trials;
  o.inject_broken = a.inject_broken;
  return check_suites(a.suites.empty() ? std::vector<std::string>{"all"} : a.suites, o);
}

Rational rational_arg(const std::string& text) {
  RingElement e = element_from_json(parse_json(text));
  if (e.ring() != RingKind::Z && e.ring() != RingKind::Q) {
    throw Error(ErrorCode::DomainMismatch, "adeles take elements of Z or Q");
  }
  return e.as_rational();
}

Json cmd_adele(const Args& a) {
  if (a.precision < 1) throw Error(ErrorCode::RangeError, "precision must be positive");
  AdeleElement x = adele_diagonal(rational_arg(a.elem), a.precision, 4 * a.precision);
  if (!a.elem2.empty()) {
    AdeleElement y = adele_diagonal(rational_arg(a.elem2), a.precision, 4 * a.precision);
    if (a.op == "add") x = adele_add(x, y);
    else if (a.op == "mul") x = adele_mul(x, y);
    else throw Error(ErrorCode::ParseError, "--op must be add or mul");
  }
  return {{"adele", to_json(x)}};
}

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact halos, generalized seminorms and spectra over Z", "speh"};
  app.require_subcommand(1);
  Args a;

  auto* classify = app.add_subcommand("classify", "Classify a place on Z");
  classify->add_option("--place", a.place, "place JSON")->required();
  classify->add_option("--prime-bound", a.prime_bound, "prime search bound");

  auto* eval = app.add_subcommand("eval", "Evaluate a place on an element");
  eval->add_option("--place", a.place, "place JSON")->required();
  eval->add_option("--elem", a.elem, "element JSON")->required();
  eval->add_flag("--full", a.full, "include the structured halo value");

  auto* domain = app.add_subcommand("domain", "Rational-domain membership");
  domain->add_option("--domain", a.domain, "domain JSON")->required();
  domain->add_option("--point", a.point, "point JSON; omit to list members");
  domain->add_option("--prime-bound", a.prime_bound, "largest prime enumerated");

  auto* spectrum = app.add_subcommand("spectrum", "Enumerate points of the spectrum of Z");
  spectrum->add_option("--prime-bound", a.prime_bound, "largest prime enumerated");

  auto* germ = app.add_subcommand("germ", "Germ of the structure sheaf at a point");
  germ->add_option("--point", a.point, "point JSON")->required();

  auto* sections = app.add_subcommand("sections", "Sections over a rational domain");
  sections->add_option("--domain", a.domain, "domain JSON")->required();

  auto* check = app.add_subcommand("check", "Run property suites");
  check->add_option("--suite", a.suites, "suite name, repeatable; default all");
  check->add_option("--trials", a.trials, "trials per suite")->check(CLI::PositiveNumber);
  check->add_option("--seed", a.seed, "random seed");
  check->add_flag("--inject-broken", a.inject_broken, "add a place that violates negation symmetry");

  auto* adele = app.add_subcommand("adele", "Diagonal adele of a rational");
  adele->add_option("--elem", a.elem, "element JSON")->required();
  adele->add_option("--elem2", a.elem2, "second element JSON");
  adele->add_option("--op", a.op, "add or mul");
  adele->add_option("--precision", a.precision, "p-adic digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(err, "ParseError", e.what());
    return 1;
  }

  try {
    Json result;
    if (*classify) result = cmd_classify(a);
    else if (*eval) result = cmd_eval(a);
    else if (*domain) result = cmd_domain(a);
    else if (*spectrum) result = cmd_spectrum(a);
    else if (*germ) result = cmd_germ(a);
    else if (*sections) result = cmd_sections(a);
    else if (*check) result = cmd_check(a);
    else result = cmd_adele(a);
    out << result.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    print_error(err, error_code_name(e.code()), e.what());
    return e.code() == ErrorCode::ParseError ? 1 : 2;
  } catch (const Json::exception& e) {
    print_error(err, "ParseError", e.what());
    return 1;
  }
}

}  // namespace speh
