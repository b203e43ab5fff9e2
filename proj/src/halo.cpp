#include "speh/halo.hpp"

#include <sstream>

namespace speh {

HaloDescriptor HaloDescriptor::trivial() { return {}; }

HaloDescriptor HaloDescriptor::tropical(GroupDescriptor g) {
  HaloDescriptor h;
  h.kind = Kind::Tropical;
  h.group = std::move(g);
  return h;
}

HaloDescriptor HaloDescriptor::tropical(std::vector<std::string> labels) {
  return tropical(GroupDescriptor(std::move(labels)));
}

HaloDescriptor HaloDescriptor::rationals() {
  HaloDescriptor h;
  h.kind = Kind::NonnegRationals;
  return h;
}

HaloDescriptor HaloDescriptor::surds() {
  HaloDescriptor h;
  h.kind = Kind::NonnegSurds;
  return h;
}

namespace {

// x < y implies x + z < y + z.
bool strictly_monotone_add(const HaloDescriptor& h) {
  switch (h.kind) {
    case HaloDescriptor::Kind::NonnegRationals:
    case HaloDescriptor::Kind::NonnegSurds:
      return true;
    case HaloDescriptor::Kind::Lex:
      return strictly_monotone_add(*h.first) && strictly_monotone_add(*h.second);
    default:
      return false;
  }
}

}  // namespace

HaloDescriptor HaloDescriptor::lex(const HaloDescriptor& a, const HaloDescriptor& b) {
  if (!a.is_idempotent() && !strictly_monotone_add(a)) {
    throw Error(ErrorCode::InvalidArgument,
                "the first factor of a lex product must be idempotent or strictly monotone: " + a.to_string());
  }
  HaloDescriptor h;
  h.kind = Kind::Lex;
  h.first = std::make_shared<const HaloDescriptor>(a);
  h.second = std::make_shared<const HaloDescriptor>(b);
  return h;
}

bool HaloDescriptor::is_idempotent() const {
  switch (kind) {
    case Kind::Trivial:
    case Kind::Tropical:
      return true;
    case Kind::Lex:
      return first->is_idempotent() && second->is_idempotent();
    default:
      return false;
  }
}

std::string HaloDescriptor::to_string() const {
  switch (kind) {
    case Kind::Trivial:
      return "Trivial";
    case Kind::Tropical: {
      std::string s = "Trop(";
      for (std::size_t i = 0; i < group.labels.size(); ++i) s += (i ? "," : "") + group.labels[i];
      return s + ")";
    }
    case Kind::NonnegRationals:
      return "Q+";
    case Kind::NonnegSurds:
      return "Surd+";
    case Kind::Lex:
      return "Lex(" + first->to_string() + ", " + second->to_string() + ")";
  }
  return "?";
}

bool operator==(const HaloDescriptor& a, const HaloDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case HaloDescriptor::Kind::Tropical:
      return a.group == b.group;
    case HaloDescriptor::Kind::Lex:
      return *a.first == *b.first && *a.second == *b.second;
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------

HaloValue HaloValue::zero(const HaloDescriptor& h) { return HaloValue(h, true, std::monostate{}); }

HaloValue HaloValue::one(const HaloDescriptor& h) {
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
      return HaloValue(h, false, std::monostate{});
    case HaloDescriptor::Kind::Tropical:
      return HaloValue(h, false, GroupElement::identity(h.group));
    case HaloDescriptor::Kind::NonnegRationals:
      return HaloValue(h, false, Rational(1));
    case HaloDescriptor::Kind::NonnegSurds:
      return HaloValue(h, false, Surd(Rational(1)));
    case HaloDescriptor::Kind::Lex:
      return pair(h, one(*h.first), one(*h.second));
  }
  return zero(h);
}

HaloValue HaloValue::group(const HaloDescriptor& h, GroupElement g) {
  if (h.kind != HaloDescriptor::Kind::Tropical || !(g.group == h.group)) {
    throw Error(ErrorCode::MixedHalos, "group element does not belong to " + h.to_string());
  }
  return HaloValue(h, false, std::move(g));
}

HaloValue HaloValue::group(const HaloDescriptor& h, std::vector<Rational> exponents) {
  return group(h, GroupElement(h.group, std::move(exponents)));
}

HaloValue HaloValue::rational(const Rational& q) {
  int s = sgn(q);
  if (s < 0) throw Error(ErrorCode::InvalidArgument, "negative value in Q+");
  if (s == 0) return zero(HaloDescriptor::rationals());
  return HaloValue(HaloDescriptor::rationals(), false, q);
}

HaloValue HaloValue::surd(const Surd& s) {
  if (s.is_zero()) return zero(HaloDescriptor::surds());
  return HaloValue(HaloDescriptor::surds(), false, s);
}

HaloValue HaloValue::pair(const HaloDescriptor& h, HaloValue a, HaloValue b) {
  if (h.kind != HaloDescriptor::Kind::Lex || !(a.halo() == *h.first) || !(b.halo() == *h.second)) {
    throw Error(ErrorCode::MixedHalos, "pair components do not match " + h.to_string());
  }
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidArgument, "lex pair components must be nonzero");
  return HaloValue(h, false, std::vector<HaloValue>{std::move(a), std::move(b)});
}

const GroupElement& HaloValue::as_group() const { return std::get<GroupElement>(payload_); }
const Rational& HaloValue::as_rational() const { return std::get<Rational>(payload_); }
const Surd& HaloValue::as_surd() const { return std::get<Surd>(payload_); }
const HaloValue& HaloValue::first() const { return std::get<std::vector<HaloValue>>(payload_)[0]; }
const HaloValue& HaloValue::second() const { return std::get<std::vector<HaloValue>>(payload_)[1]; }

std::string HaloValue::to_string() const {
  if (zero_) return "0";
  switch (halo_.kind) {
    case HaloDescriptor::Kind::Trivial:
      return "1";
    case HaloDescriptor::Kind::Tropical: {
      const auto& g = as_group();
      if (g.is_identity()) return "1";
      std::ostringstream os;
      bool first_factor = true;
      for (std::size_t i = 0; i < g.exponents.size(); ++i) {
        if (sgn(g.exponents[i]) == 0) continue;
        if (!first_factor) os << "*";
        first_factor = false;
        os << halo_.group.labels[i] << "^" << speh::to_string(g.exponents[i]);
      }
      return os.str();
    }
    case HaloDescriptor::Kind::NonnegRationals:
      return speh::to_string(as_rational());
    case HaloDescriptor::Kind::NonnegSurds:
      return as_surd().to_string();
    case HaloDescriptor::Kind::Lex:
      return "(" + first().to_string() + ", " + second().to_string() + ")";
  }
  return "?";
}

bool operator==(const HaloValue& a, const HaloValue& b) {
  return a.halo_ == b.halo_ && a.zero_ == b.zero_ && a.payload_ == b.payload_;
}

// ---------------------------------------------------------------------------

namespace {

void check_members(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y) {
  if (!(x.halo() == h) || !(y.halo() == h)) {
    throw Error(ErrorCode::MixedHalos, x.halo().to_string() + " / " + y.halo().to_string() + " vs " + h.to_string());
  }
}

}  // namespace

std::strong_ordering halo_cmp(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y) {
  check_members(h, x, y);
  if (x.is_zero() || y.is_zero()) {
    if (x.is_zero() && y.is_zero()) return std::strong_ordering::equal;
    return x.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
      return std::strong_ordering::equal;
    case HaloDescriptor::Kind::Tropical:
      return group_cmp(x.as_group(), y.as_group());
    case HaloDescriptor::Kind::NonnegRationals: {
      int c = cmp(x.as_rational(), y.as_rational());
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case HaloDescriptor::Kind::NonnegSurds:
      return x.as_surd() <=> y.as_surd();
    case HaloDescriptor::Kind::Lex: {
      auto c = halo_cmp(*h.first, x.first(), y.first());
      if (c != std::strong_ordering::equal) return c;
      return halo_cmp(*h.second, x.second(), y.second());
    }
  }
  return std::strong_ordering::equal;
}

HaloValue halo_add(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y) {
  check_members(h, x, y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
    case HaloDescriptor::Kind::Tropical:
      return halo_cmp(h, x, y) == std::strong_ordering::less ? y : x;
    case HaloDescriptor::Kind::NonnegRationals:
      return HaloValue::rational(x.as_rational() + y.as_rational());
    case HaloDescriptor::Kind::NonnegSurds:
      return HaloValue::surd(x.as_surd() + y.as_surd());
    case HaloDescriptor::Kind::Lex: {
      if (h.first->is_idempotent()) {
        // Leading-term addition: the larger first component wins outright.
        auto c = halo_cmp(*h.first, x.first(), y.first());
        if (c == std::strong_ordering::less) return y;
        if (c == std::strong_ordering::greater) return x;
        return HaloValue::pair(h, x.first(), halo_add(*h.second, x.second(), y.second()));
      }
      return HaloValue::pair(h, halo_add(*h.first, x.first(), y.first()), halo_add(*h.second, x.second(), y.second()));
    }
  }
  return x;
}

HaloValue halo_mul(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y) {
  check_members(h, x, y);
  if (x.is_zero()) return x;
  if (y.is_zero()) return y;
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
      return x;
    case HaloDescriptor::Kind::Tropical:
      return HaloValue::group(h, group_mul(x.as_group(), y.as_group()));
    case HaloDescriptor::Kind::NonnegRationals:
      return HaloValue::rational(x.as_rational() * y.as_rational());
    case HaloDescriptor::Kind::NonnegSurds:
      return HaloValue::surd(x.as_surd() * y.as_surd());
    case HaloDescriptor::Kind::Lex:
      return HaloValue::pair(h, halo_mul(*h.first, x.first(), y.first()), halo_mul(*h.second, x.second(), y.second()));
  }
  return x;
}

HaloValue operator+(const HaloValue& x, const HaloValue& y) { return halo_add(x.halo(), x, y); }
HaloValue operator*(const HaloValue& x, const HaloValue& y) { return halo_mul(x.halo(), x, y); }
std::strong_ordering operator<=>(const HaloValue& x, const HaloValue& y) { return halo_cmp(x.halo(), x, y); }

HaloValue halo_pow(const HaloValue& x, unsigned long n) {
  HaloValue result = HaloValue::one(x.halo());
  HaloValue base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

HaloValue halo_inverse(const HaloValue& x) {
  const HaloDescriptor& h = x.halo();
  if (x.is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
      return x;
    case HaloDescriptor::Kind::Tropical:
      return HaloValue::group(h, group_inv(x.as_group()));
    case HaloDescriptor::Kind::NonnegRationals:
      return HaloValue::rational(1 / x.as_rational());
    case HaloDescriptor::Kind::NonnegSurds: {
      const auto& terms = x.as_surd().terms();
      if (terms.size() != 1) throw Error(ErrorCode::NotRepresentable, "inverse of a multi-term surd");
      const auto& [d, c] = *terms.begin();
      // 1/(c sqrt d) = sqrt d / (c d)
      return HaloValue::surd(Surd::from_terms({{Rational(1) / (c * Rational(d)), d}}));
    }
    case HaloDescriptor::Kind::Lex:
      return HaloValue::pair(h, halo_inverse(x.first()), halo_inverse(x.second()));
  }
  return x;
}

HaloValue halo_div(const HaloValue& x, const HaloValue& y) {
  if (y.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero value");
  if (x.is_zero()) return x;
  return x * halo_inverse(y);
}

HaloValue halo_natural(const HaloDescriptor& h, const Integer& n) {
  HaloValue result = HaloValue::zero(h);
  HaloValue unit = HaloValue::one(h);
  std::size_t bits = sgn(n) > 0 ? mpz_sizeinbase(n.get_mpz_t(), 2) : 0;
  for (std::size_t i = bits; i-- > 0;) {
    result = halo_add(h, result, result);
    if (mpz_tstbit(n.get_mpz_t(), i)) result = halo_add(h, result, unit);
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

bool is_archimedean_field(const HaloDescriptor& h) {
  return h.kind == HaloDescriptor::Kind::NonnegRationals || h.kind == HaloDescriptor::Kind::NonnegSurds;
}

HaloValue two_in(const HaloDescriptor& h) {
  return h.kind == HaloDescriptor::Kind::NonnegRationals ? HaloValue::rational(2) : HaloValue::surd(Surd(Rational(2)));
}

}  // namespace

TemperedVerdict tempered_class(const HaloDescriptor& h) {
  using Tag = TemperedVerdict::Tag;
  switch (h.kind) {
    case HaloDescriptor::Kind::Trivial:
    case HaloDescriptor::Kind::Tropical:
    case HaloDescriptor::Kind::NonnegRationals:
    case HaloDescriptor::Kind::NonnegSurds:
      return {Tag::Tempered, std::nullopt, {}};
    case HaloDescriptor::Kind::Lex: {
      if (h.first->kind == HaloDescriptor::Kind::Tropical || h.first->kind == HaloDescriptor::Kind::Trivial) {
        if (tempered_class(*h.second).tag == Tag::Tempered) return {Tag::Tempered, std::nullopt, {}};
        return {};
      }
      if (is_archimedean_field(*h.first) && is_archimedean_field(*h.second)) {
        HaloValue w = HaloValue::pair(h, HaloValue::one(*h.first), two_in(*h.second));
        return {Tag::NotTempered, w, {2, 1}};
      }
      return {};
    }
  }
  return {};
}

bool tempered_witness_check(const HaloDescriptor& h, const HaloValue& x, const std::vector<unsigned long>& poly,
                            unsigned long n_max) {
  if (!(x.halo() == h)) throw Error(ErrorCode::MixedHalos, "witness does not belong to " + h.to_string());
  HaloValue power = HaloValue::one(h);
  for (unsigned long n = 1; n <= n_max; ++n) {
    power = halo_mul(h, power, x);
    Integer bound = 0;
    for (std::size_t i = poly.size(); i-- > 0;) bound = bound * n + poly[i];
    if (halo_cmp(h, power, halo_natural(h, bound)) == std::strong_ordering::greater) return false;
  }
  return true;
}

std::strong_ordering localized_cmp(const HaloDescriptor& h, const HaloValue& num1, const HaloValue& den1,
                                   const HaloValue& num2, const HaloValue& den2) {
  if (den1.is_zero() || den2.is_zero()) throw Error(ErrorCode::ZeroDenominator, "localization at zero");
  return halo_cmp(h, halo_mul(h, num1, den2), halo_mul(h, num2, den1));
}

}  // namespace speh
