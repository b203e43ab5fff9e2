#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "speh/ordered_group.hpp"
#include "speh/surd.hpp"

namespace speh {

struct HaloDescriptor {
  enum class Kind { Trivial, Tropical, NonnegRationals, NonnegSurds, Lex };

  Kind kind = Kind::Trivial;
  GroupDescriptor group;
  std::shared_ptr<const HaloDescriptor> first;
  std::shared_ptr<const HaloDescriptor> second;

  static HaloDescriptor trivial();
  static HaloDescriptor tropical(GroupDescriptor g);
  static HaloDescriptor tropical(std::vector<std::string> labels);
  static HaloDescriptor rationals();
  static HaloDescriptor surds();
  static HaloDescriptor lex(const HaloDescriptor& a, const HaloDescriptor& b);

  /// Addition is max (Trivial, Tropical, and lex products of those).
  bool is_idempotent() const;
  std::string to_string() const;
  friend bool operator==(const HaloDescriptor& a, const HaloDescriptor& b);
};

class HaloValue {
 public:
  using Payload = std::variant<std::monostate, GroupElement, Rational, Surd, std::vector<HaloValue>>;

  static HaloValue zero(const HaloDescriptor& h);
  static HaloValue one(const HaloDescriptor& h);
  static HaloValue group(const HaloDescriptor& h, GroupElement g);
  /// Exponent-vector shorthand for tropical halos.
  static HaloValue group(const HaloDescriptor& h, std::vector<Rational> exponents);
  static HaloValue rational(const Rational& q);
  static HaloValue surd(const Surd& s);
  /// Both components must be nonzero.
  static HaloValue pair(const HaloDescriptor& h, HaloValue a, HaloValue b);

  const HaloDescriptor& halo() const { return halo_; }
  bool is_zero() const { return zero_; }
  const Payload& payload() const { return payload_; }

  const GroupElement& as_group() const;
  const Rational& as_rational() const;
  const Surd& as_surd() const;
  const HaloValue& first() const;
  const HaloValue& second() const;

  std::string to_string() const;
  friend bool operator==(const HaloValue& a, const HaloValue& b);

 private:
  HaloValue(HaloDescriptor h, bool zero, Payload p) : halo_(std::move(h)), zero_(zero), payload_(std::move(p)) {}
  HaloDescriptor halo_;
  bool zero_ = true;
  Payload payload_;
};

HaloValue halo_add(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y);
HaloValue halo_mul(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y);
std::strong_ordering halo_cmp(const HaloDescriptor& h, const HaloValue& x, const HaloValue& y);

// Shorthands that take the descriptor from the first argument.
HaloValue operator+(const HaloValue& x, const HaloValue& y);
HaloValue operator*(const HaloValue& x, const HaloValue& y);
std::strong_ordering operator<=>(const HaloValue& x, const HaloValue& y);

HaloValue halo_pow(const HaloValue& x, unsigned long n);
/// Multiplicative inverse of a nonzero value; surds need a single term.
HaloValue halo_inverse(const HaloValue& x);
HaloValue halo_div(const HaloValue& x, const HaloValue& y);
/// n * 1, computed by doubling with halo_add.
HaloValue halo_natural(const HaloDescriptor& h, const Integer& n);

struct TemperedVerdict {
  enum class Tag { Tempered, NotTempered, Unknown };
  Tag tag = Tag::Unknown;
  std::optional<HaloValue> witness;
  /// Natural coefficients, ascending.
  std::vector<unsigned long> bound_poly;
};

TemperedVerdict tempered_class(const HaloDescriptor& h);
bool tempered_witness_check(const HaloDescriptor& h, const HaloValue& x, const std::vector<unsigned long>& poly,
                            unsigned long n_max);

std::strong_ordering localized_cmp(const HaloDescriptor& h, const HaloValue& num1, const HaloValue& den1,
                                   const HaloValue& num2, const HaloValue& den2);

}  // namespace speh
