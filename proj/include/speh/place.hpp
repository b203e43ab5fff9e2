#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "speh/halo.hpp"
#include "speh/ring.hpp"

namespace speh {

/// p-adic disc {|x - center| <= p^radius_exp} (closed) or with < (open).
/// Archimedean discs carry an explicit rational radius instead.
struct Disc {
  enum class Kind { Closed, Open };
  Rational center;
  Rational radius_exp;
  Kind kind = Kind::Closed;
  std::optional<Rational> radius;

  friend bool operator==(const Disc&, const Disc&) = default;
};

/// A nested chain of discs: a finite prefix plus an optional rule producing
/// disc i for i >= prefix size. Extended discs are cached; callers sharing
/// one sequence across threads must synchronize externally.
class DiscSequence {
 public:
  using Extension = std::function<Disc(std::size_t)>;

  explicit DiscSequence(std::vector<Disc> prefix, Extension extension = nullptr, std::size_t max_depth = 64);

  const std::vector<Disc>& prefix() const { return prefix_; }
  bool has_extension() const { return static_cast<bool>(extension_); }
  std::size_t max_depth() const { return has_extension() ? max_depth_ : prefix_.size(); }
  Disc at(std::size_t i) const;

 private:
  std::vector<Disc> prefix_;
  Extension extension_;
  std::size_t max_depth_;
  mutable std::vector<Disc> cache_;
};

struct Place;

/// Test doubles and places outside the catalog.
struct ExternalSpec {
  std::string name;
  RingKind ring = RingKind::Z;
  HaloDescriptor codomain;
  std::function<HaloValue(const RingElement&)> evaluate;
  bool multiplicative = false;
};

struct Place {
  enum class Kind {
    Trivial,
    PAdicTrop,
    PAdicReal,
    ArchimedeanZ,
    Residual,
    CompositeAdic,
    CompositeResidual,
    FpResidual,
    FpPAdic,
    GaussPoint,
    HKImmediate,
    HKCase4,
    ArchEval,
    ArchInfinitesimal,
    ArchInfinity,
    PAdicEval,
    PAdicPower,
    Retracted,
    External,
  };
  enum class Major { Empty, All, Cut };

  Kind kind = Kind::Trivial;
  RingKind ring = RingKind::Z;
  Prime p = 0;
  Integer m;
  FpPolynomial modulus;
  Rational center;
  /// Gauss radius exponent, or the power t of PAdicPower.
  Rational exponent;
  GaussianRational arch_center;
  Major major = Major::Empty;
  Rational cut;
  std::shared_ptr<const DiscSequence> discs;
  std::shared_ptr<const Place> inner;
  std::shared_ptr<const ExternalSpec> external;

  static Place trivial(RingKind ring);
  static Place padic_trop(Prime p);
  static Place padic_real(Prime p);
  static Place archimedean();
  static Place residual(Prime p);
  static Place composite_adic(const Integer& m);
  static Place composite_residual(const Integer& m);
  static Place fp_residual(Prime p, const FpPolynomial& modulus);
  static Place fp_padic(Prime p, const FpPolynomial& modulus);
  static Place gauss_point(Prime p, const Rational& center, const Rational& radius_exp);
  static Place hk_immediate(Prime p, std::shared_ptr<const DiscSequence> discs);
  static Place hk_case4(Prime p, const Rational& center, Major major, const Rational& cut = 0);
  static Place arch_eval(const GaussianRational& a);
  static Place arch_infinitesimal(const GaussianRational& a);
  static Place arch_infinity();
  static Place padic_eval(Prime p, const Rational& a);
  static Place padic_power(Prime p, const Rational& t);
  static Place retracted(const Place& inner);
  static Place external_place(ExternalSpec spec);

  /// The ring the place is defined on; smaller rings coerce into it.
  RingKind domain() const;
  bool on_polynomial_ring() const { return is_polynomial_ring(domain()); }
  bool accepts(RingKind r) const;
  HaloDescriptor codomain() const;
  /// Catalog places known to be multiplicative.
  bool is_multiplicative() const;
  std::string to_string() const;
};

HaloValue evaluate(const Place& place, const RingElement& elem);
/// Shorthand for integer arguments.
HaloValue evaluate(const Place& place, const Integer& n);

struct IdealDescriptor {
  enum class Kind { Zero, PrincipalInt, PrincipalPoly, PrincipalLinear };
  Kind kind = Kind::Zero;
  Integer generator;
  /// Over Q when modulus is 0, otherwise the F_p reduction is in fp.
  Polynomial poly;
  FpPolynomial fp;
  Prime modulus = 0;
  Rational point;

  std::string to_string() const;
  friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;
};

IdealDescriptor kernel(const Place& place);

/// |X - a| at the place for a rational a; used by disc membership.
HaloValue value_of_linear(const Place& place, const Rational& a);
/// The radius of a disc inside the place's codomain.
HaloValue radius_value(const Place& place, const Disc& disc);

}  // namespace speh
