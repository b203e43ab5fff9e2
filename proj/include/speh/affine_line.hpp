#pragma once

#include <optional>
#include <string>

#include "speh/checks.hpp"

namespace speh {

struct AffinePoint {
  enum class Type {
    TrivialPoint,
    FpResidualPoint,
    FpPAdicPoint,
    HKType1,
    HKType2Gauss,
    HKType3Immediate,
    HKType4,
    ArchEvalPoint,
    ArchInfPoint,
    ArchInfinityPoint,
  };
  Type type = Type::TrivialPoint;
  Place place;
};

std::string_view affine_type_name(AffinePoint::Type t);

/// Taxonomy tag of a place on Z[X] (or Q[X], F_p[X]).
AffinePoint classify_affine_point(const Place& place);

struct FilterCaseReport {
  int case_number = 0;
  /// 'a', 'b', 'c' for the three major-subset possibilities, else 0.
  char subcase = 0;
  std::string description;
};

FilterCaseReport hk_classify(const AffinePoint& point);
HaloValue hk_evaluate(const AffinePoint& point, const RingElement& f);

struct AnalyticityVerdict {
  enum class Reason { Analytic, InfinitesimalNbhdOfAlgebraicPoint, InfinitesimalNbhdOfInfinity };
  bool analytic = true;
  Reason reason = Reason::Analytic;
};

AnalyticityVerdict is_analytic(const AffinePoint& point);

bool disc_membership(const AffinePoint& point, const Disc& disc);

/// Residual or P-adic point of the line over F_p.
AffinePoint fp_line_classify(const Place& place);

struct Boundedness {
  bool upper = false;
  bool lower = false;
};

Boundedness boundedness_oracle(const Place& place);

/// Smallest natural lambda with |P| <= |lambda|, if one exists below `limit`.
std::optional<Integer> upper_bound_witness(const Place& place, const RingElement& f, const Integer& limit);
/// Some 1/2^k with |1/2^k| <= |P|, searching k up to max_k.
std::optional<Rational> lower_bound_witness(const Place& place, const RingElement& f, unsigned long max_k);

}  // namespace speh
