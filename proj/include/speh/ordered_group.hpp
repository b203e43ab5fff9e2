#pragma once

#include <compare>
#include <string>
#include <vector>

#include "speh/arith.hpp"

namespace speh {

/// Lexicographically ordered Q^k, written multiplicatively. Coordinate 0 is
/// the most significant.
struct GroupDescriptor {
  std::vector<std::string> labels;

  GroupDescriptor() = default;
  explicit GroupDescriptor(std::vector<std::string> l) : labels(std::move(l)) {}
  std::size_t rank() const { return labels.size(); }
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct GroupElement {
  GroupDescriptor group;
  std::vector<Rational> exponents;

  GroupElement() = default;
  GroupElement(GroupDescriptor g, std::vector<Rational> e);
  static GroupElement identity(const GroupDescriptor& g);

  bool is_identity() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// {0}^cut_index x Q^(k - cut_index).
struct ConvexSubgroup {
  GroupDescriptor group;
  std::size_t cut_index = 0;

  bool is_trivial() const { return cut_index == group.rank(); }
  bool contains(const GroupElement& g) const;
  friend bool operator==(const ConvexSubgroup&, const ConvexSubgroup&) = default;
};

std::strong_ordering group_cmp(const GroupElement& a, const GroupElement& b);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);
GroupElement group_pow(const GroupElement& a, const Rational& n);

ConvexSubgroup convex_subgroup_generated(const GroupElement& g);

struct GroupQuotient {
  GroupDescriptor source;
  GroupDescriptor target;

  GroupElement project(const GroupElement& g) const;
};
GroupQuotient quotient_by_convex(const GroupDescriptor& g, const ConvexSubgroup& h);

/// Greatest convex subgroup not containing two_value.
ConvexSubgroup huber_delta(const GroupDescriptor& g, const GroupElement& two_value);

}  // namespace speh
