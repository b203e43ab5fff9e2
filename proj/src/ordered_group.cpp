#include "speh/ordered_group.hpp"

namespace speh {

namespace {

void same_group(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (!(a == b)) throw Error(ErrorCode::MixedGroups, "elements of different value groups");
}

std::size_t leading_index(const GroupElement& g) {
  for (std::size_t i = 0; i < g.exponents.size(); ++i) {
    if (sgn(g.exponents[i]) != 0) return i;
  }
  return g.exponents.size();
}

}  // namespace

GroupElement::GroupElement(GroupDescriptor g, std::vector<Rational> e) : group(std::move(g)), exponents(std::move(e)) {
  if (exponents.size() != group.rank()) throw Error(ErrorCode::InvalidArgument, "exponent vector length differs from rank");
  for (auto& x : exponents) x.canonicalize();
}

GroupElement GroupElement::identity(const GroupDescriptor& g) {
  return GroupElement(g, std::vector<Rational>(g.rank(), Rational(0)));
}

bool GroupElement::is_identity() const { return leading_index(*this) == exponents.size(); }

bool ConvexSubgroup::contains(const GroupElement& g) const {
  same_group(group, g.group);
  return leading_index(g) >= cut_index;
}

std::strong_ordering group_cmp(const GroupElement& a, const GroupElement& b) {
  same_group(a.group, b.group);
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    int c = cmp(a.exponents[i], b.exponents[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  same_group(a.group, b.group);
  std::vector<Rational> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents[i] + b.exponents[i];
  return GroupElement(a.group, std::move(e));
}

GroupElement group_inv(const GroupElement& a) {
  std::vector<Rational> e;
  for (const auto& x : a.exponents) e.push_back(-x);
  return GroupElement(a.group, std::move(e));
}

GroupElement group_pow(const GroupElement& a, const Rational& n) {
  std::vector<Rational> e;
  for (const auto& x : a.exponents) e.push_back(x * n);
  return GroupElement(a.group, std::move(e));
}

ConvexSubgroup convex_subgroup_generated(const GroupElement& g) {
  if (g.is_identity()) throw Error(ErrorCode::IdentityElement, "the identity generates the trivial subgroup");
  return ConvexSubgroup{g.group, leading_index(g)};
}

GroupElement GroupQuotient::project(const GroupElement& g) const {
  same_group(source, g.group);
  return GroupElement(target, std::vector<Rational>(g.exponents.begin(), g.exponents.begin() + target.rank()));
}

GroupQuotient quotient_by_convex(const GroupDescriptor& g, const ConvexSubgroup& h) {
  same_group(g, h.group);
  std::vector<std::string> labels(g.labels.begin(), g.labels.begin() + h.cut_index);
  return GroupQuotient{g, GroupDescriptor(std::move(labels))};
}

ConvexSubgroup huber_delta(const GroupDescriptor& g, const GroupElement& two_value) {
  same_group(g, two_value.group);
  if (group_cmp(two_value, GroupElement::identity(g)) != std::strong_ordering::greater) {
    return ConvexSubgroup{g, g.rank()};
  }
  return ConvexSubgroup{g, leading_index(two_value) + 1};
}

}  // namespace speh
