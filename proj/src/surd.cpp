#include "speh/surd.hpp"

#include <cmath>
#include <sstream>

namespace speh {

namespace {

void add_term(std::map<Integer, Rational>& terms, const Integer& d, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// Bounds on sqrt(d) as multiples of 2^-bits.
std::pair<Rational, Rational> sqrt_bounds(const Integer& d, unsigned long bits) {
  if (d == 1) return {Rational(1), Rational(1)};
  Integer scaled = d << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rational lo(root, Integer(1) << bits);
  Rational hi(Integer(root + 1), Integer(1) << bits);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::pair<Rational, Rational> signed_enclosure(const std::map<Integer, Rational>& terms, unsigned long bits) {
  Rational lo = 0, hi = 0;
  for (const auto& [d, c] : terms) {
    auto [l, h] = sqrt_bounds(d, bits);
    if (sgn(c) >= 0) {
      lo += c * l;
      hi += c * h;
    } else {
      lo += c * h;
      hi += c * l;
    }
  }
  return {lo, hi};
}

}  // namespace

int sign_of_signed_surd(const std::map<Integer, Rational>& terms) {
  if (terms.empty()) return 0;
  // Square roots of distinct squarefree integers are linearly independent
  // over Q, so a nonempty canonical map is nonzero and refinement terminates.
  for (unsigned long bits = 32;; bits *= 2) {
    auto [lo, hi] = signed_enclosure(terms, bits);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

Surd::Surd(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorCode::InvalidArgument, "surd coefficients must be nonnegative");
  if (sgn(q) != 0) terms_.emplace(Integer(1), q);
}

Surd Surd::from_terms(const std::vector<std::pair<Rational, Integer>>& terms) {
  Surd s;
  for (const auto& [c, d] : terms) {
    if (sgn(c) < 0) throw Error(ErrorCode::InvalidArgument, "surd coefficients must be nonnegative");
    if (sgn(d) <= 0) throw Error(ErrorCode::InvalidArgument, "surd radicands must be positive");
    auto split = square_split(d);
    add_term(s.terms_, split.squarefree_part, c * Rational(split.square_root_part));
  }
  return s;
}

Surd Surd::sqrt_of(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative rational");
  if (sgn(q) == 0) return {};
  if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Surd(Rational(n, d));
  }
  // sqrt(n/m) = sqrt(n*m)/m
  Integer nm = q.get_num() * q.get_den();
  auto split = square_split(nm);
  Surd s;
  Rational c(split.square_root_part, q.get_den());
  c.canonicalize();
  s.terms_.emplace(split.squarefree_part, c);
  return s;
}

bool Surd::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Rational Surd::rational_value() const {
  if (terms_.empty()) return 0;
  if (!is_rational()) throw Error(ErrorCode::NotRepresentable, "surd is irrational");
  return terms_.begin()->second;
}

Surd operator+(const Surd& a, const Surd& b) {
  Surd s = a;
  for (const auto& [d, c] : b.terms_) add_term(s.terms_, d, c);
  return s;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd s;
  for (const auto& [d1, c1] : a.terms_) {
    for (const auto& [d2, c2] : b.terms_) {
      // sqrt(d1 d2) = g sqrt(d1 d2 / g^2) with g = gcd(d1, d2), both squarefree
      Integer g = gcd(d1, d2);
      Integer d = (d1 / g) * (d2 / g);
      add_term(s.terms_, d, c1 * c2 * Rational(g));
    }
  }
  return s;
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  if (a.terms_ == b.terms_) return std::strong_ordering::equal;
  std::map<Integer, Rational> diff = a.terms_;
  for (const auto& [d, c] : b.terms_) add_term(diff, d, Rational(-c));
  int s = sign_of_signed_surd(diff);
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::pair<Rational, Rational> Surd::enclosure(unsigned long bits) const { return signed_enclosure(terms_, bits); }

double Surd::to_double() const {
  double v = 0;
  for (const auto& [d, c] : terms_) v += c.get_d() * std::sqrt(d.get_d());
  return v;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (d == 1) {
      os << speh::to_string(c);
      continue;
    }
    if (c != 1) os << speh::to_string(c) << "*";
    os << "sqrt(" << speh::to_string(d) << ")";
  }
  return os.str();
}

}  // namespace speh
