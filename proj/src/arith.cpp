#include "speh/arith.hpp"

#include <algorithm>
#include <cctype>

namespace speh {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MixedHalos: return "MixedHalos";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::UnsupportedPlace: return "UnsupportedPlace";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::InsufficientFilterDepth: return "InsufficientFilterDepth";
    case ErrorCode::NotNonArchimedean: return "NotNonArchimedean";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::FactorizationRequired: return "FactorizationRequired";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::UnrecognizedDomainShape: return "UnrecognizedDomainShape";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from_text(std::string_view s) {
  if (!valid_integer_text(s)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) { return integer_from_text(text); }

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(integer_from_text(text));
  Integer num = integer_from_text(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw Error(ErrorCode::ParseError, "negative denominator: '" + std::string(text) + "'");
  }
  Integer den = integer_from_text(den_text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const GaussianRational& z) {
  if (z.is_rational()) return to_string(z.re);
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + to_string(Rational(abs(z.im))) + "i";
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp >= 0) {
    return Rational(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                    ipow(base.get_den(), static_cast<unsigned long>(exp)));
  }
  if (sgn(base) == 0) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
  Rational r(ipow(base.get_den(), static_cast<unsigned long>(-exp)),
             ipow(base.get_num(), static_cast<unsigned long>(-exp)));
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Prime> primes_up_to(unsigned long bound) {
  std::vector<Prime> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

unsigned long ord(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long ord(const Rational& q, Prime p) {
  if (sgn(q) == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  Integer pp(p);
  return static_cast<long>(ord(q.get_num(), pp)) - static_cast<long>(ord(q.get_den(), pp));
}

namespace {

constexpr unsigned long kTrialBound = 10000;
constexpr unsigned long kRhoIterations = 1ul << 20;

// Pollard-Brent; returns a nontrivial factor of composite n or 0 on budget exhaustion.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, spent = 0;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1 && spent < kRhoIterations) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        spent += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void split_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, primes);
    split_into(root, primes);
    return;
  }
  Integer d = pollard_brent(n);
  if (d == 0) {
    throw Error(ErrorCode::NotRepresentable, "could not factor " + to_string(n) + " within budget");
  }
  split_into(d, primes);
  split_into(Integer(n / d), primes);
}

}  // namespace

Factorization factor(const Integer& n_in) {
  if (n_in == 0) throw Error(ErrorCode::InvalidArgument, "factor(0)");
  Integer n = abs(n_in);
  Factorization out;
  for (unsigned long p = 2; p <= kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
      out.push_back({Integer(p), e});
    }
  }
  if (n > 1) {
    std::vector<Integer> big;
    split_into(n, big);
    std::sort(big.begin(), big.end());
    for (const auto& q : big) {
      if (!out.empty() && out.back().prime == q) {
        ++out.back().exponent;
      } else {
        out.push_back({q, 1});
      }
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& pp : factor(n)) {
    std::size_t count = out.size();
    Integer power = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SquareSplit square_split(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "square_split needs n > 0");
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return {root, 1};
  }
  SquareSplit out{1, 1};
  for (const auto& pp : factor(n)) {
    out.square_root_part *= ipow(pp.prime, pp.exponent / 2);
    if (pp.exponent % 2 == 1) out.squarefree_part *= pp.prime;
  }
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n <= 0) return false;
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

}  // namespace speh
