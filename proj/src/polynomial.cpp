#include "speh/polynomial.hpp"

#include <sstream>

namespace speh {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }
Polynomial Polynomial::linear(const Rational& a) { return Polynomial({Rational(-a), Rational(1)}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

bool Polynomial::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + GaussianRational(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational lead = leading();
  std::vector<Rational> v;
  for (const auto& c : coeffs_) v.push_back(c / lead);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational mag = abs(c);
    if (k == 0 || mag != 1) os << speh::to_string(mag);
    if (k >= 1) os << "X";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  long db = b.degree();
  std::vector<Rational> quot(a.degree() >= db ? a.degree() - db + 1 : 0, Rational(0));
  const Rational& lead = b.leading();
  for (long k = a.degree(); k >= db; --k) {
    Rational c = rem[k] / lead;
    quot[k - db] = c;
    if (sgn(c) == 0) continue;
    for (long j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

template <typename Field>
std::vector<Field> shift_impl(const std::vector<Rational>& coeffs, const Field& a) {
  // Horner-style: repeatedly divide by (X - a); the remainders are the Taylor coefficients.
  std::vector<Field> work;
  work.reserve(coeffs.size());
  for (const auto& c : coeffs) work.emplace_back(c);
  const std::size_t n = work.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) work[i - 1] = work[i - 1] + a * work[i];
  }
  return work;
}

}  // namespace

std::vector<Rational> taylor_shift(const Polynomial& p, const Rational& a) {
  return shift_impl<Rational>(p.coeffs(), a);
}

std::vector<GaussianRational> taylor_shift(const Polynomial& p, const GaussianRational& a) {
  return shift_impl<GaussianRational>(p.coeffs(), a);
}

// ---------------------------------------------------------------------------

namespace {

unsigned long mulmod(unsigned long a, unsigned long b, Prime p) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

unsigned long inverse_mod(unsigned long a, Prime p) {
  Integer r;
  Integer aa(a), pp(p);
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0) {
    throw Error(ErrorCode::ZeroDenominator, "not invertible mod " + std::to_string(p));
  }
  return r.get_ui();
}

FpPolynomial::FpPolynomial(Prime p, std::vector<unsigned long> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
  for (auto& c : coeffs_) c %= p_;
  trim();
}

FpPolynomial FpPolynomial::reduce(Prime p, const Polynomial& poly) {
  std::vector<unsigned long> v;
  Integer pp(p);
  for (const auto& c : poly.coeffs()) {
    if (mpz_divisible_p(c.get_den_mpz_t(), pp.get_mpz_t())) {
      throw Error(ErrorCode::DomainMismatch, "coefficient " + speh::to_string(c) + " is not p-integral");
    }
    Integer num, den;
    mpz_fdiv_r(num.get_mpz_t(), c.get_num_mpz_t(), pp.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), c.get_den_mpz_t(), pp.get_mpz_t());
    v.push_back(mulmod(num.get_ui(), inverse_mod(den.get_ui(), p), p));
  }
  return FpPolynomial(p, std::move(v));
}

FpPolynomial FpPolynomial::constant(Prime p, unsigned long c) { return FpPolynomial(p, {c}); }
FpPolynomial FpPolynomial::x(Prime p) { return FpPolynomial(p, {0, 1}); }

void FpPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPolynomial FpPolynomial::monic() const {
  if (is_zero()) return *this;
  unsigned long inv = inverse_mod(leading(), p_);
  std::vector<unsigned long> v;
  for (auto c : coeffs_) v.push_back(mulmod(c, inv, p_));
  return FpPolynomial(p_, std::move(v));
}

namespace {

void same_field(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::MixedRings, "polynomials over different F_p");
}

}  // namespace

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
  same_field(a, b);
  std::vector<unsigned long> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = (v[i] + b.coeffs_[i]) % a.p_;
  return FpPolynomial(a.p_, std::move(v));
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) {
  same_field(a, b);
  std::vector<unsigned long> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = (v[i] + a.p_ - b.coeffs_[i]) % a.p_;
  return FpPolynomial(a.p_, std::move(v));
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
  same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FpPolynomial(a.p_, {});
  std::vector<unsigned long> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = (v[i + j] + mulmod(a.coeffs_[i], b.coeffs_[j], a.p_)) % a.p_;
    }
  }
  return FpPolynomial(a.p_, std::move(v));
}

std::string FpPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    if (k == 0 || coeffs_[k] != 1) os << coeffs_[k];
    if (k >= 1) os << "X";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

FpDivision divmod(const FpPolynomial& a, const FpPolynomial& b) {
  same_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero polynomial");
  const Prime p = a.modulus();
  std::vector<unsigned long> rem = a.coeffs();
  long db = b.degree();
  std::vector<unsigned long> quot(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
  unsigned long inv = inverse_mod(b.leading(), p);
  for (long k = a.degree(); k >= db; --k) {
    unsigned long c = mulmod(rem[k], inv, p);
    quot[k - db] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) {
      rem[k - db + j] = (rem[k - db + j] + p - mulmod(c, b.coeffs()[j], p)) % p;
    }
  }
  return {FpPolynomial(p, std::move(quot)), FpPolynomial(p, std::move(rem))};
}

FpPolynomial gcd(const FpPolynomial& a, const FpPolynomial& b) {
  FpPolynomial x = a, y = b;
  while (!y.is_zero()) {
    FpPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPolynomial powmod(const FpPolynomial& base, const Integer& e, const FpPolynomial& m) {
  FpPolynomial result = FpPolynomial::constant(m.modulus(), 1);
  FpPolynomial b = divmod(base, m).remainder;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).remainder;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).remainder;
  }
  return result;
}

bool is_irreducible(const FpPolynomial& poly) {
  if (poly.degree() < 1) return false;
  const Prime p = poly.modulus();
  FpPolynomial f = poly.monic();
  FpPolynomial x = FpPolynomial::x(p);
  FpPolynomial power = x;
  for (long d = 1; d <= f.degree() / 2; ++d) {
    power = powmod(power, Integer(p), f);  // X^{p^d} mod f
    FpPolynomial g = gcd(power - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

unsigned long ord(const FpPolynomial& q, const FpPolynomial& irreducible) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "order of zero polynomial");
  unsigned long k = 0;
  FpPolynomial cur = q;
  while (true) {
    auto d = divmod(cur, irreducible);
    if (!d.remainder.is_zero()) return k;
    cur = d.quotient;
    ++k;
  }
}

}  // namespace speh
