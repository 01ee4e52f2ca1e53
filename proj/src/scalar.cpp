#include "opalg/scalar.hpp"

#include <stdexcept>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ValidationError("malformed scalar \"" + std::string(whole) + "\"");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ValidationError("malformed scalar \"" + std::string(whole) + "\"");
  }
  std::string str(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(str, 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n >> 32) {
    // Baillie-PSW inside GMP is exact below 2^64.
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 24) > 0;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("field modulus " + std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) throw FieldGuardError("prime field modulus " + std::to_string(p) + " exceeds 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r), p_);
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  return Scalar(reduce_mpz(v, p_), p_);
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (is_rational()) return Scalar(v);
  std::uint32_t den = reduce_mpz(v.get_den(), p_);
  if (den == 0) throw ValidationError("denominator divisible by the field characteristic");
  return Scalar(mul_mod(reduce_mpz(v.get_num(), p_), pow_mod(den, p_ - 2, p_), p_), p_);
}

Scalar Field::parse(std::string_view text) const {
  std::string_view s = trim(text);
  if (auto pos = s.find("mod"); pos != std::string_view::npos) {
    if (is_rational()) throw ValidationError("residue \"" + std::string(text) + "\" given for a rational field");
    mpz_class k = parse_integer(s.substr(0, pos), text);
    mpz_class m = parse_integer(s.substr(pos + 3), text);
    if (m != p_) {
      throw ValidationError("residue \"" + std::string(text) + "\" does not match field " + name());
    }
    return from_mpz(k);
  }
  if (auto pos = s.find('/'); pos != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, pos), text);
    mpz_class den = parse_integer(s.substr(pos + 1), text);
    if (den == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(q);
  }
  return from_mpz(parse_integer(s, text));
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(v_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint64_t s = static_cast<std::uint64_t>(r.value) + std::get<Residue>(o.v_).value;
    r.value = static_cast<std::uint32_t>(s >= r.modulus ? s - r.modulus : s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q -= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint32_t b = std::get<Residue>(o.v_).value;
    r.value = r.value >= b ? r.value - b : r.value + (r.modulus - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = mul_mod(r.value, std::get<Residue>(o.v_).value, r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus);
}

void Scalar::add_product(const Scalar& b, const Scalar& c) {
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    const auto& bq = std::get<mpq_class>(b.v_);
    const auto& cq = std::get<mpq_class>(c.v_);
    if (sgn(bq) == 0 || sgn(cq) == 0) return;
    *q += bq * cq;
  } else {
    auto& r = std::get<Residue>(v_);
    std::uint64_t s = r.value + static_cast<std::uint64_t>(std::get<Residue>(b.v_).value) *
                                    std::get<Residue>(c.v_).value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
}

int Scalar::compare(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return is_rational() ? -1 : 1;
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    int c = cmp(*q, std::get<mpq_class>(o.v_));
    return (c > 0) - (c < 0);
  }
  auto a = std::get<Residue>(v_).value;
  auto b = std::get<Residue>(o.v_).value;
  return (a > b) - (a < b);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str(10);
  const auto& r = std::get<Residue>(v_);
  return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& ra = std::get<Scalar::Residue>(a.v_);
  const auto& rb = std::get<Scalar::Residue>(b.v_);
  return ra.value == rb.value && ra.modulus == rb.modulus;
}

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace opalg
