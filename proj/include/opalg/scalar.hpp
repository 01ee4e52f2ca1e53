#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace opalg {

class Scalar;

/// Base field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws ValidationError unless p is prime, FieldGuardError when p ≥ 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Rationals must have a denominator coprime to p when the field is F_p.
  Scalar from_mpq(const mpq_class& v) const;
  /// Accepts "a", "a/b", or "k mod p" (the last only over F_p, with matching p).
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  Scalar(std::uint32_t residue, std::uint32_t modulus) : v_(Residue{residue % modulus, modulus}) {}

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  /// a += b * c without a temporary.
  void add_product(const Scalar& b, const Scalar& c);

  /// Total order used for canonical sorting: numeric for rationals,
  /// representative order for residues.
  int compare(const Scalar& o) const;

  /// "a/b" or "a" for rationals; "k mod p" for residues.
  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.compare(b) < 0; }

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  std::variant<mpq_class, Residue> v_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vector(std::span<const Scalar> v);

}  // namespace opalg
