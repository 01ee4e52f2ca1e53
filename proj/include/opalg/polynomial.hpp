#pragma once

#include <utility>
#include <vector>

#include "opalg/matrix.hpp"

namespace opalg {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Scalar> coeffs);

  static Polynomial constant(const Field& f, const Scalar& c);
  static Polynomial x(const Field& f);
  /// x^n
  static Polynomial monomial(const Field& f, std::size_t n);
  static Polynomial from_ints(const Field& f, const std::vector<long long>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Scalar leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& s) const;
  /// Quotient and remainder; throws std::domain_error when dividing by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial derivative() const;

  Scalar evaluate(const Scalar& x) const;
  Matrix evaluate(const Matrix& m) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  /// Canonical order: by degree, then coefficients from the top down.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// base^e mod m over F_p, e given as an arbitrary-precision exponent.
Polynomial powmod(const Polynomial& base, const mpz_class& e, const Polynomial& m);

/// Monic polynomial of least degree annihilating a square matrix.
Polynomial min_poly(const Matrix& m);

struct Factorization {
  Scalar unit;
  std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, multiplicity

  /// unit · Π f^k
  Polynomial expand() const;
};

/// Complete factorization over Q or F_p. Factors are sorted canonically.
/// Throws ValidationError on the zero polynomial.
Factorization factor(const Polynomial& f);

bool is_irreducible(const Polynomial& f);

}  // namespace opalg
