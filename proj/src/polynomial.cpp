#include "opalg/polynomial.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "opalg/errors.hpp"

namespace opalg {

Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Field& f, const Scalar& c) { return Polynomial(f, {c}); }

Polynomial Polynomial::x(const Field& f) { return monomial(f, 1); }

Polynomial Polynomial::monomial(const Field& f, std::size_t n) {
  std::vector<Scalar> c(n + 1, f.zero());
  c[n] = f.one();
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::from_ints(const Field& f, const std::vector<long long>& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scaled(c_.back().inverse());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial(field_);
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j].add_product(c_[i], o.c_[j]);
  }
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= s;
  return Polynomial(field_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(field_), *this};
  std::vector<Scalar> r = c_;
  std::vector<Scalar> q(c_.size() - d.c_.size() + 1, field_.zero());
  Scalar inv = d.c_.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar coef = r[k + d.c_.size() - 1] * inv;
    q[k] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= coef * d.c_[j];
  }
  return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(field_);
  std::vector<Scalar> c;
  c.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
  return Polynomial(field_, std::move(c));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * m + id.scaled(c_[i]);
  return acc;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    bool show_coeff = !c_[i].is_one() || i == 0;
    if (show_coeff) {
      std::string s = c_[i].to_string();
      bool wrap = i > 0 && (s.find_first_of(" /-") != std::string::npos);
      out += wrap ? "(" + s + ")" : s;
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int c = a.c_[i].compare(b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f, f.one()), s1(f);
  Polynomial t0(f), t1 = Polynomial::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Polynomial powmod(const Polynomial& base, const mpz_class& e, const Polynomial& m) {
  const Field& f = base.field();
  Polynomial result = Polynomial::constant(f, f.one()) % m;
  Polynomial b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) throw ValidationError("minimal polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  const std::size_t len = n * n;
  struct Row {
    Vector v;
    Vector track;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t d = 0; d <= n; ++d) {
    Vector v = power.flatten();
    Vector track = zero_vector(f, n + 1);
    track[d] = f.one();
    for (const auto& r : rows) {
      if (v[r.pivot].is_zero()) continue;
      Scalar c = v[r.pivot];
      for (std::size_t j = 0; j < len; ++j) {
        if (!r.v[j].is_zero()) v[j] -= c * r.v[j];
      }
      for (std::size_t j = 0; j <= d; ++j) {
        if (!r.track[j].is_zero()) track[j] -= c * r.track[j];
      }
    }
    std::size_t p = 0;
    while (p < len && v[p].is_zero()) ++p;
    if (p == len) {
      track.resize(d + 1);
      return Polynomial(f, std::move(track));
    }
    Scalar inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : track) x *= inv;
    rows.push_back({std::move(v), std::move(track), p});
    power = power * m;
  }
  throw TheoremViolation("no annihilating polynomial of degree <= n (Cayley-Hamilton)");
}

Polynomial Factorization::expand() const {
  Field f = unit.field();
  Polynomial out = Polynomial::constant(f, unit);
  for (const auto& [p, k] : factors) {
    for (int i = 0; i < k; ++i) out = out * p;
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// F_p

Polynomial pth_root(const Polynomial& f) {
  const std::uint32_t p = f.field().characteristic();
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coefficients()[i]);
  return Polynomial(f.field(), std::move(c));
}

void squarefree_fp(const Polynomial& f, int mult, std::vector<std::pair<Polynomial, int>>& out) {
  const std::uint32_t p = f.field().characteristic();
  if (f.degree() <= 0) return;
  Polynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree_fp(pth_root(f), mult * static_cast<int>(p), out);
    return;
  }
  Polynomial c = gcd(f, d);
  Polynomial w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_fp(pth_root(c.monic()), mult * static_cast<int>(p), out);
}

std::vector<std::pair<Polynomial, int>> distinct_degree(const Polynomial& f) {
  const Field& fld = f.field();
  const mpz_class p(fld.characteristic());
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial rest = f;
  Polynomial x = Polynomial::x(fld);
  Polynomial h = x % rest;
  int i = 1;
  while (rest.degree() >= 2 * i) {
    h = powmod(h, p, rest);
    Polynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<int>(rest.degree()));
  return out;
}

void equal_degree(const Polynomial& f, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& fld = f.field();
  const std::uint32_t p = fld.characteristic();
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  for (;;) {
    std::vector<Scalar> c;
    for (long i = 0; i < f.degree(); ++i) c.push_back(fld.from_int(coef(rng)));
    Polynomial a(fld, std::move(c));
    if (a.degree() <= 0) continue;
    Polynomial b(fld);
    if (p == 2) {
      Polynomial t = a % f;
      b = t;
      for (int k = 1; k < d; ++k) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      b = powmod(a, (q - 1) / 2, f) - Polynomial::constant(fld, fld.one());
    }
    Polynomial g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<Polynomial> factor_squarefree_fp(const Polynomial& f) {
  std::mt19937_64 rng(0x0b5e55edULL ^ static_cast<std::uint64_t>(f.degree()));
  std::vector<Polynomial> out;
  for (const auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

std::vector<std::pair<Polynomial, int>> factor_fp(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> sqf;
  squarefree_fp(f.monic(), 1, sqf);
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& [g, k] : sqf) {
    for (auto& h : factor_squarefree_fp(g)) out.emplace_back(std::move(h), k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q: integer polynomials as coefficient vectors

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Primitive integer polynomial with positive leading coefficient, same roots as f.
ZPoly primitive_integer(const Polynomial& f) {
  mpz_class den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly out;
  for (const auto& c : f.coefficients()) {
    mpq_class v = c.rational() * den;
    out.push_back(v.get_num());
  }
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

Polynomial to_rational(const ZPoly& a) {
  std::vector<Scalar> c;
  for (const auto& v : a) c.emplace_back(mpq_class(v));
  return Polynomial(Field::rationals(), std::move(c));
}

Polynomial to_fp(const ZPoly& a, const Field& fp) {
  std::vector<Scalar> c;
  for (const auto& v : a) c.push_back(fp.from_mpz(v));
  return Polynomial(fp, std::move(c));
}

ZPoly from_fp(const Polynomial& a) {
  ZPoly out;
  for (const auto& c : a.coefficients()) out.emplace_back(c.residue());
  return out;
}

void zmod(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  zmod(c, m);
  return c;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

ZPoly zadd_scaled(const ZPoly& a, const ZPoly& b, const mpz_class& s, const mpz_class& m) {
  ZPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += s * b[i];
  zmod(c, m);
  return c;
}

/// One-step-at-a-time Hensel lift of f ≡ g·h (mod p) to mod p^k. g monic;
/// lc(h) is fixed to lc(f) so f − g·h always drops degree.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, ZPoly g, ZPoly h, const Field& fp, unsigned k) {
  const mpz_class p(fp.characteristic());
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  h.back() = f.back();
  zmod(h, pk);
  auto eg = extended_gcd(to_fp(g, fp), to_fp(h, fp));
  const Polynomial s = eg.s;
  const Polynomial t = eg.t;
  mpz_class m = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly diff = zsub(f, zmul(g, h, pk));
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) throw TheoremViolation("Hensel invariant broken");
      c /= m;
    }
    Polynomial e = to_fp(diff, fp);
    auto [q, r] = (t * e).divmod(to_fp(g, fp));
    Polynomial dh = s * e + q * to_fp(h, fp);
    g = zadd_scaled(g, from_fp(r), m, pk);
    h = zadd_scaled(h, from_fp(dh), m, pk);
    m *= p;
  }
  return {g, h};
}

ZPoly monic_mod(const ZPoly& a, const mpz_class& pk) {
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly out = a;
  for (auto& c : out) c *= inv;
  zmod(out, pk);
  return out;
}

std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<Polynomial>& mod_p_factors, const Field& fp,
                                   unsigned k) {
  const mpz_class p(fp.characteristic());
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  std::vector<ZPoly> lifted;
  ZPoly current = f;
  zmod(current, pk);
  for (std::size_t i = 0; i + 1 < mod_p_factors.size(); ++i) {
    Polynomial rest = Polynomial::constant(fp, fp.from_mpz(f.back()));
    for (std::size_t j = i + 1; j < mod_p_factors.size(); ++j) rest = rest * mod_p_factors[j];
    auto [g, h] = hensel_lift(current, from_fp(mod_p_factors[i]), from_fp(rest), fp, k);
    lifted.push_back(std::move(g));
    current = std::move(h);
  }
  lifted.push_back(monic_mod(current, pk));
  return lifted;
}

ZPoly symmetric_mod(ZPoly a, const mpz_class& pk) {
  mpz_class half = pk / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    if (c > half) c -= pk;
  }
  ztrim(a);
  return a;
}

ZPoly make_primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = to_rational(a).divmod(to_rational(b));
  if (!r.is_zero()) return std::nullopt;
  ZPoly out;
  for (const auto& c : q.coefficients()) {
    if (c.rational().get_den() != 1) return std::nullopt;
    out.push_back(c.rational().get_num());
  }
  return out;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  // Good prime: does not divide lc(f) and keeps f squarefree.
  Field fp;
  std::vector<Polynomial> mod_p;
  for (std::uint64_t cand = 3;; cand += 2) {
    if (!is_prime(cand) || mpz_divisible_ui_p(f.back().get_mpz_t(), cand)) continue;
    Field trial = Field::prime(cand);
    Polynomial fbar = to_fp(f, trial);
    if (gcd(fbar, fbar.derivative()).degree() != 0) continue;
    fp = trial;
    mod_p = factor_squarefree_fp(fbar.monic());
    break;
  }
  if (mod_p.size() == 1) return {f};
  std::sort(mod_p.begin(), mod_p.end());

  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class lc = abs(f.back());
  mpz_class bound = 2 * norm * lc;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  const mpz_class p(fp.characteristic());
  unsigned k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift_all(f, mod_p, fp, k);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::size_t s = 1;
  while (2 * s <= live.size()) {
    bool hit = false;
    std::vector<bool> mask(live.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      ZPoly cand{rest.back()};
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (mask[i]) cand = zmul(cand, lifted[live[i]], pk);
      }
      cand = make_primitive(symmetric_mod(cand, pk));
      if (auto q = zdivide(rest, cand)) {
        found.push_back(cand);
        rest = *q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (!mask[i]) keep.push_back(live[i]);
        }
        live = std::move(keep);
        hit = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!hit) ++s;
  }
  if (rest.size() > 1) found.push_back(make_primitive(rest));
  return found;
}

std::vector<mpz_class> small_divisors(const mpz_class& v) {
  mpz_class a = abs(v);
  std::vector<mpz_class> out;
  if (a == 0 || a > 1000000000) return out;
  unsigned long n = a.get_ui();
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.emplace_back(d);
    if (d != n / d) out.emplace_back(n / d);
  }
  return out;
}

/// Irreducible primitive factors of a squarefree primitive integer polynomial.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  std::vector<ZPoly> out;
  if (f.front() == 0) {
    out.push_back({0, 1});
    f.erase(f.begin());
  }
  // Rational roots r = a/b with a | f(0), b | lc(f).
  auto num_divs = small_divisors(f.front());
  auto den_divs = small_divisors(f.back());
  for (const auto& b : den_divs) {
    for (const auto& a : num_divs) {
      for (int sign : {1, -1}) {
        if (f.size() <= 1) break;
        mpq_class r(sign * a, b);
        r.canonicalize();
        if (r.get_den() != b) continue;
        Scalar rs(r);
        if (!to_rational(f).evaluate(rs).is_zero()) continue;
        ZPoly lin{-r.get_num(), r.get_den()};
        out.push_back(lin);
        f = *zdivide(f, lin);
      }
    }
  }
  if (f.size() > 1) {
    for (auto& g : zassenhaus(f)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<Polynomial, int>> squarefree_q(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial df = f.derivative();
  Polynomial b = gcd(f, df);
  Polynomial c = f / b;
  Polynomial d = df / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Polynomial a = gcd(c, d);
    c = c / a;
    d = d / a - c.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

std::vector<std::pair<Polynomial, int>> factor_q(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& [s, k] : squarefree_q(f.monic())) {
    for (const auto& g : factor_squarefree_z(primitive_integer(s))) out.emplace_back(to_rational(g).monic(), k);
  }
  return out;
}

}  // namespace

Factorization factor(const Polynomial& f) {
  if (f.is_zero()) throw ValidationError("cannot factor the zero polynomial");
  Factorization out{f.leading(), {}};
  if (f.degree() == 0) return out;
  out.factors = f.field().is_rational() ? factor_q(f) : factor_fp(f);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

}  // namespace opalg
