#include "burniat/genus1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "int128.hpp"

namespace burniat {

std::string to_string(const QuarticCurve& c) {
  return "(" + c.r.str() + ", " + c.s.str() + ", " + c.t.str() + ")";
}

QuarticPoint QuarticPoint::affine(Rational x, Rational y) {
  QuarticPoint p;
  p.a_ = std::move(x);
  p.b_ = std::move(y);
  return p;
}

QuarticPoint QuarticPoint::at_infinity(Rational eta) {
  QuarticPoint p;
  p.infinite_ = true;
  p.b_ = std::move(eta);
  return p;
}

const Rational& QuarticPoint::x() const {
  if (infinite_) throw DomainError("point at infinity has no affine x");
  return a_;
}
const Rational& QuarticPoint::y() const {
  if (infinite_) throw DomainError("point at infinity has no affine y");
  return b_;
}
const Rational& QuarticPoint::eta() const {
  if (!infinite_) throw DomainError("affine point has no eta");
  return b_;
}

std::string QuarticPoint::str() const {
  if (infinite_) return "(1 : " + b_.str() + " : 0)";
  return "(" + a_.str() + ", " + b_.str() + ")";
}

bool is_smooth(const QuarticCurve& c) {
  return !(c.r * c.t * (c.s * c.s - Rational(4) * c.r * c.t)).is_zero();
}

Rational a_squared(const QuarticCurve& c) {
  if (!is_smooth(c)) throw DomainError("a_squared: singular curve " + to_string(c));
  return c.s * c.s / (c.r * c.t);
}

Rational quartic_value(const QuarticCurve& c, const Rational& x) {
  Rational x2 = x * x;
  return (c.r * x2 + c.s) * x2 + c.t;
}

bool on_curve(const QuarticCurve& c, const QuarticPoint& p) {
  if (p.is_at_infinity()) return p.eta() * p.eta() == c.r;
  return p.y() * p.y() == quartic_value(c, p.x());
}

Rational quartic_discriminant(const QuarticCurve& c) {
  Rational q = c.s * c.s - Rational(4) * c.r * c.t;
  return c.r * c.t * q * q;
}

NormalizedQuartic normalize(const QuarticCurve& c) {
  Integer L = common_denominator({c.r, c.s, c.t});
  Rational scale(L);
  Rational L2 = scale * scale;
  QuarticCurve m{c.r * L2, c.s * L2, c.t * L2};
  Integer g = 0;
  for (const Rational* v : {&m.r, &m.s, &m.t}) g = gcd(g, v->num());
  if (g == 0) throw DomainError("normalize: zero curve");
  Integer k = 1;
  for (const auto& [p, e] : factorize(g))
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
  Rational k2 = Rational(k) * Rational(k);
  m = {m.r / k2, m.s / k2, m.t / k2};
  return {m, scale / Rational(k)};
}

QuarticCurve quadratic_twist(const QuarticCurve& c, const Integer& m) {
  if (m == 0) throw DomainError("quadratic_twist by zero");
  if (!is_squarefree(m)) throw DomainError("quadratic_twist: " + m.get_str() + " is not squarefree");
  Rational q(m);
  return {c.r * q, c.s * q, c.t * q};
}

// ---- real and p-adic solvability ----

bool solvable_real(const QuarticCurve& c) {
  if (c.r.sign() >= 0 || c.t.sign() >= 0) return true;
  // r, t < 0: need a nonnegative value of r u^2 + s u + t for some u > 0
  if (c.s.sign() <= 0) return false;
  return (c.s * c.s - Rational(4) * c.r * c.t).sign() >= 0;
}

namespace {

struct DiskSearch {
  std::vector<Integer> f;  // ascending, integral
  Integer p;
  int need;       // valuation gap that freezes the square class
  int max_depth;  // precision cap

  // Taylor coefficients of f at a.
  std::vector<Integer> shift(const Integer& a) const {
    std::vector<Integer> b = f;
    std::size_t n = b.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n - 1;; --j) {
        b[j] += a * b[j + 1];
        if (j == i) break;
      }
    return b;
  }

  bool unit_is_square(const Integer& u) const {
    if (p == 2) {
      Integer r = u % 8;
      if (r < 0) r += 8;
      return r == 1;
    }
    return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == 1;
  }

  // Does y^2 = f(x) have a solution with x in a + p^k Z_p?
  bool disk(const Integer& a, int k) const {
    if (k > max_depth) throw InvariantViolation("p-adic search exceeded precision bound at p = " + p.get_str());
    std::vector<Integer> h = shift(a);
    if (h[0] == 0) return true;
    // Hensel: a simple root of f near a.
    if (h[1] != 0 && valuation(h[0], p) > 2 * valuation(h[1], p)) return true;
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
    int v0 = valuation(h[0], p);
    bool frozen = true;
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] == 0) continue;
      if (valuation(h[i], p) + static_cast<int>(i) * k - v0 < need) {
        frozen = false;
        break;
      }
    }
    if (frozen) {
      if (v0 % 2) return false;
      Integer u = h[0];
      for (int i = 0; i < v0; ++i) mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
      return unit_is_square(u);
    }
    unsigned long pl = p.get_ui();
    for (unsigned long d = 0; d < pl; ++d)
      if (disk(a + Integer(d) * pk, k + 1)) return true;
    return false;
  }
};

}  // namespace

bool solvable_padic(const QuarticCurve& c, const Integer& p) {
  if (!is_prime(p)) throw DomainError("solvable_padic: " + p.get_str() + " is not prime");
  if (!is_smooth(c)) throw DomainError("solvable_padic: singular curve " + to_string(c));
  if (!p.fits_ulong_p()) throw DomainError("solvable_padic: prime too large");
  QuarticCurve m = normalize(c).model;
  Integer R = m.r.num(), S = m.s.num(), T = m.t.num();
  Integer disc4 = 4 * R * T * (S * S - 4 * R * T) * (S * S - 4 * R * T);
  int N = 2 * valuation(disc4, p) + 3;
  int need = p == 2 ? 3 : 1;
  // z = 1 chart, x in Z_p
  DiskSearch affine{{T, 0, S, 0, R}, p, need, N};
  if (affine.disk(0, 0)) return true;
  // x = 1 chart, z in pZ_p
  DiskSearch far{{R, 0, S, 0, T}, p, need, N};
  return far.disk(0, 1);
}

std::optional<Place> local_obstruction(const QuarticCurve& c, const PrimeSet& primes) {
  if (!is_smooth(c)) throw DomainError("local solvability: singular curve " + to_string(c));
  if (!solvable_real(c)) return Place::infinity();
  QuarticCurve m = normalize(c).model;
  PrimeSet all = primes.unite(PrimeSet({Integer(2)})).unite(prime_support(quartic_discriminant(m)));
  for (const auto& p : all)
    if (!solvable_padic(m, p)) return Place::at(p);
  return std::nullopt;
}

bool everywhere_locally_solvable(const QuarticCurve& c, const PrimeSet& primes) {
  return !local_obstruction(c, primes).has_value();
}

// ---- quartic point search ----

namespace {

using i128 = __int128;

struct QuarticScan {
  Integer R, S, T;
  Rational y_scale;
  std::uint64_t H;
  bool wide;  // int128 fast path unusable

  explicit QuarticScan(const QuarticCurve& c, std::uint64_t h) : H(h) {
    NormalizedQuartic n = normalize(c);
    R = n.model.r.num();
    S = n.model.s.num();
    T = n.model.t.num();
    y_scale = n.y_scale;
    Integer h4 = Integer(static_cast<unsigned long>(H));
    h4 = h4 * h4 * h4 * h4;
    Integer bound = (abs(R) + abs(S) + abs(T)) * h4;
    wide = mpz_sizeinbase(bound.get_mpz_t(), 2) > 120;
  }

  // Calls row(n, roots) per denominator n; roots[m] set when the value at m/n is a square.
  template <class Row>
  void rows(Row&& row) const {
    std::vector<std::optional<Integer>> roots(H + 1);
    i128 r = 0, s = 0, t = 0;
    if (!wide) {
      r = to_i128(R);
      s = to_i128(S);
      t = to_i128(T);
    }
    std::vector<i128> m2(H + 1);
    for (std::uint64_t m = 0; m <= H; ++m) m2[m] = static_cast<i128>(m) * static_cast<i128>(m);
    for (std::uint64_t n = 1; n <= H; ++n) {
      i128 n2 = m2[n];
      i128 tn4 = t * n2 * n2;
      i128 sn2 = s * n2;
      for (std::uint64_t m = 0; m <= H; ++m) {
        roots[m].reset();
        if (std::gcd(m, n) != 1) continue;
        if (!wide) {
          i128 v = (r * m2[m] + sn2) * m2[m] + tn4;
          unsigned __int128 root;
          if (square_root_i128(v, root)) roots[m] = from_u128(root);
        } else {
          Integer mm(static_cast<unsigned long>(m)), nn(static_cast<unsigned long>(n));
          Integer v = R * mm * mm * mm * mm + S * mm * mm * nn * nn + T * nn * nn * nn * nn;
          if (v >= 0 && mpz_perfect_square_p(v.get_mpz_t())) roots[m] = isqrt(v);
        }
      }
      if (!row(n, roots)) return;
    }
  }

  QuarticPoint make(long long m, std::uint64_t n, const Integer& root, int sign) const {
    Integer nn(static_cast<unsigned long>(n));
    Rational x(Integer(static_cast<long>(m)), nn);
    Rational y = Rational(Integer(sign * root), nn * nn) / y_scale;
    return QuarticPoint::affine(x, y);
  }

  std::vector<QuarticPoint> at_infinity() const {
    std::vector<QuarticPoint> out;
    if (R >= 0 && mpz_perfect_square_p(R.get_mpz_t())) {
      Rational eta = Rational(isqrt(R)) / y_scale;
      out.push_back(QuarticPoint::at_infinity(eta));
      if (!eta.is_zero()) out.push_back(QuarticPoint::at_infinity(-eta));
    }
    return out;
  }
};

}  // namespace

std::vector<QuarticPoint> search_points(const QuarticCurve& c, std::uint64_t H) {
  if (H == 0) throw DomainError("search height must be positive");
  if (!is_smooth(c)) throw DomainError("search_points: singular curve " + to_string(c));
  QuarticScan scan(c, H);
  std::vector<QuarticPoint> out;
  auto push = [&](long long m, std::uint64_t n, const Integer& root) {
    out.push_back(scan.make(m, n, root, 1));
    if (root != 0) out.push_back(scan.make(m, n, root, -1));
  };
  scan.rows([&](std::uint64_t n, const std::vector<std::optional<Integer>>& roots) {
    for (std::uint64_t m = H; m >= 1; --m)
      if (roots[m]) push(-static_cast<long long>(m), n, *roots[m]);
    if (roots[0]) push(0, n, *roots[0]);
    for (std::uint64_t m = 1; m <= H; ++m)
      if (roots[m]) push(static_cast<long long>(m), n, *roots[m]);
    return true;
  });
  for (auto& p : scan.at_infinity()) out.push_back(std::move(p));
  return out;
}

std::optional<QuarticPoint> first_point(const QuarticCurve& c, std::uint64_t H) {
  if (H == 0) throw DomainError("search height must be positive");
  if (!is_smooth(c)) throw DomainError("first_point: singular curve " + to_string(c));
  QuarticScan scan(c, H);
  auto inf = scan.at_infinity();
  if (!inf.empty()) return inf.front();
  std::optional<QuarticPoint> found;
  scan.rows([&](std::uint64_t n, const std::vector<std::optional<Integer>>& roots) {
    for (std::uint64_t m = 0; m <= H; ++m)
      if (roots[m]) {
        found = scan.make(static_cast<long long>(m), n, *roots[m], 1);
        return false;
      }
    return true;
  });
  return found;
}

// ---- Weierstrass models ----

namespace {

std::string signed_term(const Rational& coef, const std::string& mono) {
  if (coef.is_zero()) return "";
  std::string s = coef.sign() < 0 ? " - " : " + ";
  Rational a = abs(coef);
  if (mono.empty()) return s + a.str();
  if (a == Rational(1)) return s + mono;
  return s + a.str() + "*" + mono;
}

}  // namespace

std::string to_string(const WeierstrassCurve& w) {
  return "Y^2 = X^3" + signed_term(w.a, "X^2") + signed_term(w.b, "X") + signed_term(w.c, "");
}

WeierstrassPoint WeierstrassPoint::finite(Rational X, Rational Y) {
  WeierstrassPoint p;
  p.identity_ = false;
  p.X_ = std::move(X);
  p.Y_ = std::move(Y);
  return p;
}

const Rational& WeierstrassPoint::X() const {
  if (identity_) throw DomainError("identity has no coordinates");
  return X_;
}
const Rational& WeierstrassPoint::Y() const {
  if (identity_) throw DomainError("identity has no coordinates");
  return Y_;
}

std::string WeierstrassPoint::str() const {
  return identity_ ? "O" : "(" + X_.str() + ", " + Y_.str() + ")";
}

Rational discriminant(const WeierstrassCurve& w) {
  const Rational &a = w.a, &b = w.b, &c = w.c;
  return a * a * b * b - Rational(4) * b * b * b - Rational(4) * a * a * a * c - Rational(27) * c * c +
         Rational(18) * a * b * c;
}

bool is_nonsingular(const WeierstrassCurve& w) { return !discriminant(w).is_zero(); }

bool on_curve(const WeierstrassCurve& w, const WeierstrassPoint& p) {
  if (p.is_identity()) return true;
  const Rational& X = p.X();
  return p.Y() * p.Y() == ((X + w.a) * X + w.b) * X + w.c;
}

WeierstrassCurve jacobian(const QuarticCurve& c, const Rational& m) {
  if (m.is_zero()) throw DomainError("jacobian: zero twist");
  if (!is_smooth(c)) throw DomainError("jacobian: singular curve " + to_string(c));
  return {c.s * m, c.r * c.t * m * m, Rational(0)};
}

WeierstrassPoint to_jacobian(const QuarticCurve& c, const QuarticPoint& p) {
  if (!on_curve(c, p)) throw DomainError("to_jacobian: point " + p.str() + " not on " + to_string(c));
  if (p.is_at_infinity()) return WeierstrassPoint::identity();
  return WeierstrassPoint::finite(c.r * p.x() * p.x(), c.r * p.x() * p.y());
}

WeierstrassPoint negate(const WeierstrassPoint& p) {
  if (p.is_identity()) return p;
  return WeierstrassPoint::finite(p.X(), -p.Y());
}

namespace {

WeierstrassPoint add_unchecked(const WeierstrassCurve& w, const WeierstrassPoint& p, const WeierstrassPoint& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  Rational lambda;
  if (p.X() == q.X()) {
    if (p.Y() + q.Y() == Rational(0)) return WeierstrassPoint::identity();
    const Rational& x = p.X();
    lambda = (Rational(3) * x * x + Rational(2) * w.a * x + w.b) / (Rational(2) * p.Y());
  } else {
    lambda = (q.Y() - p.Y()) / (q.X() - p.X());
  }
  Rational x3 = lambda * lambda - w.a - p.X() - q.X();
  Rational y3 = -(p.Y() + lambda * (x3 - p.X()));
  return WeierstrassPoint::finite(x3, y3);
}

void require_on(const WeierstrassCurve& w, const WeierstrassPoint& p) {
  if (!on_curve(w, p)) throw DomainError("point " + p.str() + " is not on " + to_string(w));
}

}  // namespace

WeierstrassPoint add(const WeierstrassCurve& w, const WeierstrassPoint& p, const WeierstrassPoint& q) {
  require_on(w, p);
  require_on(w, q);
  return add_unchecked(w, p, q);
}

WeierstrassPoint multiply(const WeierstrassCurve& w, const WeierstrassPoint& p, long k) {
  require_on(w, p);
  WeierstrassPoint base = k < 0 ? negate(p) : p;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  WeierstrassPoint acc;
  while (n) {
    if (n & 1) acc = add_unchecked(w, acc, base);
    base = add_unchecked(w, base, base);
    n >>= 1;
  }
  return acc;
}

std::optional<int> order_up_to(const WeierstrassCurve& w, const WeierstrassPoint& p, int bound) {
  require_on(w, p);
  WeierstrassPoint q = p;
  for (int k = 1; k <= bound; ++k) {
    if (q.is_identity()) return k;
    q = add_unchecked(w, q, p);
  }
  return std::nullopt;
}

bool infinite_order_certificate(const WeierstrassCurve& w, const WeierstrassPoint& p) {
  if (!is_nonsingular(w)) throw DomainError("infinite_order_certificate: singular curve " + to_string(w));
  return !order_up_to(w, p, 12).has_value();
}

std::vector<WeierstrassPoint> search_points(const WeierstrassCurve& w, std::uint64_t H) {
  if (H == 0) throw DomainError("search height must be positive");
  Integer mu = common_denominator({w.a, w.b, w.c});
  Rational m(mu);
  Integer A = (w.a * m * m).num(), B = (w.b * pow(m, 4)).num(), C = (w.c * pow(m, 6)).num();
  std::vector<WeierstrassPoint> out{WeierstrassPoint::identity()};
  Integer bound(static_cast<unsigned long>(H));
  for (unsigned long e = 1; Integer(e) * e <= bound; ++e) {
    Integer e2 = Integer(e) * e, e4 = e2 * e2, e6 = e4 * e2;
    Integer Ae2 = A * e2, Be4 = B * e4, Ce6 = C * e6;
    Rational X_den = Rational(e2) * m * m, Y_den = Rational(e2 * e) * m * m * m;
    for (long u = -static_cast<long>(H); u <= static_cast<long>(H); ++u) {
      if (std::gcd(static_cast<unsigned long>(u < 0 ? -u : u), e) != 1) continue;
      Integer U(u);
      Integer v = ((U + Ae2) * U + Be4) * U + Ce6;
      if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) continue;
      Rational X = Rational(U) / X_den;
      Rational Y = Rational(isqrt(v)) / Y_den;
      out.push_back(WeierstrassPoint::finite(X, Y));
      if (!Y.is_zero()) out.push_back(WeierstrassPoint::finite(X, -Y));
    }
  }
  return out;
}

// ---- binary forms ----

std::string to_string(const BinaryFormCurve& f) {
  std::string s;
  int d = f.degree();
  for (int i = d; i >= 0; --i) {
    const Rational& c = f.coeffs[static_cast<std::size_t>(i)];
    std::string mono;
    if (i > 0) mono = i == 1 ? "x" : "x^" + std::to_string(i);
    int zp = d - i;
    if (zp > 0) mono += std::string(mono.empty() ? "" : "*") + (zp == 1 ? "z" : "z^" + std::to_string(zp));
    s += signed_term(c, mono);
  }
  if (s.empty()) return "w^2 = 0";
  if (s.compare(0, 3, " + ") == 0) s = s.substr(3);
  else s = "-" + s.substr(3);
  return "w^2 = " + s;
}

bool on_curve(const BinaryFormCurve& f, const FormPoint& p) {
  if (p.is_at_infinity()) return p.eta() * p.eta() == f.coeffs.back();
  return p.y() * p.y() == evaluate(f.coeffs, p.x());
}

std::vector<FormPoint> search_points(const BinaryFormCurve& f, std::uint64_t H) {
  if (H == 0) throw DomainError("search height must be positive");
  int d = f.degree();
  if (d < 2 || d % 2) throw DomainError("binary form must have even degree");
  Rational L(common_denominator(f.coeffs));
  std::vector<Integer> c;
  for (const auto& a : f.coeffs) c.push_back((a * L * L).num());
  std::vector<FormPoint> out;
  for (unsigned long z = 1; z <= H; ++z) {
    Integer Z(z);
    Rational wden = pow(Rational(Z), d / 2) * L;
    std::vector<Integer> zpow(static_cast<std::size_t>(d) + 1);
    Integer zp = 1;
    for (int i = 0; i <= d; ++i) {
      zpow[static_cast<std::size_t>(i)] = zp;
      zp *= Z;
    }
    for (long x = -static_cast<long>(H); x <= static_cast<long>(H); ++x) {
      if (std::gcd(static_cast<unsigned long>(x < 0 ? -x : x), z) != 1) continue;
      Integer X(x), v = 0;
      for (int i = d; i >= 0; --i) v = v * X + c[static_cast<std::size_t>(i)] * zpow[static_cast<std::size_t>(d - i)];
      if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) continue;
      Rational w = Rational(isqrt(v)) / wden;
      Rational xr(X, Z);
      out.push_back(FormPoint::affine(xr, w));
      if (!w.is_zero()) out.push_back(FormPoint::affine(xr, -w));
    }
  }
  const Integer& lead = c.back();
  if (lead >= 0 && mpz_perfect_square_p(lead.get_mpz_t())) {
    Rational eta = Rational(isqrt(lead)) / L;
    out.push_back(FormPoint::at_infinity(eta));
    if (!eta.is_zero()) out.push_back(FormPoint::at_infinity(-eta));
  }
  return out;
}

}  // namespace burniat
