#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burniat/exactarith.hpp"

namespace burniat {

// y^2 = r x^4 + s x^2 z^2 + t z^4, weights (1,2,1).
struct QuarticCurve {
  Rational r, s, t;
  friend bool operator==(const QuarticCurve&, const QuarticCurve&) = default;
  friend auto operator<=>(const QuarticCurve&, const QuarticCurve&) = default;
};

std::string to_string(const QuarticCurve& c);

// Affine (x, y) with z = 1, or (1 : eta : 0).
class QuarticPoint {
 public:
  QuarticPoint() = default;
  static QuarticPoint affine(Rational x, Rational y);
  static QuarticPoint at_infinity(Rational eta);

  bool is_affine() const { return !infinite_; }
  bool is_at_infinity() const { return infinite_; }
  const Rational& x() const;
  const Rational& y() const;
  const Rational& eta() const;
  std::string str() const;

  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
  friend auto operator<=>(const QuarticPoint&, const QuarticPoint&) = default;

 private:
  bool infinite_ = false;
  Rational a_, b_;  // (x, y) or (0, eta)
};

bool is_smooth(const QuarticCurve& c);
Rational a_squared(const QuarticCurve& c);
Rational quartic_value(const QuarticCurve& c, const Rational& x);  // r x^4 + s x^2 + t
bool on_curve(const QuarticCurve& c, const QuarticPoint& p);

// Integer coefficients, square content of gcd(r,s,t) removed. y_new = y_scale * y_old.
struct NormalizedQuartic {
  QuarticCurve model;
  Rational y_scale;
};
NormalizedQuartic normalize(const QuarticCurve& c);

// r t (s^2 - 4 r t)^2
Rational quartic_discriminant(const QuarticCurve& c);

// A completion of Q: the real place, or Q_p.
struct Place {
  bool real = true;
  Integer prime = 0;
  static Place infinity() { return {}; }
  static Place at(const Integer& p) { return {false, p}; }
  std::string str() const { return real ? "inf" : prime.get_str(); }
  friend bool operator==(const Place&, const Place&) = default;
};

bool solvable_real(const QuarticCurve& c);
bool solvable_padic(const QuarticCurve& c, const Integer& p);
bool everywhere_locally_solvable(const QuarticCurve& c, const PrimeSet& primes);
// First place without points (real first, then primes ascending), if any.
std::optional<Place> local_obstruction(const QuarticCurve& c, const PrimeSet& primes);

std::vector<QuarticPoint> search_points(const QuarticCurve& c, std::uint64_t H);
// Same box as search_points, stops at the first point.
std::optional<QuarticPoint> first_point(const QuarticCurve& c, std::uint64_t H);

QuarticCurve quadratic_twist(const QuarticCurve& c, const Integer& m);

// Y^2 = X^3 + a X^2 + b X + c
struct WeierstrassCurve {
  Rational a, b, c;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};
std::string to_string(const WeierstrassCurve& w);

class WeierstrassPoint {
 public:
  WeierstrassPoint() = default;  // identity
  static WeierstrassPoint identity() { return {}; }
  static WeierstrassPoint finite(Rational X, Rational Y);

  bool is_identity() const { return identity_; }
  const Rational& X() const;
  const Rational& Y() const;
  std::string str() const;

  friend bool operator==(const WeierstrassPoint&, const WeierstrassPoint&) = default;
  friend auto operator<=>(const WeierstrassPoint&, const WeierstrassPoint&) = default;

 private:
  bool identity_ = true;  // identity sorts first
  Rational X_, Y_;
};

Rational discriminant(const WeierstrassCurve& w);
bool is_nonsingular(const WeierstrassCurve& w);
bool on_curve(const WeierstrassCurve& w, const WeierstrassPoint& p);

// Y^2 = X^3 + s m X^2 + r t m^2 X; m any nonzero rational.
WeierstrassCurve jacobian(const QuarticCurve& c, const Rational& m);
// Image of a quartic point on jacobian(c, 1): (r x^2, r x y); infinity -> Identity.
WeierstrassPoint to_jacobian(const QuarticCurve& c, const QuarticPoint& p);

WeierstrassPoint negate(const WeierstrassPoint& p);
WeierstrassPoint add(const WeierstrassCurve& w, const WeierstrassPoint& p, const WeierstrassPoint& q);
WeierstrassPoint multiply(const WeierstrassCurve& w, const WeierstrassPoint& p, long k);
// Smallest k in 1..bound with k P = O, or nullopt.
std::optional<int> order_up_to(const WeierstrassCurve& w, const WeierstrassPoint& p, int bound);
// kP != O for k = 1..12; by Mazur this proves infinite order.
bool infinite_order_certificate(const WeierstrassCurve& w, const WeierstrassPoint& p);

// Points with X = u/e^2 on an integral model, max(|u|, e^2) <= H, Identity first.
std::vector<WeierstrassPoint> search_points(const WeierstrassCurve& w, std::uint64_t H);

// w^2 = f(x, z), f binary form of even degree; coefficients ascending in x.
struct BinaryFormCurve {
  std::vector<Rational> coeffs;  // size = degree + 1
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const BinaryFormCurve&, const BinaryFormCurve&) = default;
};
std::string to_string(const BinaryFormCurve& f);

// Affine (x, w) or (1 : eta : 0) with eta^2 = leading coefficient.
using FormPoint = QuarticPoint;
bool on_curve(const BinaryFormCurve& f, const FormPoint& p);
std::vector<FormPoint> search_points(const BinaryFormCurve& f, std::uint64_t H);

}  // namespace burniat
