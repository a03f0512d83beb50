#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "burniat/genus1.hpp"

namespace burniat {

// Three even quartics E1, E2, E3 and the relation x1 x2 x3 = c.
struct BurniatSurface {
  std::array<QuarticCurve, 3> curves;
  Rational c;
  friend bool operator==(const BurniatSurface&, const BurniatSurface&) = default;
};

struct SigmaInvariants {
  Rational sigma1, sigma2, sigma3, sigma4;
  friend bool operator==(const SigmaInvariants&, const SigmaInvariants&) = default;
};

SigmaInvariants sigma(const BurniatSurface& S);
Rational discriminant_D(const BurniatSurface& S);
// sigma4 - 4 sigma3 + 16 sigma2 - 64 sigma1, equal to the product of s^2 - 4rt.
Rational sigma_discriminant(const SigmaInvariants& s);
bool is_smooth_surface(const BurniatSurface& S);
PrimeSet bad_primes(const BurniatSurface& S);

// Element g1^e1 g2^e2 g3^e3 of (Z/2)^3, bit i-1 holding e_i.
struct GammaElement {
  unsigned bits = 0;
  static GammaElement identity() { return {0}; }
  static GammaElement generator(int i) { return {1u << (i - 1)}; }  // i = 1, 2, 3
  static std::array<GammaElement, 8> all();
  friend GammaElement operator*(GammaElement a, GammaElement b) { return {a.bits ^ b.bits}; }
  friend bool operator==(GammaElement, GammaElement) = default;
  bool x_flip(int j) const;  // does x_j change sign (j = 1..3)
  bool y_flip(int j) const;
};

// A point of the surface or of a twist: three curve points, one per factor.
// Affine: all x_j finite and nonzero with x1 x2 x3 = c.
// Infinity component: some x_j = 0, some x_k at infinity, the third free.
struct XPoint {
  std::array<QuarticPoint, 3> coords;
  bool is_affine() const;
  std::string str() const;
  friend bool operator==(const XPoint&, const XPoint&) = default;
  friend auto operator<=>(const XPoint&, const XPoint&) = default;
};

bool on_surface(const BurniatSurface& S, const XPoint& P);
XPoint gamma_act(const BurniatSurface& S, GammaElement g, const XPoint& P);
// The 8 images, sorted. Throws InvariantViolation if they are not distinct.
std::vector<XPoint> orbit(const BurniatSurface& S, const XPoint& P);

enum class HexSide { E1_t3, E1_r3, E2_t1, E2_r1, E3_t2, E3_r2 };
enum class Vertex { Origin, Identity };  // (0,0) or the point at infinity of the model

std::string to_string(HexSide s);
HexSide hex_side_from_string(const std::string& label);

struct HexagonCurve {
  HexSide side;
  int curve_index;  // 1..3, the factor whose Jacobian is twisted
  Rational twist;   // the t_j or r_j used as twist
  WeierstrassCurve model;
  HexSide prev, next;          // neighbours in the cycle
  Vertex shared_prev, shared_next;
  friend bool operator==(const HexagonCurve&, const HexagonCurve&) = default;
};

// Six curves in the fixed list order E1 t3, E1 r3, E2 t1, E2 r1, E3 t2, E3 r2.
std::vector<HexagonCurve> hexagon(const BurniatSurface& S);
// Cycle order used for adjacency.
const std::array<HexSide, 6>& hexagon_cycle();

struct FiberModels {
  int projection;  // j
  Rational x0;
  std::array<int, 2> factors;  // remaining curve indices, ascending
  std::array<Rational, 3> first, second;
  BinaryFormCurve curveD;  // octic: product of the two quartics
  BinaryFormCurve curveE;  // quartic in (x^2, z^2)
  BinaryFormCurve curveF;  // sextic x z * quartic
};

enum class FiberType { SmoothGenus5, Genus3TwoNodes, SplitTwoElliptic };
std::string to_string(FiberType t);

FiberModels fiber_models(const BurniatSurface& S, int j, const Rational& x0);
FiberType fiber_type(const BurniatSurface& S, int j, const Rational& x0);
// Resultant of the binary quartics a0 x^4 + a1 x^2 z^2 + a2 z^4 and the b's.
Rational quartic_resultant(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b);
// Sylvester determinant of two univariate polynomials (ascending coefficients).
Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);

}  // namespace burniat
