#include "burniat/surface.hpp"

#include <algorithm>

namespace burniat {

SigmaInvariants sigma(const BurniatSurface& S) {
  const auto& [e1, e2, e3] = S.curves;
  const Rational &r1 = e1.r, &s1 = e1.s, &t1 = e1.t;
  const Rational &r2 = e2.r, &s2 = e2.s, &t2 = e2.t;
  const Rational &r3 = e3.r, &s3 = e3.s, &t3 = e3.t;
  Rational q1 = s1 * s1, q2 = s2 * s2, q3 = s3 * s3;
  SigmaInvariants out;
  out.sigma1 = r1 * r2 * r3 * t1 * t2 * t3;
  out.sigma2 = r1 * r2 * q3 * t1 * t2 + r1 * r3 * q2 * t1 * t3 + r2 * r3 * q1 * t2 * t3;
  out.sigma3 = r1 * q2 * q3 * t1 + r2 * q1 * q3 * t2 + r3 * q1 * q2 * t3;
  out.sigma4 = q1 * q2 * q3;
  return out;
}

Rational sigma_discriminant(const SigmaInvariants& s) {
  return s.sigma4 - Rational(4) * s.sigma3 + Rational(16) * s.sigma2 - Rational(64) * s.sigma1;
}

Rational discriminant_D(const BurniatSurface& S) {
  SigmaInvariants sg = sigma(S);
  const Rational &s1 = sg.sigma1, &s2 = sg.sigma2, &s3 = sg.sigma3, &s4 = sg.sigma4;
  Rational R = S.curves[0].r * S.curves[1].r * S.curves[2].r;
  Rational T = S.curves[0].t * S.curves[1].t * S.curves[2].t;
  Rational P = S.curves[0].s * S.curves[1].s * S.curves[2].s;
  const Rational& c = S.c;
  Rational c2 = c * c;
  std::array<Rational, 9> cp;  // c^0, c^2, ..., c^16
  cp[0] = 1;
  for (std::size_t i = 1; i < cp.size(); ++i) cp[i] = cp[i - 1] * c2;
  Rational R2 = R * R, T2 = T * T;
  Rational mid = Rational(4) * s1 - Rational(2) * s2 + s3;
  Rational odd = Rational(-5) * s1 + s2;
  return R2 * R2 * cp[8] + R2 * R * P * cp[7] + R2 * mid * cp[6] + R * P * odd * cp[5] +
         (Rational(6) * s1 * s1 - Rational(4) * s1 * s2 - Rational(2) * s1 * s3 + s1 * s4 + s2 * s2) * cp[4] +
         P * T * odd * cp[3] + T2 * mid * cp[2] + P * T2 * T * cp[1] + T2 * T2;
}

bool is_smooth_surface(const BurniatSurface& S) {
  if (S.c.is_zero()) return false;
  bool curves_ok = std::all_of(S.curves.begin(), S.curves.end(), [](const auto& e) { return is_smooth(e); });
  SigmaInvariants sg = sigma(S);
  bool sigma_ok = !(sg.sigma1 * sigma_discriminant(sg)).is_zero();
  if (curves_ok != sigma_ok) throw InvariantViolation("sigma cross-check disagrees with curve smoothness");
  return curves_ok && !discriminant_D(S).is_zero();
}

PrimeSet bad_primes(const BurniatSurface& S) {
  if (!is_smooth_surface(S)) throw DomainError("bad_primes: surface is not smooth");
  SigmaInvariants sg = sigma(S);
  Rational prod = Rational(2) * S.c * discriminant_D(S) * sg.sigma1 * sigma_discriminant(sg);
  return prime_support(prod);
}

// ---- group action ----

std::array<GammaElement, 8> GammaElement::all() {
  std::array<GammaElement, 8> out;
  for (unsigned i = 0; i < 8; ++i) out[i] = {i};
  return out;
}

namespace {
bool bit(unsigned bits, int i) { return (bits >> (i - 1)) & 1u; }
}  // namespace

// g1 flips x2, y2, x3; g2 flips x1, x3, y3; g3 flips x1, y1, x2.
bool GammaElement::x_flip(int j) const {
  switch (j) {
    case 1: return bit(bits, 2) != bit(bits, 3);
    case 2: return bit(bits, 1) != bit(bits, 3);
    case 3: return bit(bits, 1) != bit(bits, 2);
  }
  throw DomainError("curve index out of range");
}

bool GammaElement::y_flip(int j) const {
  switch (j) {
    case 1: return bit(bits, 3);
    case 2: return bit(bits, 1);
    case 3: return bit(bits, 2);
  }
  throw DomainError("curve index out of range");
}

bool XPoint::is_affine() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& p) { return p.is_affine() && !p.x().is_zero(); });
}

std::string XPoint::str() const {
  return "[" + coords[0].str() + ", " + coords[1].str() + ", " + coords[2].str() + "]";
}

bool on_surface(const BurniatSurface& S, const XPoint& P) {
  for (int j = 0; j < 3; ++j)
    if (!on_curve(S.curves[j], P.coords[j])) return false;
  if (P.is_affine()) return P.coords[0].x() * P.coords[1].x() * P.coords[2].x() == S.c;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      if (j != k && P.coords[j].is_affine() && P.coords[j].x().is_zero() && P.coords[k].is_at_infinity())
        return true;
  return false;
}

XPoint gamma_act(const BurniatSurface& S, GammaElement g, const XPoint& P) {
  if (!on_surface(S, P)) throw DomainError("gamma_act: point " + P.str() + " is not on the surface");
  XPoint out = P;
  for (int j = 1; j <= 3; ++j) {
    QuarticPoint& q = out.coords[j - 1];
    // (1 : eta : 0) with eta = y/x^2 only sees the sign of y.
    if (q.is_at_infinity()) {
      if (g.y_flip(j)) q = QuarticPoint::at_infinity(-q.eta());
    } else {
      Rational x = g.x_flip(j) ? -q.x() : q.x();
      Rational y = g.y_flip(j) ? -q.y() : q.y();
      q = QuarticPoint::affine(x, y);
    }
  }
  return out;
}

std::vector<XPoint> orbit(const BurniatSurface& S, const XPoint& P) {
  std::vector<XPoint> out;
  for (GammaElement g : GammaElement::all()) out.push_back(gamma_act(S, g, P));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != 8)
    throw InvariantViolation("orbit of " + P.str() + " has " + std::to_string(out.size()) + " points");
  return out;
}

// ---- hexagon ----

std::string to_string(HexSide s) {
  switch (s) {
    case HexSide::E1_t3: return "E1 by t3";
    case HexSide::E1_r3: return "E1 by r3";
    case HexSide::E2_t1: return "E2 by t1";
    case HexSide::E2_r1: return "E2 by r1";
    case HexSide::E3_t2: return "E3 by t2";
    case HexSide::E3_r2: return "E3 by r2";
  }
  return "?";
}

HexSide hex_side_from_string(const std::string& label) {
  for (HexSide s : {HexSide::E1_t3, HexSide::E1_r3, HexSide::E2_t1, HexSide::E2_r1, HexSide::E3_t2, HexSide::E3_r2})
    if (to_string(s) == label) return s;
  throw DomainError("unknown hexagon side '" + label + "'");
}

const std::array<HexSide, 6>& hexagon_cycle() {
  static const std::array<HexSide, 6> cycle{HexSide::E1_t3, HexSide::E2_r1, HexSide::E3_t2,
                                            HexSide::E1_r3, HexSide::E2_t1, HexSide::E3_r2};
  return cycle;
}

std::vector<HexagonCurve> hexagon(const BurniatSurface& S) {
  if (!is_smooth_surface(S)) throw DomainError("hexagon: surface is not smooth");
  const auto& E = S.curves;
  struct Spec {
    HexSide side;
    int curve;
    Rational twist;
  };
  std::array<Spec, 6> specs{{{HexSide::E1_t3, 1, E[2].t},
                             {HexSide::E1_r3, 1, E[2].r},
                             {HexSide::E2_t1, 2, E[0].t},
                             {HexSide::E2_r1, 2, E[0].r},
                             {HexSide::E3_t2, 3, E[1].t},
                             {HexSide::E3_r2, 3, E[1].r}}};
  const auto& cycle = hexagon_cycle();
  // Edges alternate: cycle[i] and cycle[i+1] meet in Identity for even i, in (0,0) for odd i.
  auto edge = [](std::size_t i) { return i % 2 == 0 ? Vertex::Identity : Vertex::Origin; };
  std::vector<HexagonCurve> out;
  for (const auto& sp : specs) {
    std::size_t pos = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), sp.side) - cycle.begin());
    HexagonCurve h;
    h.side = sp.side;
    h.curve_index = sp.curve;
    h.twist = sp.twist;
    h.model = jacobian(E[static_cast<std::size_t>(sp.curve - 1)], sp.twist);
    h.prev = cycle[(pos + 5) % 6];
    h.next = cycle[(pos + 1) % 6];
    h.shared_prev = edge((pos + 5) % 6);
    h.shared_next = edge(pos);
    out.push_back(h);
  }
  return out;
}

// ---- fibers ----

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::SmoothGenus5: return "SmoothGenus5";
    case FiberType::Genus3TwoNodes: return "Genus3TwoNodes";
    case FiberType::SplitTwoElliptic: return "SplitTwoElliptic";
  }
  return "?";
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  std::vector<Rational> h(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  return h;
}

void check_projection(int j, const Rational& x0) {
  if (j < 1 || j > 3) throw DomainError("projection index must be 1, 2 or 3");
  if (x0.is_zero()) throw DomainError("fiber over x0 = 0 is not allowed");
}

}  // namespace

FiberModels fiber_models(const BurniatSurface& S, int j, const Rational& x0) {
  check_projection(j, x0);
  FiberModels f;
  f.projection = j;
  f.x0 = x0;
  f.factors = j == 1 ? std::array<int, 2>{2, 3} : (j == 2 ? std::array<int, 2>{1, 3} : std::array<int, 2>{1, 2});
  const QuarticCurve& A = S.curves[static_cast<std::size_t>(f.factors[0] - 1)];
  const QuarticCurve& B = S.curves[static_cast<std::size_t>(f.factors[1] - 1)];
  Rational cp = S.c / x0;
  Rational cp2 = cp * cp;
  f.first = {A.r, A.s, A.t};
  f.second = {B.t, B.s * cp2, B.r * cp2 * cp2};
  const auto &a = f.first, &b = f.second;
  std::vector<Rational> qa{a[2], 0, a[1], 0, a[0]}, qb{b[2], 0, b[1], 0, b[0]};
  f.curveD = {poly_mul(qa, qb)};
  std::vector<Rational> e = poly_mul({a[2], a[1], a[0]}, {b[2], b[1], b[0]});
  f.curveE = {e};
  std::vector<Rational> sext{0};
  sext.insert(sext.end(), e.begin(), e.end());
  sext.push_back(0);
  f.curveF = {sext};
  return f;
}

Rational resultant(const std::vector<Rational>& f_in, const std::vector<Rational>& g_in) {
  auto trim = [](std::vector<Rational> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  std::vector<Rational> f = trim(f_in), g = trim(g_in);
  if (f.empty() || g.empty()) return 0;
  std::size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) M[i][i + k] = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) M[n + i][i + k] = g[n - k];
  Rational det = 1;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && M[piv][col].is_zero()) ++piv;
    if (piv == N) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      if (M[r][col].is_zero()) continue;
      Rational factor = M[r][col] / M[col][col];
      for (std::size_t k = col; k < N; ++k) M[r][k] -= factor * M[col][k];
    }
  }
  return det;
}

Rational quartic_resultant(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return resultant({a[2], 0, a[1], 0, a[0]}, {b[2], 0, b[1], 0, b[0]});
}

FiberType fiber_type(const BurniatSurface& S, int j, const Rational& x0) {
  FiberModels f = fiber_models(S, j, x0);
  const auto &a = f.first, &b = f.second;
  bool proportional = (a[0] * b[1] - a[1] * b[0]).is_zero() && (a[0] * b[2] - a[2] * b[0]).is_zero() &&
                      (a[1] * b[2] - a[2] * b[1]).is_zero();
  if (proportional) return FiberType::SplitTwoElliptic;
  return quartic_resultant(a, b).is_zero() ? FiberType::Genus3TwoNodes : FiberType::SmoothGenus5;
}

}  // namespace burniat
