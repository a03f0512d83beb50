#include "burniat/moduli.hpp"

#include <algorithm>
#include <array>

namespace burniat {

std::string to_string(const ModuliPoint& P) {
  return "(" + P.u1.str() + ", " + P.u2.str() + ", " + P.u3.str() + ", " + P.d.str() + ", " + P.v.str() + ", " +
         P.w.str() + ")";
}

std::string to_string(const StrataFlags& F) {
  std::string s;
  auto add = [&](bool on, const std::string& name) {
    if (!on) return;
    if (!s.empty()) s += ", ";
    s += name;
  };
  add(F.M1, "M1");
  add(F.M2, "M2");
  add(F.M3, "M3");
  add(F.M4, "M4");
  add(F.N1, "N1");
  add(F.N2.has_value(), "N2");
  return s.empty() ? "none" : s;
}

ModuliPoint moduli_formulas(const BurniatSurface& S) {
  for (const auto& e : S.curves)
    if (!is_smooth(e)) throw DomainError("moduli: singular curve " + to_string(e));
  if (S.c.is_zero()) throw DomainError("moduli: c = 0");
  std::array<Rational, 3> a;
  for (std::size_t j = 0; j < 3; ++j) a[j] = a_squared(S.curves[j]);
  Rational R = S.curves[0].r * S.curves[1].r * S.curves[2].r;
  Rational T = S.curves[0].t * S.curves[1].t * S.curves[2].t;
  Rational P = S.curves[0].s * S.curves[1].s * S.curves[2].s;
  Rational c2 = S.c * S.c, c4 = c2 * c2;
  ModuliPoint m;
  m.u1 = a[0] + a[1] + a[2];
  m.u2 = a[0] * a[1] + a[1] * a[2] + a[2] * a[0];
  m.u3 = a[0] * a[1] * a[2];
  m.d = (a[0] - a[1]) * (a[1] - a[2]) * (a[2] - a[0]);
  m.v = R / T * c4 + Rational(2) + T / R / c4;
  m.w = P * (c2 / T + Rational(1) / (c2 * R));
  return m;
}

ModuliPoint moduli_point(const BurniatSurface& S) {
  if (!is_smooth_surface(S)) throw DomainError("moduli_point: surface is not smooth");
  return moduli_formulas(S);
}

Rational first_inequality(const ModuliPoint& P) {
  Rational vu = P.v - P.u1;
  return vu * vu + P.u2 * (P.v - Rational(4)) + P.u3 + (P.u1 + P.v - Rational(8)) * P.w;
}

Rational second_inequality(const ModuliPoint& P) {
  return Rational(64) - Rational(16) * P.u1 + Rational(4) * P.u2 - P.u3;
}

bool satisfies_moduli_equations(const ModuliPoint& P) {
  const Rational &u1 = P.u1, &u2 = P.u2, &u3 = P.u3;
  Rational lhs = Rational(-4) * u1 * u1 * u1 * u3 + u1 * u1 * u2 * u2 + Rational(18) * u1 * u2 * u3 -
                 Rational(4) * u2 * u2 * u2 - Rational(27) * u3 * u3;
  return lhs == P.d * P.d && P.u3 * P.v == P.w * P.w;
}

bool validate_moduli(const ModuliPoint& P) {
  return satisfies_moduli_equations(P) && !first_inequality(P).is_zero() && !second_inequality(P).is_zero();
}

ModuliPoint n2_point(const Rational& t) {
  if (t.is_zero()) throw DomainError("n2_point: t = 0");
  Rational t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
  Rational tm = t - Rational(1), tm2 = tm * tm, tp = t + Rational(2);
  ModuliPoint m;
  m.u1 = Rational(-2) * (t3 - Rational(4) * t2 - Rational(7) * t - Rational(8)) / t2;
  m.u2 = tm2 * (t3 - Rational(10) * t2 - Rational(31) * t - Rational(32)) / t3;
  m.u3 = Rational(4) * tm2 * tm2 * tp * tp / t4;
  m.d = 0;
  m.v = 4;
  m.w = Rational(-4) * tm2 * tp / t2;
  return m;
}

StrataFlags strata(const ModuliPoint& P) {
  if (!validate_moduli(P)) throw DomainError("strata: invalid moduli point " + to_string(P));
  StrataFlags F;
  F.M1 = P.v == Rational(4);
  F.M2 = P.u2.is_zero() && P.u3.is_zero();
  F.M3 = P.u3.is_zero() && P.v.is_zero();
  F.N1 = P.d.is_zero();
  F.M4 = F.N1 && P.u1 * P.u1 == Rational(3) * P.u2 && P.u1 * P.u2 == Rational(9) * P.u3;
  if (F.N1 && F.M1) {
    // 4(t-1)^2(t+2) + w t^2 = 4t^3 + w t^2 - 12t + 8, cleared of the denominator of w
    Integer den = P.w.den();
    std::vector<Integer> cubic{8 * den, -12 * den, P.w.num(), 4 * den};
    for (const Rational& t : rational_roots(cubic)) {
      if (t.is_zero()) continue;
      if (n2_point(t) == P) {
        F.N2 = t;
        break;
      }
    }
  }
  return F;
}

std::string automorphism_group(const StrataFlags& F) {
  if ((F.M4 || F.M2) && !F.N1) throw DomainError("inconsistent strata flags: M2 or M4 without N1");
  if (F.M3 && (F.M1 || F.M4)) throw DomainError("inconsistent strata flags: M3 meets M1 or M4");
  int key = (F.M1 ? 1 : 0) | (F.M2 ? 2 : 0) | (F.M3 ? 4 : 0) | (F.M4 ? 8 : 0);
  switch (key) {
    case 0: return "C2^2";
    case 1: return "C2^3";
    case 2: return "C2xC4";
    case 4: return "C2^3";
    case 8: return "A4";
    case 1 | 2: return "C2xD4";
    case 1 | 8: return "C2xA4";
    case 2 | 4: return "C2xD4";
    case 2 | 8: return "(C4 wr C3)/C4";
    case 1 | 2 | 8: return "((C4 wr C3)/C4) : C2";
  }
  throw DomainError("inconsistent strata flags: " + to_string(F));
}

CensusCounts census(const BurniatSurface& S) {
  ModuliPoint P = moduli_point(S);
  std::array<Rational, 3> a;
  for (std::size_t j = 0; j < 3; ++j) a[j] = a_squared(S.curves[j]);
  CensusCounts out;
  bool e01 = a[0] == a[1], e12 = a[1] == a[2], e20 = a[2] == a[0];
  if (e01 && e12) {
    out.typeI = a[0].is_zero() ? 6 : 3;
  } else if (e01 || e12 || e20) {
    const Rational& twin = e01 ? a[0] : (e12 ? a[1] : a[2]);
    out.typeI = twin.is_zero() ? 2 : 1;
  }
  StrataFlags F = strata(P);
  if (F.N2) out.typeII = F.M2 ? 2 : (F.M4 ? 3 : 1);
  return out;
}

bool is_generic(const BurniatSurface& S) { return !moduli_point(S).d.is_zero(); }

}  // namespace burniat
