#pragma once

#include <optional>
#include <string>

#include "burniat/surface.hpp"

namespace burniat {

struct ModuliPoint {
  Rational u1, u2, u3, d, v, w;
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};
std::string to_string(const ModuliPoint& P);

struct StrataFlags {
  bool M1 = false, M2 = false, M3 = false, M4 = false, N1 = false;
  std::optional<Rational> N2;  // parameter t when on N2
  friend bool operator==(const StrataFlags&, const StrataFlags&) = default;
};
std::string to_string(const StrataFlags& F);  // "M2, M4, N1" or "none"

struct CensusCounts {
  int infinity = 6, typeI = 0, typeII = 0;
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

ModuliPoint moduli_point(const BurniatSurface& S);
// The same formulas without the D != 0 check; curves smooth and c != 0 still required.
ModuliPoint moduli_formulas(const BurniatSurface& S);

// (v - u1)^2 + u2 (v - 4) + u3 + (u1 + v - 8) w, nonzero exactly when D is.
Rational first_inequality(const ModuliPoint& P);
// 64 - 16 u1 + 4 u2 - u3 = (4 - a1^2)(4 - a2^2)(4 - a3^2)
Rational second_inequality(const ModuliPoint& P);
bool satisfies_moduli_equations(const ModuliPoint& P);
bool validate_moduli(const ModuliPoint& P);

StrataFlags strata(const ModuliPoint& P);
std::string automorphism_group(const StrataFlags& F);
CensusCounts census(const BurniatSurface& S);
bool is_generic(const BurniatSurface& S);
ModuliPoint n2_point(const Rational& t);

}  // namespace burniat
