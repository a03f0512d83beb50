#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burniat/surface.hpp"

namespace burniat {

struct TwistClass {
  std::array<Integer, 3> d{1, 1, 1};
  std::string str() const;  // "(d1, d2, d3)"
  friend bool operator==(const TwistClass&, const TwistClass&) = default;
  friend bool operator<(const TwistClass& a, const TwistClass& b) { return a.d < b.d; }
};

// Product in the group of classes modulo squares.
TwistClass compose(const TwistClass& a, const TwistClass& b);

struct TwistedSurface {
  BurniatSurface surface;  // normalized curves, c' = c / (d1 d2 d3)
  TwistClass origin;
};

enum class TwistStatusKind { EmptyProven, PointsFound, Undetermined };
std::string to_string(TwistStatusKind k);
TwistStatusKind twist_status_from_string(const std::string& s);

struct TwistStatus {
  TwistStatusKind kind = TwistStatusKind::Undetermined;
  int witness_curve = 0;  // EmptyProven: obstructed factor 1..3
  Place witness_place;
  std::array<std::optional<QuarticPoint>, 3> witness_points;  // one found point per factor, when any
  friend bool operator==(const TwistStatus&, const TwistStatus&) = default;
};

struct TwistRecord {
  TwistClass twist;
  TwistStatus status;
  friend bool operator==(const TwistRecord&, const TwistRecord&) = default;
};

std::vector<TwistClass> enumerate_twists(const PrimeSet& bad);
TwistedSurface twist_surface(const BurniatSurface& S, const TwistClass& T);
// Factor j (1..3) of the twist, normalized.
QuarticCurve twisted_factor(const BurniatSurface& S, const TwistClass& T, int j);

struct FilterOptions {
  PrimeSet extra_primes;  // added to the bad primes for enumeration and local checks
};

// Every twist supported on the bad primes, in enumeration order.
std::vector<TwistRecord> filter_twists(const BurniatSurface& S, std::uint64_t H, const FilterOptions& opt = {});

}  // namespace burniat
