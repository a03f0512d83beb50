#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burniat/moduli.hpp"
#include "burniat/twists.hpp"

namespace burniat {

// ---- affine search on a twist ----

// Bi-enumeration over factors a and b (1..3, distinct); the third x is forced.
std::vector<XPoint> search_twist_with(const TwistedSurface& T, std::uint64_t H, int a, int b);
// Same, over the two factors with the fewest found points.
std::vector<XPoint> search_twist(const TwistedSurface& T, std::uint64_t H);
// Pairs drawn from explicit candidate lists on factors a and b.
std::vector<XPoint> search_twist_over(const TwistedSurface& T, int a, int b, const std::vector<QuarticPoint>& on_a,
                                      const std::vector<QuarticPoint>& on_b);
// Two factor indices with the fewest affine points (x != 0) found up to H.
std::array<int, 2> enumeration_factors(const TwistedSurface& T, std::uint64_t H);

// Number of Gamma-orbits; the list must be closed under Gamma with orbits of size 8.
int orbit_count(const BurniatSurface& S, const std::vector<XPoint>& points);

enum class PointKind { TypeI, SporadicCandidate };
std::string to_string(PointKind k);

struct ClassifiedPoint {
  TwistClass twist;
  XPoint point;
  PointKind kind = PointKind::SporadicCandidate;
  int fiber_index = 0;  // TypeI: projection j
  Rational fiber_x0;    // TypeI: x_j of the point
  int orbit_id = 0;
  friend bool operator==(const ClassifiedPoint&, const ClassifiedPoint&) = default;
};

ClassifiedPoint classify(const BurniatSurface& S, const TwistedSurface& T, const XPoint& P);

// ---- rank evidence ----

enum class RankStatus { PositiveRank, OnlyTorsionFound, NoPointsFound };
std::string to_string(RankStatus s);
RankStatus rank_status_from_string(const std::string& s);

struct RankCertificate {
  WeierstrassCurve curve;
  RankStatus status = RankStatus::NoPointsFound;
  std::optional<WeierstrassPoint> witness;  // PositiveRank only
  std::uint64_t height = 0;
  friend bool operator==(const RankCertificate&, const RankCertificate&) = default;
};

// Searches the model to height H and certifies the first point of infinite order.
RankCertificate certify_rank(const WeierstrassCurve& W, std::uint64_t H);

// ---- oracle facts ----

enum class SubjectKind { HexagonSide, TwistFactor, FiberCurve };

struct OracleSubject {
  SubjectKind kind = SubjectKind::HexagonSide;
  HexSide side = HexSide::E1_t3;  // HexagonSide
  TwistClass twist;               // TwistFactor, FiberCurve
  int curve = 0;                  // TwistFactor: factor index
  int projection = 0;             // FiberCurve: j
  Rational x0;                    // FiberCurve
  std::string model;              // FiberCurve: "D", "E" or "F"
  std::string str() const;
  friend bool operator==(const OracleSubject&, const OracleSubject&) = default;
};

// An externally proven statement: a Mordell-Weil rank, or a complete list of
// rational points (Weierstrass points for hexagon sides, curve points otherwise).
struct OracleFact {
  OracleSubject subject;
  std::optional<int> rank;
  std::optional<std::vector<QuarticPoint>> points;
  std::optional<std::vector<WeierstrassPoint>> weierstrass_points;
  std::string provenance;
  friend bool operator==(const OracleFact&, const OracleFact&) = default;
};

// ---- hexagon ----

struct HexagonSideReport {
  HexagonCurve curve;
  std::vector<WeierstrassPoint> points;
  std::vector<int> orders;  // per point, 0 for infinite order
  RankCertificate certificate;
};

struct InfinitySummary {
  bool infinite = false;
  long count = 0;  // meaningful when !infinite
  std::string claim;
  friend bool operator==(const InfinitySummary&, const InfinitySummary&) = default;
};

struct HexagonTable {
  std::vector<HexagonSideReport> sides;
  InfinitySummary summary;
};

HexagonTable hexagon_accounting(const BurniatSurface& S, std::uint64_t H, const std::vector<OracleFact>& facts = {});

// ---- planning ----

enum class PlanCase { AllFinite, TwoFinite, OneFinite, AllInfinite, Unknown };
std::string to_string(PlanCase c);
PlanCase plan_case_from_string(const std::string& s);

struct SearchPlan {
  TwistClass twist;
  PlanCase plan_case = PlanCase::Unknown;
  std::array<int, 2> factors{1, 2};
  std::array<long, 3> found{0, 0, 0};  // affine points with x != 0 found per factor
  std::string annotation;              // "method-limit", "all-finite-candidate" or empty
  friend bool operator==(const SearchPlan&, const SearchPlan&) = default;
};

// Rejects contradictory or malformed facts with DomainError.
void check_oracle_facts(const BurniatSurface& S, std::uint64_t H, const std::vector<OracleFact>& facts);

std::vector<SearchPlan> plan(const BurniatSurface& S, const std::vector<TwistRecord>& statuses,
                             const std::vector<OracleFact>& facts, std::uint64_t H);

// ---- report ----

struct TwistSearch {
  TwistClass twist;
  std::array<int, 2> factors{1, 2};
  std::vector<XPoint> points;
  int orbits = 0;
  bool complete = false;  // backed by oracle point lists
  friend bool operator==(const TwistSearch&, const TwistSearch&) = default;
};

// A genus-1 curve on the quotient coming from split fibers, identified across
// twists by (j, x_j^2 * product of the two twist values entering factor j).
struct TypeIClass {
  int projection = 0;
  Rational key;  // the untwisted value of x_j^2
  std::vector<TwistClass> twists;
  std::vector<Rational> x0s;  // |x0| per listed twist
  QuarticCurve component;     // y^2 = first quartic of the fiber
  RankCertificate certificate;
  int orbits = 0;
  friend bool operator==(const TypeIClass&, const TypeIClass&) = default;
};

struct CountClaim {
  long count = 0;
  bool infinite = false;
  std::string claim;
  friend bool operator==(const CountClaim&, const CountClaim&) = default;
};

struct TwistTable {
  std::size_t total = 0;
  std::size_t empty_proven = 0;
  std::vector<TwistRecord> surviving;  // PointsFound and Undetermined, in enumeration order
  friend bool operator==(const TwistTable&, const TwistTable&) = default;
};

struct SurfaceReport {
  BurniatSurface surface;
  std::uint64_t height = 0;
  Rational D;
  SigmaInvariants sigma;
  PrimeSet bad;
  PrimeSet extra_primes;
  ModuliPoint moduli;
  StrataFlags strata;
  std::string automorphism_group;
  CensusCounts census;
  bool generic = false;
  TwistTable twists;
  std::vector<SearchPlan> plans;
  std::vector<TwistSearch> searches;
  std::vector<ClassifiedPoint> points;
  std::vector<TypeIClass> type_i;
  HexagonTable hexagon;
  InfinitySummary at_infinity;
  CountClaim sporadic;
  CountClaim total;
  std::vector<std::string> caveats;
  std::vector<OracleFact> oracle;
};

struct ReportOptions {
  std::uint64_t height = 1000;
  PrimeSet extra_primes;
  std::vector<OracleFact> oracle;
};

SurfaceReport report(const BurniatSurface& S, const ReportOptions& opt);

bool operator==(const HexagonSideReport& a, const HexagonSideReport& b);
bool operator==(const HexagonTable& a, const HexagonTable& b);
bool operator==(const SurfaceReport& a, const SurfaceReport& b);

}  // namespace burniat
