#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burniat/pointsearch.hpp"
#include "json.hpp"

namespace burniat {

using Json = nlohmann::ordered_json;

// Input document: {"curves": [[r,s,t] x3], "c": "p/q", "height": n,
// "extra_primes": [...], "oracle": [...]}. Coefficients are integers or "p/q" strings.
struct Config {
  BurniatSurface surface;
  std::uint64_t height = 1000;
  PrimeSet extra_primes;
  std::vector<OracleFact> oracle;
};

inline constexpr std::uint64_t kMaxHeight = 1000000;

// DomainError messages start with the offending field, e.g. "curves[1][2]: ...".
Config parse_config(const Json& doc);
Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);

OracleFact parse_fact(const Json& j, const std::string& where);

void to_json(Json& j, const Rational& q);
void to_json(Json& j, const PrimeSet& p);
void to_json(Json& j, const QuarticCurve& c);
void to_json(Json& j, const QuarticPoint& p);
void to_json(Json& j, const WeierstrassCurve& w);
void to_json(Json& j, const WeierstrassPoint& p);
void to_json(Json& j, const BinaryFormCurve& f);
void to_json(Json& j, const BurniatSurface& S);
void to_json(Json& j, const SigmaInvariants& s);
void to_json(Json& j, const XPoint& P);
void to_json(Json& j, const TwistClass& T);
void to_json(Json& j, const TwistRecord& r);
void to_json(Json& j, const ModuliPoint& P);
void to_json(Json& j, const StrataFlags& F);
void to_json(Json& j, const CensusCounts& c);
void to_json(Json& j, const HexagonCurve& h);
void to_json(Json& j, const FiberModels& f);
void to_json(Json& j, const RankCertificate& c);
void to_json(Json& j, const OracleFact& f);
void to_json(Json& j, const SearchPlan& p);
void to_json(Json& j, const TwistSearch& s);
void to_json(Json& j, const ClassifiedPoint& p);
void to_json(Json& j, const TypeIClass& c);
void to_json(Json& j, const HexagonSideReport& s);
void to_json(Json& j, const HexagonTable& t);
void to_json(Json& j, const InfinitySummary& s);
void to_json(Json& j, const CountClaim& c);
void to_json(Json& j, const SurfaceReport& R);

// Inverse of to_json(SurfaceReport); malformed input raises DomainError.
SurfaceReport report_from_json(const Json& j);

std::string report_text(const SurfaceReport& R);

}  // namespace burniat
