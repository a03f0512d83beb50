#include "burniat/pointsearch.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "burniat/errors.hpp"
#include "burniat/parallel.hpp"

namespace burniat {

namespace {

// consistency checks on fibre-model facts use this box; octic searches get slow beyond it
constexpr std::uint64_t kFiberCheckHeight = 200;
// rank-0 facts are tested against a Jacobian search of this height
constexpr std::uint64_t kRankCheckHeight = 200;

const QuarticCurve& factor(const BurniatSurface& S, int j) { return S.curves[static_cast<std::size_t>(j - 1)]; }

int third_index(int a, int b) { return 6 - a - b; }

// y-values over x (one entry for y = 0), empty if not a square
std::vector<Rational> ys_over(const QuarticCurve& c, const Rational& x) {
  auto y = exact_sqrt(quartic_value(c, x));
  if (!y) return {};
  if (y->is_zero()) return {*y};
  return {-*y, *y};
}

std::vector<Rational> affine_xs(const std::vector<QuarticPoint>& pts) {
  std::vector<Rational> xs;
  for (const auto& p : pts)
    if (p.is_affine() && !p.x().is_zero()) xs.push_back(p.x());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

long affine_count(const std::vector<QuarticPoint>& pts) {
  long n = 0;
  for (const auto& p : pts)
    if (p.is_affine() && !p.x().is_zero()) ++n;
  return n;
}

XPoint make_point(int a, int b, const Rational& xa, const Rational& ya, const Rational& xb, const Rational& yb,
                  const Rational& xc, const Rational& yc) {
  XPoint P;
  int c = third_index(a, b);
  P.coords[static_cast<std::size_t>(a - 1)] = QuarticPoint::affine(xa, ya);
  P.coords[static_cast<std::size_t>(b - 1)] = QuarticPoint::affine(xb, yb);
  P.coords[static_cast<std::size_t>(c - 1)] = QuarticPoint::affine(xc, yc);
  return P;
}

void check_pair(int a, int b) {
  if (a < 1 || a > 3 || b < 1 || b > 3 || a == b) throw DomainError("enumeration factors must be two distinct indices in 1..3");
}

// all points over the given x-values of factors a and b
std::vector<XPoint> pair_search(const TwistedSurface& T, int a, int b, const std::vector<Rational>& xa_list,
                                const std::vector<Rational>& xb_list) {
  const BurniatSurface& S = T.surface;
  int c = third_index(a, b);
  std::vector<std::vector<Rational>> ya_list(xa_list.size()), yb_list(xb_list.size());
  for (std::size_t i = 0; i < xa_list.size(); ++i) ya_list[i] = ys_over(factor(S, a), xa_list[i]);
  for (std::size_t i = 0; i < xb_list.size(); ++i) yb_list[i] = ys_over(factor(S, b), xb_list[i]);
  std::vector<XPoint> out;
  for (std::size_t i = 0; i < xa_list.size(); ++i) {
    if (ya_list[i].empty()) continue;
    for (std::size_t k = 0; k < xb_list.size(); ++k) {
      if (yb_list[k].empty()) continue;
      Rational xc = S.c / (xa_list[i] * xb_list[k]);
      auto yc = ys_over(factor(S, c), xc);
      for (const auto& ya : ya_list[i])
        for (const auto& yb : yb_list[k])
          for (const auto& y : yc) out.push_back(make_point(a, b, xa_list[i], ya, xb_list[k], yb, xc, y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<QuarticPoint>> factor_points(const TwistedSurface& T, std::uint64_t H) {
  std::vector<std::vector<QuarticPoint>> pts(3);
  for (int j = 1; j <= 3; ++j) pts[static_cast<std::size_t>(j - 1)] = search_points(factor(T.surface, j), H);
  return pts;
}

std::array<int, 2> fewest(const std::array<long, 3>& found, const std::array<int, 3>& finite_first) {
  std::array<int, 3> idx{1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    auto kx = std::make_pair(finite_first[static_cast<std::size_t>(x - 1)], found[static_cast<std::size_t>(x - 1)]);
    auto ky = std::make_pair(finite_first[static_cast<std::size_t>(y - 1)], found[static_cast<std::size_t>(y - 1)]);
    return kx < ky;
  });
  std::array<int, 2> out{idx[0], idx[1]};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---- affine search ----

std::vector<XPoint> search_twist_over(const TwistedSurface& T, int a, int b, const std::vector<QuarticPoint>& on_a,
                                      const std::vector<QuarticPoint>& on_b) {
  check_pair(a, b);
  return pair_search(T, a, b, affine_xs(on_a), affine_xs(on_b));
}

std::vector<XPoint> search_twist_with(const TwistedSurface& T, std::uint64_t H, int a, int b) {
  check_pair(a, b);
  return search_twist_over(T, a, b, search_points(factor(T.surface, a), H), search_points(factor(T.surface, b), H));
}

std::array<int, 2> enumeration_factors(const TwistedSurface& T, std::uint64_t H) {
  auto pts = factor_points(T, H);
  return fewest({affine_count(pts[0]), affine_count(pts[1]), affine_count(pts[2])}, {0, 0, 0});
}

std::vector<XPoint> search_twist(const TwistedSurface& T, std::uint64_t H) {
  auto pts = factor_points(T, H);
  auto f = fewest({affine_count(pts[0]), affine_count(pts[1]), affine_count(pts[2])}, {0, 0, 0});
  return search_twist_over(T, f[0], f[1], pts[static_cast<std::size_t>(f[0] - 1)],
                           pts[static_cast<std::size_t>(f[1] - 1)]);
}

int orbit_count(const BurniatSurface& S, const std::vector<XPoint>& points) {
  std::set<XPoint> all(points.begin(), points.end());
  if (all.size() != points.size()) throw InvariantViolation("orbit_count: repeated points");
  std::set<XPoint> seen;
  int orbits = 0;
  for (const auto& P : all) {
    if (seen.count(P)) continue;
    for (const auto& Q : orbit(S, P)) {
      if (!all.count(Q)) throw InvariantViolation("point set is not closed under Gamma: missing " + Q.str());
      seen.insert(Q);
    }
    ++orbits;
  }
  return orbits;
}

std::string to_string(PointKind k) { return k == PointKind::TypeI ? "TypeI" : "SporadicCandidate"; }

ClassifiedPoint classify(const BurniatSurface& S, const TwistedSurface& T, const XPoint& P) {
  (void)S;
  if (!P.is_affine()) throw DomainError("classify: point " + P.str() + " is not affine");
  if (!on_surface(T.surface, P)) throw DomainError("classify: point " + P.str() + " is not on twist " + T.origin.str());
  ClassifiedPoint out;
  out.twist = T.origin;
  out.point = P;
  for (int j = 1; j <= 3; ++j) {
    const Rational& x = P.coords[static_cast<std::size_t>(j - 1)].x();
    if (fiber_type(T.surface, j, x) == FiberType::SplitTwoElliptic) {
      out.kind = PointKind::TypeI;
      out.fiber_index = j;
      out.fiber_x0 = x;
      return out;
    }
  }
  return out;
}

// ---- rank evidence ----

std::string to_string(RankStatus s) {
  switch (s) {
    case RankStatus::PositiveRank: return "PositiveRank";
    case RankStatus::OnlyTorsionFound: return "OnlyTorsionFound";
    case RankStatus::NoPointsFound: return "NoPointsFound";
  }
  return "?";
}

RankStatus rank_status_from_string(const std::string& s) {
  for (auto k : {RankStatus::PositiveRank, RankStatus::OnlyTorsionFound, RankStatus::NoPointsFound})
    if (to_string(k) == s) return k;
  throw DomainError("unknown rank status '" + s + "'");
}

namespace {

RankCertificate certify_points(const WeierstrassCurve& W, const std::vector<WeierstrassPoint>& pts, std::uint64_t H) {
  RankCertificate cert;
  cert.curve = W;
  cert.height = H;
  bool any = false;
  for (const auto& P : pts) {
    if (P.is_identity()) continue;
    any = true;
    if (infinite_order_certificate(W, P)) {
      cert.status = RankStatus::PositiveRank;
      cert.witness = P;
      return cert;
    }
  }
  cert.status = any ? RankStatus::OnlyTorsionFound : RankStatus::NoPointsFound;
  return cert;
}

// Full torsion subgroup via Nagell-Lutz on an integral model.
std::vector<WeierstrassPoint> torsion_points(const WeierstrassCurve& W) {
  Integer mu = common_denominator({W.a, W.b, W.c});
  Rational m(mu);
  Integer A = (W.a * m * m).num(), B = (W.b * pow(m, 4)).num(), C = (W.c * pow(m, 6)).num();
  Integer disc = A * A * B * B - 4 * B * B * B - 4 * A * A * A * C - 27 * C * C + 18 * A * B * C;
  if (disc == 0) throw DomainError("singular Weierstrass model " + to_string(W));
  std::vector<Integer> ys{0};
  {
    std::vector<Integer> ds{1};
    Integer n = disc < 0 ? Integer(-disc) : disc;
    for (const auto& [p, e] : factorize(n)) {
      std::size_t k = ds.size();
      Integer pk = 1;
      for (unsigned i = 1; 2 * i <= e; ++i) {
        pk *= p;
        for (std::size_t s = 0; s < k; ++s) ds.push_back(ds[s] * pk);
      }
    }
    for (const auto& d : ds) ys.push_back(d);
  }
  std::vector<WeierstrassPoint> out{WeierstrassPoint::identity()};
  Rational m2 = m * m, m3 = m2 * m;
  for (const auto& y : ys) {
    for (const auto& X : rational_roots({C - y * y, B, A, 1})) {
      if (!X.is_integer()) continue;
      for (int sgn : {1, -1}) {
        if (y == 0 && sgn < 0) continue;
        WeierstrassPoint P = WeierstrassPoint::finite(X / m2, Rational(y * sgn) / m3);
        if (order_up_to(W, P, 12)) out.push_back(P);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RankCertificate certify_rank(const WeierstrassCurve& W, std::uint64_t H) { return certify_points(W, search_points(W, H), H); }

// ---- oracle facts ----

std::string OracleSubject::str() const {
  switch (kind) {
    case SubjectKind::HexagonSide: return "hexagon side " + to_string(side);
    case SubjectKind::TwistFactor: return "twist " + twist.str() + " factor " + std::to_string(curve);
    case SubjectKind::FiberCurve:
      return "fiber of twist " + twist.str() + " over x" + std::to_string(projection) + " = " + x0.str() + ", model " +
             model;
  }
  return "?";
}

namespace {

struct Evidence {
  std::optional<int> rank;
  std::optional<std::vector<QuarticPoint>> points;
  std::optional<std::vector<WeierstrassPoint>> wpoints;
};

template <class P>
std::vector<P> sorted_unique(std::vector<P> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string subject_key(const OracleSubject& s) {
  switch (s.kind) {
    case SubjectKind::HexagonSide: return "H" + to_string(s.side);
    case SubjectKind::TwistFactor: return "T" + s.twist.str() + std::to_string(s.curve);
    case SubjectKind::FiberCurve: return "F" + s.twist.str() + std::to_string(s.projection) + s.x0.str() + s.model;
  }
  return "";
}

// Merges facts per subject; conflicting duplicates and malformed facts throw.
std::map<std::string, std::pair<OracleSubject, Evidence>> merge_facts(const std::vector<OracleFact>& facts) {
  std::map<std::string, std::pair<OracleSubject, Evidence>> out;
  for (const auto& f : facts) {
    const auto& s = f.subject;
    std::string what = "oracle fact on " + s.str();
    if (!f.rank && !f.points && !f.weierstrass_points) throw DomainError(what + ": needs a rank or a point list");
    if (f.rank && *f.rank < 0) throw DomainError(what + ": negative rank");
    if (s.kind == SubjectKind::HexagonSide) {
      if (f.points) throw DomainError(what + ": hexagon sides take Weierstrass points");
    } else {
      if (f.weierstrass_points) throw DomainError(what + ": Weierstrass points only apply to hexagon sides");
      for (const auto& d : s.twist.d)
        if (!is_squarefree(d)) throw DomainError(what + ": twist entry " + d.get_str() + " is not squarefree");
    }
    if (s.kind == SubjectKind::TwistFactor && (s.curve < 1 || s.curve > 3))
      throw DomainError(what + ": factor index must be 1, 2 or 3");
    if (s.kind == SubjectKind::FiberCurve) {
      if (s.projection < 1 || s.projection > 3) throw DomainError(what + ": projection must be 1, 2 or 3");
      if (s.x0.is_zero()) throw DomainError(what + ": x0 must be nonzero");
      if (s.model != "D" && s.model != "E" && s.model != "F") throw DomainError(what + ": model must be D, E or F");
      if (f.rank) throw DomainError(what + ": fiber curves take point lists, not ranks");
    }
    auto [it, fresh] = out.try_emplace(subject_key(s), s, Evidence{});
    Evidence& e = it->second.second;
    if (f.rank) {
      if (e.rank && *e.rank != *f.rank) throw DomainError(what + ": conflicting ranks");
      e.rank = f.rank;
    }
    if (f.points) {
      auto p = sorted_unique(*f.points);
      if (e.points && *e.points != p) throw DomainError(what + ": conflicting point lists");
      e.points = p;
    }
    if (f.weierstrass_points) {
      auto p = sorted_unique(*f.weierstrass_points);
      if (e.wpoints && *e.wpoints != p) throw DomainError(what + ": conflicting point lists");
      e.wpoints = p;
    }
    // a complete nonempty list on a genus-1 curve means finitely many points
    bool nonempty = (e.points && !e.points->empty()) || (e.wpoints && !e.wpoints->empty());
    if (s.kind != SubjectKind::FiberCurve && e.rank && *e.rank > 0 && nonempty)
      throw DomainError(what + ": positive rank contradicts a finite point list");
    (void)fresh;
  }
  return out;
}

std::optional<Evidence> evidence_for(const std::map<std::string, std::pair<OracleSubject, Evidence>>& merged,
                                     const OracleSubject& s) {
  auto it = merged.find(subject_key(s));
  if (it == merged.end()) return std::nullopt;
  return it->second.second;
}

OracleSubject factor_subject(const TwistClass& T, int j) {
  OracleSubject s;
  s.kind = SubjectKind::TwistFactor;
  s.twist = T;
  s.curve = j;
  return s;
}

OracleSubject fiber_subject(const TwistClass& T, int j, const Rational& x0, const std::string& model) {
  OracleSubject s;
  s.kind = SubjectKind::FiberCurve;
  s.twist = T;
  s.projection = j;
  s.x0 = x0;
  s.model = model;
  return s;
}

const BinaryFormCurve& fiber_model(const FiberModels& f, const std::string& m) {
  return m == "D" ? f.curveD : (m == "E" ? f.curveE : f.curveF);
}

}  // namespace

void check_oracle_facts(const BurniatSurface& S, std::uint64_t H, const std::vector<OracleFact>& facts) {
  auto merged = merge_facts(facts);
  for (const auto& [key, entry] : merged) {
    const auto& [s, e] = entry;
    std::string what = "oracle fact on " + s.str();
    if (s.kind == SubjectKind::TwistFactor) {
      QuarticCurve C = twisted_factor(S, s.twist, s.curve);
      if (e.points) {
        for (const auto& p : *e.points)
          if (!on_curve(C, p)) throw DomainError(what + ": listed point " + p.str() + " is not on " + to_string(C));
        for (const auto& p : search_points(C, H))
          if (!std::binary_search(e.points->begin(), e.points->end(), p))
            throw DomainError(what + ": found point " + p.str() + " is missing from the complete list");
        if (!e.points->empty() && local_obstruction(C, prime_support(quartic_discriminant(C))))
          throw DomainError(what + ": listed points on a curve without local points");
      }
      if (e.rank && *e.rank == 0) {
        auto P = first_point(C, H);
        if (P) {
          RankCertificate cert = certify_rank(jacobian(C, 1), std::min(H, kRankCheckHeight));
          if (cert.status == RankStatus::PositiveRank)
            throw DomainError(what + ": rank 0 contradicts the point of infinite order " + cert.witness->str() +
                              " on " + to_string(cert.curve));
        }
      }
    } else if (s.kind == SubjectKind::FiberCurve) {
      TwistedSurface T = twist_surface(S, s.twist);
      FiberModels fm = fiber_models(T.surface, s.projection, s.x0);
      const BinaryFormCurve& F = fiber_model(fm, s.model);
      for (const auto& p : *e.points)
        if (!on_curve(F, p)) throw DomainError(what + ": listed point " + p.str() + " is not on the model");
      for (const auto& p : search_points(F, std::min(H, kFiberCheckHeight)))
        if (!std::binary_search(e.points->begin(), e.points->end(), p))
          throw DomainError(what + ": found point " + p.str() + " is missing from the complete list");
    }
    // hexagon sides are checked in hexagon_accounting against its own search
  }
}

// ---- hexagon ----

HexagonTable hexagon_accounting(const BurniatSurface& S, std::uint64_t H, const std::vector<OracleFact>& facts) {
  if (!is_smooth_surface(S)) throw DomainError("hexagon_accounting needs a smooth surface");
  auto merged = merge_facts(facts);
  std::vector<HexagonCurve> curves = hexagon(S);
  HexagonTable table;
  table.sides.resize(curves.size());
  parallel_for(curves.size(), [&](std::size_t i) {
    HexagonSideReport& side = table.sides[i];
    side.curve = curves[i];
    const WeierstrassCurve& W = curves[i].model;
    side.points = search_points(W, H);
    std::sort(side.points.begin(), side.points.end());
    for (const auto& P : side.points) side.orders.push_back(order_up_to(W, P, 12).value_or(0));
    side.certificate = certify_points(W, side.points, H);
  });

  const WeierstrassPoint origin = WeierstrassPoint::finite(0, 0);
  long total = 0;
  bool infinite = false, oracle_infinite = false, all_complete = true;
  std::string infinite_side;
  for (auto& side : table.sides) {
    const auto& pts = side.points;
    if (!std::binary_search(pts.begin(), pts.end(), WeierstrassPoint::identity()) ||
        !std::binary_search(pts.begin(), pts.end(), origin))
      throw InvariantViolation("hexagon side " + to_string(side.curve.side) + " misses a vertex");
    OracleSubject subj;
    subj.side = side.curve.side;
    auto ev = evidence_for(merged, subj);
    std::string what = "oracle fact on " + subj.str();
    bool positive = side.certificate.status == RankStatus::PositiveRank;
    if (positive) {
      if (!infinite) infinite_side = to_string(side.curve.side);
      infinite = true;
    }
    long count = static_cast<long>(pts.size());
    bool complete = false;
    if (ev) {
      if (ev->rank && *ev->rank == 0 && positive)
        throw DomainError(what + ": rank 0 contradicts the point of infinite order " + side.certificate.witness->str());
      if (ev->rank && *ev->rank > 0) oracle_infinite = true;
      if (ev->wpoints) {
        if (positive) throw DomainError(what + ": a finite list contradicts a point of infinite order");
        for (const auto& P : *ev->wpoints)
          if (!on_curve(side.curve.model, P)) throw DomainError(what + ": listed point " + P.str() + " is not on the model");
        for (const auto& P : pts)
          if (!std::binary_search(ev->wpoints->begin(), ev->wpoints->end(), P))
            throw DomainError(what + ": found point " + P.str() + " is missing from the complete list");
        count = static_cast<long>(ev->wpoints->size());
        complete = true;
      }
      if (ev->rank && *ev->rank == 0) {
        auto tors = torsion_points(side.curve.model);
        if (ev->wpoints && *ev->wpoints != tors)
          throw DomainError(what + ": the complete list differs from the torsion subgroup");
        count = static_cast<long>(tors.size());
        complete = true;
      }
    }
    if (!complete) all_complete = false;
    total += count;
  }
  InfinitySummary& sum = table.summary;
  if (infinite) {
    sum.infinite = true;
    sum.claim = "proven: point of infinite order on " + infinite_side;
  } else if (oracle_infinite) {
    sum.infinite = true;
    sum.claim = "oracle fact: positive rank on a hexagon side";
  } else {
    sum.count = total - 6;
    sum.claim = all_complete ? "complete given oracle facts"
                             : "complete up to height " + std::to_string(H) + " and pending rank-0 facts";
  }
  return table;
}

// ---- planning ----

std::string to_string(PlanCase c) {
  switch (c) {
    case PlanCase::AllFinite: return "AllFinite";
    case PlanCase::TwoFinite: return "TwoFinite";
    case PlanCase::OneFinite: return "OneFinite";
    case PlanCase::AllInfinite: return "AllInfinite";
    case PlanCase::Unknown: return "Unknown";
  }
  return "?";
}

PlanCase plan_case_from_string(const std::string& s) {
  for (auto k : {PlanCase::AllFinite, PlanCase::TwoFinite, PlanCase::OneFinite, PlanCase::AllInfinite, PlanCase::Unknown})
    if (to_string(k) == s) return k;
  throw DomainError("unknown plan case '" + s + "'");
}

namespace {

struct PlanDetail {
  SearchPlan plan;
  TwistedSurface surface;
  std::vector<std::vector<QuarticPoint>> found;  // per factor, at height H
  std::array<std::optional<std::vector<QuarticPoint>>, 3> lists;  // oracle-complete lists
};

PlanDetail plan_one(const BurniatSurface& S, const TwistClass& tw, const std::map<std::string, std::pair<OracleSubject, Evidence>>& merged,
                    std::uint64_t H) {
  PlanDetail d;
  d.surface = twist_surface(S, tw);
  d.found = factor_points(d.surface, H);
  SearchPlan& p = d.plan;
  p.twist = tw;
  int finite = 0, infinite = 0;
  std::array<int, 3> finite_first{1, 1, 1};
  for (int j = 1; j <= 3; ++j) {
    auto idx = static_cast<std::size_t>(j - 1);
    p.found[idx] = affine_count(d.found[idx]);
    auto ev = evidence_for(merged, factor_subject(tw, j));
    if (!ev) continue;
    bool has_point = !d.found[idx].empty() || (ev->points && !ev->points->empty());
    if (ev->points) d.lists[idx] = ev->points;
    if (ev->points || (ev->rank && *ev->rank == 0)) {
      ++finite;
      finite_first[idx] = 0;
    } else if (ev->rank && *ev->rank > 0 && has_point) {
      ++infinite;
    }
  }
  if (finite == 3)
    p.plan_case = PlanCase::AllFinite;
  else if (finite == 2)
    p.plan_case = PlanCase::TwoFinite;
  else if (finite == 1 && infinite == 2)
    p.plan_case = PlanCase::OneFinite;
  else if (infinite == 3)
    p.plan_case = PlanCase::AllInfinite;
  else
    p.plan_case = PlanCase::Unknown;
  p.factors = fewest(p.found, finite_first);
  if (p.plan_case == PlanCase::AllInfinite)
    p.annotation = "method-limit";
  else if (d.found[0].empty() && d.found[1].empty() && d.found[2].empty())
    p.annotation = "all-finite-candidate";
  return d;
}

std::vector<PlanDetail> plan_details(const BurniatSurface& S, const std::vector<TwistRecord>& statuses,
                                     const std::vector<OracleFact>& facts, std::uint64_t H) {
  auto merged = merge_facts(facts);
  std::vector<const TwistRecord*> live;
  for (const auto& r : statuses)
    if (r.status.kind != TwistStatusKind::EmptyProven) live.push_back(&r);
  std::vector<PlanDetail> out(live.size());
  parallel_for(live.size(), [&](std::size_t i) { out[i] = plan_one(S, live[i]->twist, merged, H); });
  return out;
}

}  // namespace

std::vector<SearchPlan> plan(const BurniatSurface& S, const std::vector<TwistRecord>& statuses,
                             const std::vector<OracleFact>& facts, std::uint64_t H) {
  std::vector<SearchPlan> out;
  for (auto& d : plan_details(S, statuses, facts, H)) out.push_back(d.plan);
  return out;
}

// ---- report ----

namespace {

struct SearchOutcome {
  std::vector<XPoint> points;
  bool complete = false;
};

// Affine x-values on factor a that the fibre model list allows.
std::vector<Rational> fiber_candidates(const std::string& model, const std::vector<QuarticPoint>& pts) {
  std::vector<Rational> out;
  for (const auto& p : pts) {
    if (!p.is_affine() || p.x().is_zero()) continue;
    if (model == "D") {
      out.push_back(p.x());
    } else if (auto r = exact_sqrt(p.x())) {
      out.push_back(*r);
      out.push_back(-*r);
    }
  }
  return sorted_unique(out);
}

// Points over x_j = x0 determined by a complete list on one of the fibre models.
std::optional<std::vector<XPoint>> fiber_points(const PlanDetail& d, int j, const Rational& x0,
                                                const std::map<std::string, std::pair<OracleSubject, Evidence>>& merged) {
  for (const char* m : {"D", "E", "F"}) {
    auto ev = evidence_for(merged, fiber_subject(d.plan.twist, j, x0, m));
    if (!ev || !ev->points) continue;
    const BurniatSurface& S = d.surface.surface;
    int a = j == 1 ? 2 : 1, b = j == 3 ? 2 : 3;
    auto yj = ys_over(factor(S, j), x0);
    std::vector<XPoint> out;
    for (const auto& xa : fiber_candidates(m, *ev->points)) {
      Rational xb = S.c / (x0 * xa);
      for (const auto& ya : ys_over(factor(S, a), xa))
        for (const auto& yb : ys_over(factor(S, b), xb))
          for (const auto& y : yj) out.push_back(make_point(a, b, xa, ya, xb, yb, x0, y));
    }
    // make_point puts x0 into the third slot, which is j
    return sorted_unique(out);
  }
  return std::nullopt;
}

SearchOutcome run_search(const PlanDetail& d, const std::map<std::string, std::pair<OracleSubject, Evidence>>& merged) {
  int a = d.plan.factors[0], b = d.plan.factors[1];
  auto ia = static_cast<std::size_t>(a - 1), ib = static_cast<std::size_t>(b - 1);
  SearchOutcome out;
  out.points = search_twist_over(d.surface, a, b, d.found[ia], d.found[ib]);

  std::optional<std::vector<XPoint>> exact;
  std::vector<int> listed;
  for (int j = 1; j <= 3; ++j)
    if (d.lists[static_cast<std::size_t>(j - 1)]) listed.push_back(j);
  for (int j : listed)
    if (affine_xs(*d.lists[static_cast<std::size_t>(j - 1)]).empty()) exact = std::vector<XPoint>{};
  if (!exact && listed.size() >= 2) {
    int p = listed[0], q = listed[1];
    exact = search_twist_over(d.surface, p, q, *d.lists[static_cast<std::size_t>(p - 1)],
                              *d.lists[static_cast<std::size_t>(q - 1)]);
  }
  if (!exact && listed.size() == 1) {
    int j = listed[0];
    std::vector<XPoint> acc;
    bool ok = true;
    for (const auto& x0 : affine_xs(*d.lists[static_cast<std::size_t>(j - 1)])) {
      auto f = fiber_points(d, j, x0, merged);
      if (!f) {
        ok = false;
        break;
      }
      acc.insert(acc.end(), f->begin(), f->end());
    }
    if (ok) exact = sorted_unique(acc);
  }
  if (exact) {
    for (const auto& P : out.points)
      if (!std::binary_search(exact->begin(), exact->end(), P))
        throw DomainError("oracle facts for twist " + d.plan.twist.str() + " miss the found point " + P.str());
    out.points = *exact;
    out.complete = true;
  }
  return out;
}

Rational type_i_key(const TwistClass& T, int j, const Rational& x0) {
  Rational k = x0 * x0;
  for (int i = 1; i <= 3; ++i)
    if (i != j) k = k * Rational(T.d[static_cast<std::size_t>(i - 1)]);
  return k;
}

}  // namespace

SurfaceReport report(const BurniatSurface& S, const ReportOptions& opt) {
  if (!is_smooth_surface(S)) throw DomainError("report needs a smooth surface");
  const std::uint64_t H = opt.height;
  if (H == 0) throw DomainError("height must be positive");
  check_oracle_facts(S, H, opt.oracle);
  auto merged = merge_facts(opt.oracle);

  SurfaceReport R;
  R.surface = S;
  R.height = H;
  R.D = discriminant_D(S);
  R.sigma = sigma(S);
  R.bad = bad_primes(S);
  R.extra_primes = opt.extra_primes;
  R.moduli = moduli_point(S);
  R.strata = strata(R.moduli);
  R.automorphism_group = automorphism_group(R.strata);
  R.census = census(S);
  R.generic = is_generic(S);
  R.oracle = opt.oracle;

  std::vector<TwistRecord> records = filter_twists(S, H, FilterOptions{opt.extra_primes});
  R.twists.total = records.size();
  for (const auto& r : records) {
    if (r.status.kind == TwistStatusKind::EmptyProven)
      ++R.twists.empty_proven;
    else
      R.twists.surviving.push_back(r);
  }

  std::vector<PlanDetail> details = plan_details(S, records, opt.oracle, H);
  std::vector<SearchOutcome> outcomes(details.size());
  parallel_for(details.size(), [&](std::size_t i) { outcomes[i] = run_search(details[i], merged); });

  int orbit_id = 0;
  std::map<std::pair<int, Rational>, std::size_t> class_index;
  std::vector<std::set<int>> class_orbits;
  long sporadic_points = 0;
  bool all_complete = true;
  for (std::size_t i = 0; i < details.size(); ++i) {
    const PlanDetail& d = details[i];
    R.plans.push_back(d.plan);
    TwistSearch ts;
    ts.twist = d.plan.twist;
    ts.factors = d.plan.factors;
    ts.points = outcomes[i].points;
    ts.complete = outcomes[i].complete;
    ts.orbits = orbit_count(d.surface.surface, ts.points);
    if (!ts.complete) all_complete = false;

    std::map<XPoint, int> ids;
    for (const auto& P : ts.points) {
      if (!ids.count(P)) {
        ++orbit_id;
        for (const auto& Q : orbit(d.surface.surface, P)) ids[Q] = orbit_id;
      }
      ClassifiedPoint cp = classify(S, d.surface, P);
      cp.orbit_id = ids[P];
      if (cp.kind == PointKind::SporadicCandidate) {
        ++sporadic_points;
      } else {
        auto key = std::make_pair(cp.fiber_index, type_i_key(d.plan.twist, cp.fiber_index, cp.fiber_x0));
        auto it = class_index.find(key);
        if (it == class_index.end()) {
          TypeIClass c;
          c.projection = cp.fiber_index;
          c.key = key.second;
          FiberModels fm = fiber_models(d.surface.surface, cp.fiber_index, cp.fiber_x0);
          c.component = QuarticCurve{fm.first[0], fm.first[1], fm.first[2]};
          c.certificate = certify_rank(jacobian(c.component, 1), H);
          it = class_index.emplace(key, R.type_i.size()).first;
          R.type_i.push_back(c);
          class_orbits.emplace_back();
        }
        TypeIClass& c = R.type_i[it->second];
        Rational ax = abs(cp.fiber_x0);
        bool seen = false;
        for (std::size_t k = 0; k < c.twists.size(); ++k)
          if (c.twists[k] == cp.twist && c.x0s[k] == ax) seen = true;
        if (!seen) {
          c.twists.push_back(cp.twist);
          c.x0s.push_back(ax);
        }
        class_orbits[it->second].insert(cp.orbit_id);
      }
      R.points.push_back(cp);
    }
    R.searches.push_back(std::move(ts));
  }
  for (std::size_t k = 0; k < R.type_i.size(); ++k) R.type_i[k].orbits = static_cast<int>(class_orbits[k].size());
  if (sporadic_points % 8 != 0) throw InvariantViolation("sporadic points do not form whole Gamma-orbits");

  R.hexagon = hexagon_accounting(S, H, opt.oracle);
  R.at_infinity = R.hexagon.summary;

  std::vector<std::string> undetermined;
  for (const auto& r : R.twists.surviving)
    if (r.status.kind == TwistStatusKind::Undetermined) undetermined.push_back(r.twist.str());
  bool undetermined_open = false;
  for (const auto& s : R.searches)
    for (const auto& u : undetermined)
      if (s.twist.str() == u && !s.complete) undetermined_open = true;

  R.sporadic.count = sporadic_points / 8;
  R.sporadic.claim = all_complete ? "complete given oracle facts" : "up to height " + std::to_string(H);

  bool type_i_infinite = false;
  for (const auto& c : R.type_i)
    if (c.certificate.status == RankStatus::PositiveRank) type_i_infinite = true;
  long type_i_orbits = 0;
  for (const auto& c : R.type_i) type_i_orbits += c.orbits;

  if (R.at_infinity.infinite) {
    R.total.infinite = true;
    R.total.claim = "points at infinity, " + R.at_infinity.claim;
  } else if (type_i_infinite) {
    R.total.infinite = true;
    R.total.claim = "proven: type-I curve with a rational point and a point of infinite order on its Jacobian";
  } else {
    R.total.count = R.at_infinity.count + R.sporadic.count + type_i_orbits;
    R.total.claim = "at infinity " + R.at_infinity.claim + "; affine " + R.sporadic.claim;
  }

  if (!undetermined.empty()) {
    std::string list;
    for (const auto& u : undetermined) list += (list.empty() ? "" : ", ") + u;
    R.caveats.push_back(std::string("twists left Undetermined (locally solvable, no point found on some factor") +
                        (undetermined_open ? "" : "; settled by oracle facts") + "): " + list);
  }
  if (R.census.typeII > 0)
    R.caveats.push_back("type-II membership is not tested per point; sporadic candidates may lie on type-II curves");
  return R;
}

bool operator==(const HexagonSideReport& a, const HexagonSideReport& b) {
  return a.curve == b.curve && a.points == b.points && a.orders == b.orders && a.certificate == b.certificate;
}

bool operator==(const HexagonTable& a, const HexagonTable& b) { return a.sides == b.sides && a.summary == b.summary; }

bool operator==(const SurfaceReport& a, const SurfaceReport& b) {
  return a.surface == b.surface && a.height == b.height && a.D == b.D && a.sigma == b.sigma && a.bad == b.bad &&
         a.extra_primes == b.extra_primes && a.moduli == b.moduli && a.strata == b.strata &&
         a.automorphism_group == b.automorphism_group && a.census == b.census && a.generic == b.generic &&
         a.twists == b.twists && a.plans == b.plans && a.searches == b.searches && a.points == b.points &&
         a.type_i == b.type_i && a.hexagon == b.hexagon && a.at_infinity == b.at_infinity && a.sporadic == b.sporadic &&
         a.total == b.total && a.caveats == b.caveats && a.oracle == b.oracle;
}

}  // namespace burniat
