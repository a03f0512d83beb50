#include "burniat/twists.hpp"

#include <algorithm>
#include <map>

#include "burniat/parallel.hpp"

namespace burniat {

std::string TwistClass::str() const {
  return "(" + d[0].get_str() + ", " + d[1].get_str() + ", " + d[2].get_str() + ")";
}

TwistClass compose(const TwistClass& a, const TwistClass& b) {
  TwistClass out;
  for (std::size_t i = 0; i < 3; ++i) out.d[i] = squarefree_part(Rational(a.d[i] * b.d[i]));
  return out;
}

std::string to_string(TwistStatusKind k) {
  switch (k) {
    case TwistStatusKind::EmptyProven: return "EmptyProven";
    case TwistStatusKind::PointsFound: return "PointsFound";
    case TwistStatusKind::Undetermined: return "Undetermined";
  }
  return "?";
}

TwistStatusKind twist_status_from_string(const std::string& s) {
  for (auto k : {TwistStatusKind::EmptyProven, TwistStatusKind::PointsFound, TwistStatusKind::Undetermined})
    if (to_string(k) == s) return k;
  throw DomainError("unknown twist status '" + s + "'");
}

std::vector<TwistClass> enumerate_twists(const PrimeSet& bad) {
  std::vector<Integer> values{1};
  for (const auto& p : bad) {
    std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) values.push_back(values[i] * p);
  }
  std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) values.push_back(-values[i]);
  std::sort(values.begin(), values.end());
  std::vector<TwistClass> out;
  out.reserve(values.size() * values.size() * values.size());
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values) out.push_back(TwistClass{{a, b, c}});
  return out;
}

namespace {

void require_squarefree(const TwistClass& T) {
  for (const auto& x : T.d)
    if (!is_squarefree(x)) throw DomainError("twist " + T.str() + ": " + x.get_str() + " is not squarefree");
}

QuarticCurve raw_factor(const BurniatSurface& S, const TwistClass& T, int j) {
  // curve j uses the other two d's, (u, v) = (d2, d3), (d1, d3), (d1, d2);
  // after multiplying its twisted equation through by its own y-twist.
  const auto& d = T.d;
  const QuarticCurve& e = S.curves[static_cast<std::size_t>(j - 1)];
  Rational d1(d[0]), d2(d[1]), d3(d[2]);
  switch (j) {
    case 1: return {e.r * d2 * d2 * d3 * d3 * d3, e.s * d2 * d3 * d3, e.t * d3};
    case 2: return {e.r * d1 * d1 * d1 * d3 * d3, e.s * d1 * d1 * d3, e.t * d1};
    case 3: return {e.r * d1 * d1 * d2 * d2 * d2, e.s * d1 * d2 * d2, e.t * d2};
  }
  throw DomainError("curve index out of range");
}

}  // namespace

QuarticCurve twisted_factor(const BurniatSurface& S, const TwistClass& T, int j) {
  require_squarefree(T);
  return normalize(raw_factor(S, T, j)).model;
}

TwistedSurface twist_surface(const BurniatSurface& S, const TwistClass& T) {
  if (!is_smooth_surface(S)) throw DomainError("twist_surface: surface is not smooth");
  require_squarefree(T);
  TwistedSurface out;
  out.origin = T;
  for (int j = 1; j <= 3; ++j) out.surface.curves[static_cast<std::size_t>(j - 1)] = normalize(raw_factor(S, T, j)).model;
  out.surface.c = S.c / Rational(T.d[0] * T.d[1] * T.d[2]);
  return out;
}

std::vector<TwistRecord> filter_twists(const BurniatSurface& S, std::uint64_t H, const FilterOptions& opt) {
  if (H == 0) throw DomainError("search height must be positive");
  PrimeSet primes = bad_primes(S).unite(opt.extra_primes);
  std::vector<TwistClass> twists = enumerate_twists(primes);

  // Many triples share factors: factor j only sees two of the d's.
  std::map<QuarticCurve, std::size_t> index;
  std::vector<QuarticCurve> distinct;
  std::vector<std::array<std::size_t, 3>> slots(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (int j = 1; j <= 3; ++j) {
      QuarticCurve c = normalize(raw_factor(S, twists[i], j)).model;
      auto [it, fresh] = index.emplace(c, distinct.size());
      if (fresh) distinct.push_back(c);
      slots[i][static_cast<std::size_t>(j - 1)] = it->second;
    }

  struct CurveResult {
    std::optional<Place> obstruction;
    std::optional<QuarticPoint> point;
  };
  std::vector<CurveResult> results(distinct.size());
  parallel_for(distinct.size(), [&](std::size_t k) {
    CurveResult r;
    r.obstruction = local_obstruction(distinct[k], primes);
    if (!r.obstruction) r.point = first_point(distinct[k], H);
    results[k] = std::move(r);
  });

  std::vector<TwistRecord> out;
  out.reserve(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i) {
    TwistStatus st;
    for (int j = 1; j <= 3 && st.witness_curve == 0; ++j) {
      const CurveResult& r = results[slots[i][static_cast<std::size_t>(j - 1)]];
      if (r.obstruction) {
        st.kind = TwistStatusKind::EmptyProven;
        st.witness_curve = j;
        st.witness_place = *r.obstruction;
      }
    }
    if (st.witness_curve == 0) {
      bool all = true;
      for (std::size_t j = 0; j < 3; ++j) {
        st.witness_points[j] = results[slots[i][j]].point;
        all = all && st.witness_points[j].has_value();
      }
      st.kind = all ? TwistStatusKind::PointsFound : TwistStatusKind::Undetermined;
    }
    out.push_back({twists[i], std::move(st)});
  }
  return out;
}

}  // namespace burniat
