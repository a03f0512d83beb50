#include "burniat/report_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "burniat/errors.hpp"

namespace burniat {

namespace {

// Path-tracking view into a JSON document; every failure names its field.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const Json& raw() const { return j_; }
  [[noreturn]] void fail(const std::string& why) const { throw DomainError((path_.empty() ? "document" : path_) + ": " + why); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }
  bool is_null() const { return j_.is_null(); }

  Reader at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    std::string p = path_.empty() ? key : path_ + "." + key;
    if (it == j_.end()) throw DomainError(p + ": missing field");
    return Reader(*it, p);
  }
  Reader at(std::size_t i) const { return Reader(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }

  std::size_t array_size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  std::size_t array_size(std::size_t want) const {
    std::size_t n = array_size();
    if (n != want) fail("expected " + std::to_string(want) + " entries, got " + std::to_string(n));
    return n;
  }

  void only_keys(std::initializer_list<const char*> keys) const {
    if (!j_.is_object()) fail("expected an object");
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      bool known = false;
      for (const char* k : keys) known = known || it.key() == k;
      if (!known) throw DomainError((path_.empty() ? "" : path_ + ".") + it.key() + ": unknown field");
    }
  }

  Rational rational() const {
    if (j_.is_number_float()) fail("floating-point values are not allowed, write \"p/q\"");
    if (j_.is_number_integer()) return j_.is_number_unsigned() ? Rational(j_.get<std::uint64_t>()) : Rational(j_.get<std::int64_t>());
    if (!j_.is_string()) fail("expected a rational number");
    try {
      return Rational::parse(j_.get<std::string>());
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }
  Integer integer() const {
    Rational q = rational();
    if (!q.is_integer()) fail("expected an integer");
    return q.num();
  }
  long long number() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long long>();
  }
  int small(int lo, int hi) const {
    long long v = number();
    if (v < lo || v > hi) fail("must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    return static_cast<int>(v);
  }
  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) fail("expected true or false");
    return j_.get<bool>();
  }

 private:
  const Json& j_;
  std::string path_;
};

QuarticCurve read_curve(const Reader& r) {
  r.array_size(3);
  return {r.at(std::size_t{0}).rational(), r.at(1).rational(), r.at(2).rational()};
}

QuarticPoint read_quartic_point(const Reader& r) {
  if (r.raw().is_object()) {
    r.only_keys({"inf"});
    return QuarticPoint::at_infinity(r.at("inf").rational());
  }
  r.array_size(2);
  return QuarticPoint::affine(r.at(std::size_t{0}).rational(), r.at(1).rational());
}

WeierstrassPoint read_weierstrass_point(const Reader& r) {
  if (r.raw().is_string()) {
    if (r.string() != "O") r.fail("expected \"O\" or [X, Y]");
    return WeierstrassPoint::identity();
  }
  r.array_size(2);
  return WeierstrassPoint::finite(r.at(std::size_t{0}).rational(), r.at(1).rational());
}

WeierstrassCurve read_weierstrass(const Reader& r) {
  r.array_size(3);
  return {r.at(std::size_t{0}).rational(), r.at(1).rational(), r.at(2).rational()};
}

TwistClass read_twist(const Reader& r) {
  r.array_size(3);
  TwistClass T;
  for (std::size_t i = 0; i < 3; ++i) {
    T.d[i] = r.at(i).integer();
    if (!is_squarefree(T.d[i])) r.at(i).fail("twist entries must be squarefree integers");
  }
  return T;
}

PrimeSet read_primes(const Reader& r) {
  std::vector<Integer> ps;
  for (std::size_t i = 0; i < r.array_size(); ++i) {
    Integer p = r.at(i).integer();
    if (!is_prime(p)) r.at(i).fail(p.get_str() + " is not a prime");
    ps.push_back(p);
  }
  return PrimeSet(ps);
}

XPoint read_xpoint(const Reader& r) {
  r.array_size(3);
  XPoint P;
  for (std::size_t i = 0; i < 3; ++i) P.coords[i] = read_quartic_point(r.at(i));
  return P;
}

template <class T, class F>
std::vector<T> read_list(const Reader& r, F&& f) {
  std::vector<T> out;
  for (std::size_t i = 0; i < r.array_size(); ++i) out.push_back(f(r.at(i)));
  return out;
}

Vertex vertex_from_string(const Reader& r) {
  std::string s = r.string();
  if (s == "Origin") return Vertex::Origin;
  if (s == "Identity") return Vertex::Identity;
  r.fail("expected \"Origin\" or \"Identity\"");
}

std::string vertex_str(Vertex v) { return v == Vertex::Origin ? "Origin" : "Identity"; }

Place read_place(const Reader& r) {
  std::string s = r.string();
  if (s == "inf") return Place::infinity();
  try {
    return Place::at(Integer(s));
  } catch (const std::exception&) {
    r.fail("expected \"inf\" or a prime");
  }
}

HexSide read_side(const Reader& r) {
  try {
    return hex_side_from_string(r.string());
  } catch (const DomainError& e) {
    r.fail(e.what());
  }
}

std::string subject_kind_str(SubjectKind k) {
  switch (k) {
    case SubjectKind::HexagonSide: return "hexagon_side";
    case SubjectKind::TwistFactor: return "twist_factor";
    case SubjectKind::FiberCurve: return "fiber";
  }
  return "?";
}

RankCertificate read_certificate(const Reader& r) {
  RankCertificate c;
  c.curve = read_weierstrass(r.at("curve"));
  try {
    c.status = rank_status_from_string(r.at("status").string());
  } catch (const DomainError& e) {
    r.at("status").fail(e.what());
  }
  if (!r.at("witness").is_null()) c.witness = read_weierstrass_point(r.at("witness"));
  c.height = static_cast<std::uint64_t>(r.at("height").number());
  return c;
}

InfinitySummary read_infinity(const Reader& r) {
  return {r.at("infinite").boolean(), static_cast<long>(r.at("count").number()), r.at("claim").string()};
}

CountClaim read_claim(const Reader& r) {
  return {static_cast<long>(r.at("count").number()), r.at("infinite").boolean(), r.at("claim").string()};
}

}  // namespace

// ---- config ----

OracleFact parse_fact(const Json& j, const std::string& where) {
  Reader r(j, where);
  r.only_keys({"subject", "rank", "points", "provenance"});
  OracleFact f;
  Reader s = r.at("subject");
  std::string kind = s.at("kind").string();
  if (kind == "hexagon_side") {
    s.only_keys({"kind", "side"});
    f.subject.kind = SubjectKind::HexagonSide;
    f.subject.side = read_side(s.at("side"));
  } else if (kind == "twist_factor") {
    s.only_keys({"kind", "twist", "curve"});
    f.subject.kind = SubjectKind::TwistFactor;
    f.subject.twist = read_twist(s.at("twist"));
    f.subject.curve = s.at("curve").small(1, 3);
  } else if (kind == "fiber") {
    s.only_keys({"kind", "twist", "projection", "x0", "model"});
    f.subject.kind = SubjectKind::FiberCurve;
    f.subject.twist = read_twist(s.at("twist"));
    f.subject.projection = s.at("projection").small(1, 3);
    f.subject.x0 = s.at("x0").rational();
    if (f.subject.x0.is_zero()) s.at("x0").fail("must be nonzero");
    f.subject.model = s.at("model").string();
    if (f.subject.model != "D" && f.subject.model != "E" && f.subject.model != "F")
      s.at("model").fail("must be \"D\", \"E\" or \"F\"");
  } else {
    s.at("kind").fail("must be \"hexagon_side\", \"twist_factor\" or \"fiber\"");
  }
  if (r.has("rank")) {
    f.rank = r.at("rank").small(0, std::numeric_limits<int>::max());
    if (f.subject.kind == SubjectKind::FiberCurve) r.at("rank").fail("fiber curves take point lists, not ranks");
  }
  if (r.has("points")) {
    if (f.subject.kind == SubjectKind::HexagonSide)
      f.weierstrass_points = read_list<WeierstrassPoint>(r.at("points"), read_weierstrass_point);
    else
      f.points = read_list<QuarticPoint>(r.at("points"), read_quartic_point);
  }
  if (!f.rank && !r.has("points")) r.fail("needs \"rank\" or \"points\"");
  f.provenance = r.at("provenance").string();
  return f;
}

Config parse_config(const Json& doc) {
  Reader r(doc, "");
  r.only_keys({"curves", "c", "height", "extra_primes", "oracle"});
  Config cfg;
  Reader curves = r.at("curves");
  curves.array_size(3);
  for (std::size_t i = 0; i < 3; ++i) {
    QuarticCurve c = read_curve(curves.at(i));
    if (!is_smooth(c)) curves.at(i).fail("curve is singular (needs r t (s^2 - 4 r t) != 0)");
    cfg.surface.curves[i] = c;
  }
  cfg.surface.c = r.at("c").rational();
  if (cfg.surface.c.is_zero()) r.at("c").fail("must be nonzero");
  if (r.has("height")) {
    long long h = r.at("height").number();
    if (h < 1 || static_cast<std::uint64_t>(h) > kMaxHeight)
      r.at("height").fail("must be between 1 and " + std::to_string(kMaxHeight));
    cfg.height = static_cast<std::uint64_t>(h);
  }
  if (r.has("extra_primes")) cfg.extra_primes = read_primes(r.at("extra_primes"));
  if (r.has("oracle")) {
    Reader o = r.at("oracle");
    for (std::size_t i = 0; i < o.array_size(); ++i) cfg.oracle.push_back(parse_fact(o.at(i).raw(), o.at(i).path()));
  }
  return cfg;
}

Config parse_config_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

// ---- to_json ----

void to_json(Json& j, const Rational& q) { j = q.str(); }

void to_json(Json& j, const PrimeSet& p) {
  j = Json::array();
  for (const auto& x : p) j.push_back(x.get_str());
}

void to_json(Json& j, const QuarticCurve& c) { j = Json::array({c.r, c.s, c.t}); }

void to_json(Json& j, const QuarticPoint& p) {
  if (p.is_at_infinity())
    j = Json{{"inf", p.eta()}};
  else
    j = Json::array({p.x(), p.y()});
}

void to_json(Json& j, const WeierstrassCurve& w) { j = Json::array({w.a, w.b, w.c}); }

void to_json(Json& j, const WeierstrassPoint& p) {
  if (p.is_identity())
    j = "O";
  else
    j = Json::array({p.X(), p.Y()});
}

void to_json(Json& j, const BinaryFormCurve& f) {
  j = Json::array();
  for (const auto& c : f.coeffs) j.push_back(c);
}

void to_json(Json& j, const BurniatSurface& S) {
  j = Json{{"curves", Json::array({S.curves[0], S.curves[1], S.curves[2]})}, {"c", S.c}};
}

void to_json(Json& j, const SigmaInvariants& s) { j = Json::array({s.sigma1, s.sigma2, s.sigma3, s.sigma4}); }

void to_json(Json& j, const XPoint& P) { j = Json::array({P.coords[0], P.coords[1], P.coords[2]}); }

void to_json(Json& j, const TwistClass& T) { j = Json::array({T.d[0].get_str(), T.d[1].get_str(), T.d[2].get_str()}); }

void to_json(Json& j, const TwistRecord& r) {
  Json pts = Json::array();
  for (const auto& p : r.status.witness_points) pts.push_back(p ? Json(*p) : Json(nullptr));
  j = Json{{"twist", r.twist},
           {"status", to_string(r.status.kind)},
           {"witness_curve", r.status.witness_curve},
           {"witness_place", r.status.witness_place.str()},
           {"witness_points", pts}};
}

void to_json(Json& j, const ModuliPoint& P) {
  j = Json{{"u1", P.u1}, {"u2", P.u2}, {"u3", P.u3}, {"d", P.d}, {"v", P.v}, {"w", P.w}};
}

void to_json(Json& j, const StrataFlags& F) {
  j = Json{{"M1", F.M1}, {"M2", F.M2}, {"M3", F.M3}, {"M4", F.M4}, {"N1", F.N1},
           {"N2", F.N2 ? Json(*F.N2) : Json(nullptr)}};
}

void to_json(Json& j, const CensusCounts& c) {
  j = Json{{"infinity", c.infinity}, {"typeI", c.typeI}, {"typeII", c.typeII}};
}

void to_json(Json& j, const HexagonCurve& h) {
  j = Json{{"side", to_string(h.side)},
           {"curve_index", h.curve_index},
           {"twist", h.twist},
           {"model", h.model},
           {"model_text", to_string(h.model)},
           {"prev", to_string(h.prev)},
           {"next", to_string(h.next)},
           {"shared_prev", vertex_str(h.shared_prev)},
           {"shared_next", vertex_str(h.shared_next)}};
}

void to_json(Json& j, const FiberModels& f) {
  j = Json{{"projection", f.projection},
           {"x0", f.x0},
           {"factors", Json::array({f.factors[0], f.factors[1]})},
           {"first", Json::array({f.first[0], f.first[1], f.first[2]})},
           {"second", Json::array({f.second[0], f.second[1], f.second[2]})},
           {"D", f.curveD},
           {"E", f.curveE},
           {"F", f.curveF},
           {"D_text", to_string(f.curveD)},
           {"E_text", to_string(f.curveE)},
           {"F_text", to_string(f.curveF)}};
}

void to_json(Json& j, const RankCertificate& c) {
  j = Json{{"curve", c.curve},
           {"status", to_string(c.status)},
           {"witness", c.witness ? Json(*c.witness) : Json(nullptr)},
           {"height", c.height}};
}

void to_json(Json& j, const OracleFact& f) {
  Json s{{"kind", subject_kind_str(f.subject.kind)}};
  switch (f.subject.kind) {
    case SubjectKind::HexagonSide: s["side"] = to_string(f.subject.side); break;
    case SubjectKind::TwistFactor:
      s["twist"] = f.subject.twist;
      s["curve"] = f.subject.curve;
      break;
    case SubjectKind::FiberCurve:
      s["twist"] = f.subject.twist;
      s["projection"] = f.subject.projection;
      s["x0"] = f.subject.x0;
      s["model"] = f.subject.model;
      break;
  }
  j = Json{{"subject", s}};
  if (f.rank) j["rank"] = *f.rank;
  if (f.points) j["points"] = *f.points;
  if (f.weierstrass_points) j["points"] = *f.weierstrass_points;
  j["provenance"] = f.provenance;
}

void to_json(Json& j, const SearchPlan& p) {
  j = Json{{"twist", p.twist},
           {"case", to_string(p.plan_case)},
           {"factors", Json::array({p.factors[0], p.factors[1]})},
           {"found", Json::array({p.found[0], p.found[1], p.found[2]})},
           {"annotation", p.annotation}};
}

void to_json(Json& j, const TwistSearch& s) {
  j = Json{{"twist", s.twist},
           {"factors", Json::array({s.factors[0], s.factors[1]})},
           {"points", s.points},
           {"orbits", s.orbits},
           {"complete", s.complete}};
}

void to_json(Json& j, const ClassifiedPoint& p) {
  j = Json{{"twist", p.twist}, {"point", p.point}, {"class", to_string(p.kind)}};
  if (p.kind == PointKind::TypeI)
    j["fiber"] = Json{{"projection", p.fiber_index}, {"x0", p.fiber_x0}};
  else
    j["fiber"] = nullptr;
  j["orbit"] = p.orbit_id;
}

void to_json(Json& j, const TypeIClass& c) {
  j = Json{{"projection", c.projection}, {"key", c.key},           {"twists", c.twists},
           {"x0", c.x0s},                {"component", c.component}, {"certificate", c.certificate},
           {"orbits", c.orbits}};
}

void to_json(Json& j, const HexagonSideReport& s) {
  j = Json{{"curve", s.curve}, {"points", s.points}, {"orders", s.orders}, {"certificate", s.certificate}};
}

void to_json(Json& j, const HexagonTable& t) { j = Json{{"sides", t.sides}, {"summary", t.summary}}; }

void to_json(Json& j, const InfinitySummary& s) {
  j = Json{{"infinite", s.infinite}, {"count", s.count}, {"claim", s.claim}};
}

void to_json(Json& j, const CountClaim& c) { j = Json{{"infinite", c.infinite}, {"count", c.count}, {"claim", c.claim}}; }

void to_json(Json& j, const SurfaceReport& R) {
  j = Json{
      {"surface", R.surface},
      {"height", R.height},
      {"invariants", Json{{"D", R.D}, {"sigma", R.sigma}, {"bad_primes", R.bad}, {"extra_primes", R.extra_primes}}},
      {"moduli", Json{{"point", R.moduli},
                      {"strata", R.strata},
                      {"automorphism_group", R.automorphism_group},
                      {"census", R.census},
                      {"generic", R.generic}}},
      {"twists", Json{{"total", R.twists.total}, {"empty_proven", R.twists.empty_proven}, {"surviving", R.twists.surviving}}},
      {"plans", R.plans},
      {"searches", R.searches},
      {"points", R.points},
      {"type_i", R.type_i},
      {"hexagon", R.hexagon},
      {"summary", Json{{"at_infinity", R.at_infinity}, {"sporadic", R.sporadic}, {"total", R.total}, {"caveats", R.caveats}}},
      {"oracle", R.oracle}};
}

// ---- from json ----

SurfaceReport report_from_json(const Json& j) {
  Reader r(j, "");
  SurfaceReport R;
  {
    Reader s = r.at("surface");
    for (std::size_t i = 0; i < 3; ++i) R.surface.curves[i] = read_curve(s.at("curves").at(i));
    R.surface.c = s.at("c").rational();
  }
  R.height = static_cast<std::uint64_t>(r.at("height").number());
  {
    Reader inv = r.at("invariants");
    R.D = inv.at("D").rational();
    Reader sg = inv.at("sigma");
    sg.array_size(4);
    R.sigma = {sg.at(std::size_t{0}).rational(), sg.at(1).rational(), sg.at(2).rational(), sg.at(3).rational()};
    R.bad = read_primes(inv.at("bad_primes"));
    R.extra_primes = read_primes(inv.at("extra_primes"));
  }
  {
    Reader m = r.at("moduli");
    Reader p = m.at("point");
    R.moduli = {p.at("u1").rational(), p.at("u2").rational(), p.at("u3").rational(),
                p.at("d").rational(),  p.at("v").rational(),  p.at("w").rational()};
    Reader st = m.at("strata");
    R.strata.M1 = st.at("M1").boolean();
    R.strata.M2 = st.at("M2").boolean();
    R.strata.M3 = st.at("M3").boolean();
    R.strata.M4 = st.at("M4").boolean();
    R.strata.N1 = st.at("N1").boolean();
    if (!st.at("N2").is_null()) R.strata.N2 = st.at("N2").rational();
    R.automorphism_group = m.at("automorphism_group").string();
    Reader c = m.at("census");
    R.census = {static_cast<int>(c.at("infinity").number()), static_cast<int>(c.at("typeI").number()),
                static_cast<int>(c.at("typeII").number())};
    R.generic = m.at("generic").boolean();
  }
  {
    Reader t = r.at("twists");
    R.twists.total = static_cast<std::size_t>(t.at("total").number());
    R.twists.empty_proven = static_cast<std::size_t>(t.at("empty_proven").number());
    R.twists.surviving = read_list<TwistRecord>(t.at("surviving"), [](const Reader& e) {
      TwistRecord rec;
      rec.twist = read_twist(e.at("twist"));
      try {
        rec.status.kind = twist_status_from_string(e.at("status").string());
      } catch (const DomainError& err) {
        e.at("status").fail(err.what());
      }
      rec.status.witness_curve = e.at("witness_curve").small(0, 3);
      rec.status.witness_place = read_place(e.at("witness_place"));
      Reader w = e.at("witness_points");
      w.array_size(3);
      for (std::size_t i = 0; i < 3; ++i)
        if (!w.at(i).is_null()) rec.status.witness_points[i] = read_quartic_point(w.at(i));
      return rec;
    });
  }
  R.plans = read_list<SearchPlan>(r.at("plans"), [](const Reader& e) {
    SearchPlan p;
    p.twist = read_twist(e.at("twist"));
    try {
      p.plan_case = plan_case_from_string(e.at("case").string());
    } catch (const DomainError& err) {
      e.at("case").fail(err.what());
    }
    e.at("factors").array_size(2);
    p.factors = {e.at("factors").at(std::size_t{0}).small(1, 3), e.at("factors").at(1).small(1, 3)};
    e.at("found").array_size(3);
    for (std::size_t i = 0; i < 3; ++i) p.found[i] = static_cast<long>(e.at("found").at(i).number());
    p.annotation = e.at("annotation").string();
    return p;
  });
  R.searches = read_list<TwistSearch>(r.at("searches"), [](const Reader& e) {
    TwistSearch s;
    s.twist = read_twist(e.at("twist"));
    e.at("factors").array_size(2);
    s.factors = {e.at("factors").at(std::size_t{0}).small(1, 3), e.at("factors").at(1).small(1, 3)};
    s.points = read_list<XPoint>(e.at("points"), read_xpoint);
    s.orbits = static_cast<int>(e.at("orbits").number());
    s.complete = e.at("complete").boolean();
    return s;
  });
  R.points = read_list<ClassifiedPoint>(r.at("points"), [](const Reader& e) {
    ClassifiedPoint p;
    p.twist = read_twist(e.at("twist"));
    p.point = read_xpoint(e.at("point"));
    std::string k = e.at("class").string();
    if (k == "TypeI") {
      p.kind = PointKind::TypeI;
      p.fiber_index = e.at("fiber").at("projection").small(1, 3);
      p.fiber_x0 = e.at("fiber").at("x0").rational();
    } else if (k == "SporadicCandidate") {
      p.kind = PointKind::SporadicCandidate;
    } else {
      e.at("class").fail("expected \"TypeI\" or \"SporadicCandidate\"");
    }
    p.orbit_id = static_cast<int>(e.at("orbit").number());
    return p;
  });
  R.type_i = read_list<TypeIClass>(r.at("type_i"), [](const Reader& e) {
    TypeIClass c;
    c.projection = e.at("projection").small(1, 3);
    c.key = e.at("key").rational();
    c.twists = read_list<TwistClass>(e.at("twists"), read_twist);
    c.x0s = read_list<Rational>(e.at("x0"), [](const Reader& x) { return x.rational(); });
    c.component = read_curve(e.at("component"));
    c.certificate = read_certificate(e.at("certificate"));
    c.orbits = static_cast<int>(e.at("orbits").number());
    return c;
  });
  {
    Reader h = r.at("hexagon");
    R.hexagon.sides = read_list<HexagonSideReport>(h.at("sides"), [](const Reader& e) {
      HexagonSideReport s;
      Reader c = e.at("curve");
      s.curve.side = read_side(c.at("side"));
      s.curve.curve_index = c.at("curve_index").small(1, 3);
      s.curve.twist = c.at("twist").rational();
      s.curve.model = read_weierstrass(c.at("model"));
      s.curve.prev = read_side(c.at("prev"));
      s.curve.next = read_side(c.at("next"));
      s.curve.shared_prev = vertex_from_string(c.at("shared_prev"));
      s.curve.shared_next = vertex_from_string(c.at("shared_next"));
      s.points = read_list<WeierstrassPoint>(e.at("points"), read_weierstrass_point);
      s.orders = read_list<int>(e.at("orders"), [](const Reader& x) { return x.small(0, 12); });
      s.certificate = read_certificate(e.at("certificate"));
      return s;
    });
    R.hexagon.summary = read_infinity(h.at("summary"));
  }
  {
    Reader s = r.at("summary");
    R.at_infinity = read_infinity(s.at("at_infinity"));
    R.sporadic = read_claim(s.at("sporadic"));
    R.total = read_claim(s.at("total"));
    R.caveats = read_list<std::string>(s.at("caveats"), [](const Reader& x) { return x.string(); });
  }
  {
    Reader o = r.at("oracle");
    for (std::size_t i = 0; i < o.array_size(); ++i) R.oracle.push_back(parse_fact(o.at(i).raw(), o.at(i).path()));
  }
  return R;
}

// ---- text ----

std::string report_text(const SurfaceReport& R) {
  std::ostringstream out;
  const auto& S = R.surface;
  out << "surface: E1 " << to_string(S.curves[0]) << ", E2 " << to_string(S.curves[1]) << ", E3 "
      << to_string(S.curves[2]) << ", c = " << S.c.str() << "\n";
  out << "height bound: " << R.height << "\n\n";
  out << "D = " << R.D.str() << "\n";
  out << "sigma = (" << R.sigma.sigma1.str() << ", " << R.sigma.sigma2.str() << ", " << R.sigma.sigma3.str() << ", "
      << R.sigma.sigma4.str() << ")\n";
  out << "bad primes: " << R.bad.str();
  if (!R.extra_primes.empty()) out << " (extra " << R.extra_primes.str() << ")";
  out << "\n\nmoduli point: " << to_string(R.moduli) << "\n";
  out << "strata: " << to_string(R.strata) << "\n";
  out << "automorphism group: " << R.automorphism_group << "\n";
  out << "census: (" << R.census.infinity << ", " << R.census.typeI << ", " << R.census.typeII << ")"
      << (R.generic ? ", generic" : "") << "\n\n";

  out << "twists: " << R.twists.total << " enumerated, " << R.twists.empty_proven << " EmptyProven, "
      << R.twists.surviving.size() << " surviving\n";
  for (std::size_t i = 0; i < R.searches.size(); ++i) {
    const auto& s = R.searches[i];
    const auto& p = R.plans[i];
    out << "  " << s.twist.str() << "  " << to_string(R.twists.surviving[i].status.kind) << ", plan "
        << to_string(p.plan_case) << (p.annotation.empty() ? "" : " [" + p.annotation + "]") << ", factors E"
        << s.factors[0] << "/E" << s.factors[1] << ": " << s.points.size() << " points, " << s.orbits << " orbits"
        << (s.complete ? " (complete)" : "") << "\n";
  }
  if (!R.type_i.empty()) {
    out << "\ntype-I classes:\n";
    for (const auto& c : R.type_i) {
      out << "  projection " << c.projection << ", x^2 = " << c.key.str() << ": component y^2 = "
          << to_string(c.component) << ", " << to_string(c.certificate.status);
      if (c.certificate.witness) out << " witness " << c.certificate.witness->str();
      out << ", " << c.orbits << " orbits found\n";
    }
  }
  out << "\nhexagon:\n";
  for (const auto& side : R.hexagon.sides) {
    out << "  " << to_string(side.curve.side) << ": " << to_string(side.curve.model) << ", " << side.points.size()
        << " points, " << to_string(side.certificate.status);
    if (side.certificate.witness) out << " witness " << side.certificate.witness->str();
    out << "\n";
  }
  out << "\nat infinity: " << (R.at_infinity.infinite ? "infinite" : std::to_string(R.at_infinity.count)) << " ("
      << R.at_infinity.claim << ")\n";
  out << "sporadic: " << R.sporadic.count << " (" << R.sporadic.claim << ")\n";
  out << "total: " << (R.total.infinite ? "infinite" : std::to_string(R.total.count)) << " (" << R.total.claim << ")\n";
  for (const auto& c : R.caveats) out << "caveat: " << c << "\n";
  return out.str();
}

}  // namespace burniat
