#include <algorithm>
#include <random>
#include <set>

#include "burniat/surface.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace burniat;

namespace {

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }
QuarticPoint A(const Rational& x, const Rational& y) { return QuarticPoint::affine(x, y); }

BurniatSurface rotate(const BurniatSurface& S) { return {{S.curves[1], S.curves[2], S.curves[0]}, S.c}; }

}  // namespace

TEST_CASE("sigma invariants") {
  CHECK(sigma(fixture::ex2()) == SigmaInvariants{-4, 0, 16, 0});
  CHECK(sigma(fixture::ex3()) == SigmaInvariants{8, 14, 7, 1});
  auto s = sigma(fixture::ex1());
  CHECK(s.sigma2 == 0);
  CHECK(s.sigma3 == 0);
  CHECK(s.sigma4 == 0);
}

TEST_CASE("discriminant D") {
  CHECK(discriminant_D(fixture::ex1()) == 50625);
  CHECK(discriminant_D(fixture::ex2()) == 256);
  CHECK(discriminant_D(fixture::ex3()) == 436);
  CHECK(discriminant_D(fixture::ex4()) == 100);
}

TEST_CASE("surface smoothness") {
  CHECK(is_smooth_surface(fixture::ex1()));
  BurniatSurface S = fixture::ex1();
  S.c = 1;  // D = (c^4 - 1)^4 here
  CHECK(discriminant_D(S) == 0);
  CHECK_FALSE(is_smooth_surface(S));
  S.c = 0;
  CHECK_FALSE(is_smooth_surface(S));
  S = fixture::ex1();
  S.curves[1] = {1, 2, 1};
  CHECK_FALSE(is_smooth_surface(S));
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(fixture::ex1()) == PrimeSet({2, 3, 5}));
  CHECK(bad_primes(fixture::ex2()) == PrimeSet({2, 3}));
  CHECK(bad_primes(fixture::ex3()) == PrimeSet({2, 3, 5, 7, 109}));
  CHECK(bad_primes(fixture::ex4()) == PrimeSet({2, 3, 5, 7}));
  BurniatSurface S = fixture::ex1();
  S.c = 1;
  CHECK_THROWS_AS(bad_primes(S), DomainError);
}

TEST_CASE("gamma action") {
  BurniatSurface S = fixture::ex3();
  XPoint P{{A(1, 2), A(1, 1), A(1, 2)}};
  REQUIRE(on_surface(S, P));
  XPoint g1P = gamma_act(S, GammaElement::generator(1), P);
  CHECK(g1P == XPoint{{A(1, 2), A(-1, -1), A(-1, 2)}});
  CHECK(gamma_act(S, GammaElement::generator(2), P) == XPoint{{A(-1, 2), A(1, 1), A(-1, -2)}});
  CHECK(gamma_act(S, GammaElement::generator(3), P) == XPoint{{A(-1, -2), A(-1, 1), A(1, 2)}});
  CHECK(gamma_act(S, GammaElement::identity(), P) == P);
  GammaElement g = GammaElement{7};
  CHECK(gamma_act(S, g, gamma_act(S, g, P)) == P);
  // the product of the generators negates every y
  CHECK(gamma_act(S, g, P) == XPoint{{A(1, -2), A(1, -1), A(1, -2)}});
  CHECK_THROWS_AS(gamma_act(S, g, XPoint{{A(1, 2), A(1, 1), A(-1, 2)}}), DomainError);
}

TEST_CASE("orbits") {
  BurniatSurface S = fixture::ex3();
  XPoint P{{A(1, 2), A(1, 1), A(1, 2)}};
  auto o = orbit(S, P);
  CHECK(o.size() == 8);
  for (auto g : GammaElement::all()) CHECK(orbit(S, gamma_act(S, g, P)) == o);
  // x1 = 0, x2 at infinity, x3 free
  XPoint Q{{A(0, 1), QuarticPoint::at_infinity(1), A(1, 2)}};
  REQUIRE(on_surface(S, Q));
  CHECK_FALSE(Q.is_affine());
  CHECK(orbit(S, Q).size() == 8);
  // the free factor may sit at a vertex too
  XPoint V{{A(0, 1), QuarticPoint::at_infinity(1), A(0, 2)}};
  REQUIRE(on_surface(S, V));
  CHECK(orbit(S, V).size() == 8);
}

TEST_CASE("hexagon") {
  auto hex = hexagon(fixture::ex1());
  REQUIRE(hex.size() == 6);
  WeierstrassCurve plus{0, 1, 0}, minus{0, -1, 0};
  std::vector<WeierstrassCurve> want{plus, plus, minus, minus, plus, plus};
  for (std::size_t i = 0; i < 6; ++i) CHECK(hex[i].model == want[i]);
  CHECK(hex[0].side == HexSide::E1_t3);
  CHECK(hex[4].side == HexSide::E3_t2);
  CHECK(hex[4].model == jacobian(fixture::ex1().curves[2], fixture::ex1().curves[1].t));
  // adjacency is a 6-cycle and each edge carries one vertex type on both ends
  auto find = [&](HexSide s) {
    return *std::find_if(hex.begin(), hex.end(), [&](const HexagonCurve& h) { return h.side == s; });
  };
  std::set<HexSide> seen;
  HexSide cur = HexSide::E1_t3;
  for (int i = 0; i < 6; ++i) {
    seen.insert(cur);
    HexagonCurve h = find(cur);
    HexagonCurve n = find(h.next);
    CHECK(n.prev == cur);
    CHECK(n.shared_prev == h.shared_next);
    CHECK(h.shared_prev != h.shared_next);
    cur = h.next;
  }
  CHECK(cur == HexSide::E1_t3);
  CHECK(seen.size() == 6);
  CHECK(find(HexSide::E1_t3).next == HexSide::E2_r1);
  CHECK(find(HexSide::E1_t3).shared_next == Vertex::Identity);
  CHECK(find(HexSide::E2_r1).shared_next == Vertex::Origin);
  CHECK(hex_side_from_string("E3 by r2") == HexSide::E3_r2);
  CHECK_THROWS_AS(hex_side_from_string("E4 by r2"), DomainError);
}

TEST_CASE("fiber models") {
  FiberModels f = fiber_models(fixture::ex3(), 2, 1);
  CHECK(f.factors == std::array<int, 2>{1, 3});
  // x (2x^2 + x + 1)(4x^2 - x + 1) = 8x^5 + 2x^4 + 5x^3 + x
  CHECK(f.curveF.coeffs == std::vector<Rational>{0, 1, 0, 5, 2, 8, 0});
  CHECK(f.curveE.coeffs == std::vector<Rational>{1, 0, 5, 2, 8});
  std::vector<Rational> qa{f.first[2], 0, f.first[1], 0, f.first[0]};
  std::vector<Rational> qb{f.second[2], 0, f.second[1], 0, f.second[0]};
  for (Rational x : {Rational(0), Rational(1), frac(-3, 2), frac(5, 7)})
    CHECK(evaluate(f.curveD.coeffs, x) == evaluate(qa, x) * evaluate(qb, x));
  FiberModels g = fiber_models(fixture::ex4(), 3, 1);
  CHECK(g.second == g.first);
  CHECK_THROWS_AS(fiber_models(fixture::ex3(), 2, 0), DomainError);
  CHECK_THROWS_AS(fiber_models(fixture::ex3(), 4, 1), DomainError);
}

TEST_CASE("fiber types") {
  CHECK(fiber_type(fixture::ex4(), 3, 1) == FiberType::SplitTwoElliptic);
  CHECK(fiber_type(fixture::ex4(), 3, -1) == FiberType::SplitTwoElliptic);
  // Res(A(x^2), B(x^2)) = Res(A, B)^2 with Res(2X^2+X+1, 4X^2-X+1) = 16
  FiberModels f = fiber_models(fixture::ex3(), 2, 1);
  CHECK(quartic_resultant(f.first, f.second) == 256);
  CHECK(fiber_type(fixture::ex3(), 2, 1) == FiberType::SmoothGenus5);
  // common root without proportionality
  BurniatSurface S{{QuarticCurve{1, -3, 2}, QuarticCurve{1, 0, 1}, QuarticCurve{1, -3, 2}}, 1};
  CHECK(fiber_type(S, 2, 1) == FiberType::Genus3TwoNodes);
  CHECK_THROWS_AS(fiber_type(S, 2, 0), DomainError);
}

TEST_CASE("property: sigma identity") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    BurniatSurface S = oracle::random_surface(rng, 20, false);
    Rational prod = 1;
    for (const auto& e : S.curves) prod *= e.s * e.s - Rational(4) * e.r * e.t;
    CHECK(sigma_discriminant(sigma(S)) == prod);
  }
}

TEST_CASE("property: D symmetries") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    BurniatSurface S = oracle::random_surface(rng, 9, false);
    Rational D = discriminant_D(S);
    CHECK(discriminant_D(rotate(S)) == D);
    CHECK(sigma(rotate(S)) == sigma(S));
    BurniatSurface tau = S;
    for (auto& e : tau.curves) std::swap(e.r, e.t);
    tau.c = Rational(1) / S.c;
    CHECK(discriminant_D(tau).is_zero() == D.is_zero());
  }
  for (int i = 0; i < 20; ++i) CHECK(discriminant_D(oracle::random_singular_surface(rng)) == 0);
}

TEST_CASE("property: gamma preserves the surface, orbits have 8 points") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto [S, P] = oracle::random_surface_with_point(rng);
    REQUIRE(on_surface(S, P));
    for (auto g : GammaElement::all()) CHECK(on_surface(S, gamma_act(S, g, P)));
    CHECK(orbit(S, P).size() == 8);
  }
}

TEST_CASE("property: resultant agrees with the quadratic closed form") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 100; ++i) {
    std::array<Rational, 3> a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    if (a[0].is_zero() || b[0].is_zero()) continue;
    // A = a0 X^2 + a1 X + a2, B likewise
    Rational res2 = (a[0] * b[2] - a[2] * b[0]) * (a[0] * b[2] - a[2] * b[0]) -
                    (a[0] * b[1] - a[1] * b[0]) * (a[1] * b[2] - a[2] * b[1]);
    CHECK(quartic_resultant(a, b) == res2 * res2);
  }
}

TEST_CASE("property: split fibers have zero resultant; generic fibers are smooth") {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<long> xd(1, 9);
  int smooth = 0;
  for (int i = 0; i < 50; ++i) {
    BurniatSurface S = oracle::random_surface(rng, 20, true);
    for (int j = 1; j <= 3; ++j) {
      Rational x0(Integer(xd(rng)), Integer(xd(rng)));
      FiberModels f = fiber_models(S, j, x0);
      FiberType t = fiber_type(S, j, x0);
      if (t == FiberType::SplitTwoElliptic) CHECK(quartic_resultant(f.first, f.second) == 0);
      if (t == FiberType::SmoothGenus5) ++smooth;
    }
  }
  CHECK(smooth >= 140);
}
