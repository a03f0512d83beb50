#include <random>

#include "burniat/moduli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace burniat;

namespace {

Rational frac(long a, long b) { return Rational(Integer(a), Integer(b)); }

}  // namespace

TEST_CASE("moduli points of the fixtures") {
  CHECK(moduli_point(fixture::ex4()) == ModuliPoint{2, frac(5, 4), frac(1, 4), 0, 4, -1});
  CHECK(moduli_point(fixture::ex1()) == ModuliPoint{0, 0, 0, 0, frac(-225, 16), 0});
  CHECK(moduli_point(fixture::ex2()) == ModuliPoint{0, -4, 0, 16, 0, 0});
  BurniatSurface S = fixture::ex1();
  S.c = 1;
  CHECK_THROWS_AS(moduli_point(S), DomainError);
}

TEST_CASE("validate_moduli") {
  CHECK(validate_moduli(moduli_point(fixture::ex4())));
  CHECK(validate_moduli(ModuliPoint{0, -4, 0, 16, 0, 0}));
  CHECK_FALSE(validate_moduli(ModuliPoint{0, 0, 0, 1, 4, 0}));
}

TEST_CASE("strata") {
  StrataFlags f1 = strata(moduli_point(fixture::ex1()));
  CHECK(f1.M2);
  CHECK(f1.M4);
  CHECK(f1.N1);
  CHECK_FALSE(f1.M1);
  CHECK_FALSE(f1.M3);
  CHECK_FALSE(f1.N2.has_value());
  StrataFlags f = strata(ModuliPoint{36, 0, 0, 0, 4, 0});
  REQUIRE(f.N2.has_value());
  CHECK(*f.N2 == 1);
  StrataFlags f2 = strata(moduli_point(fixture::ex2()));
  CHECK(f2 == StrataFlags{false, false, true, false, false, std::nullopt});
  StrataFlags f4 = strata(moduli_point(fixture::ex4()));
  CHECK(f4 == StrataFlags{true, false, false, false, true, std::nullopt});
  CHECK(to_string(f4) == "M1, N1");
  CHECK_THROWS_AS(strata(ModuliPoint{0, 0, 0, 1, 4, 0}), DomainError);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(StrataFlags{}) == "C2^2");
  CHECK(automorphism_group(strata(moduli_point(fixture::ex1()))) == "(C4 wr C3)/C4");
  CHECK(automorphism_group(strata(moduli_point(fixture::ex2()))) == "C2^3");
  CHECK(automorphism_group(StrataFlags{true, true, false, true, true, std::nullopt}) == "((C4 wr C3)/C4) : C2");
  CHECK(automorphism_group(StrataFlags{false, false, false, true, true, std::nullopt}) == "A4");
  CHECK(automorphism_group(StrataFlags{true, false, false, true, true, std::nullopt}) == "C2xA4");
  CHECK(automorphism_group(StrataFlags{false, true, true, false, true, std::nullopt}) == "C2xD4");
  CHECK_THROWS_AS(automorphism_group(StrataFlags{true, false, true, false, false, std::nullopt}), DomainError);
  CHECK_THROWS_AS(automorphism_group(StrataFlags{false, false, false, true, false, std::nullopt}), DomainError);
}

TEST_CASE("census and genericity") {
  CHECK(census(fixture::ex4()) == CensusCounts{6, 1, 0});
  CHECK(census(fixture::ex3()) == CensusCounts{6, 0, 0});
  CHECK(census(fixture::ex1()) == CensusCounts{6, 6, 0});
  CHECK(census(fixture::ex2()) == CensusCounts{6, 0, 0});
  CHECK(is_generic(fixture::ex2()));
  CHECK_FALSE(is_generic(fixture::ex4()));
  CHECK_FALSE(is_generic(fixture::ex1()));
  CHECK(is_generic(fixture::ex3()));
}

TEST_CASE("N2 parameterization") {
  CHECK(n2_point(1) == ModuliPoint{36, 0, 0, 0, 4, 0});
  CHECK(n2_point(3) == ModuliPoint{frac(76, 9), frac(-752, 27), frac(1600, 81), 0, 4, frac(-80, 9)});
  CHECK_THROWS_AS(n2_point(0), DomainError);
}

TEST_CASE("property: random smooth surfaces give valid moduli points") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    BurniatSurface S = oracle::random_surface(rng, 12, true);
    ModuliPoint P = moduli_point(S);
    CHECK(validate_moduli(P));
    // (4 - a1^2)(4 - a2^2)(4 - a3^2)
    Rational prod = 1;
    for (const auto& e : S.curves) prod *= Rational(4) - a_squared(e);
    CHECK(second_inequality(P) == prod);
  }
}

TEST_CASE("property: first inequality vanishes exactly when D does") {
  std::mt19937_64 rng(32);
  int singular = 0;
  for (int i = 0; i < 100; ++i) {
    BurniatSurface S = oracle::random_surface(rng, 12, true);
    CHECK(!first_inequality(moduli_formulas(S)).is_zero());
  }
  for (int i = 0; i < 20; ++i) {
    BurniatSurface S = oracle::random_singular_surface(rng);
    REQUIRE(discriminant_D(S) == 0);
    ++singular;
    CHECK(first_inequality(moduli_formulas(S)).is_zero());
  }
  CHECK(singular == 20);
}

TEST_CASE("property: N2 parameterization round trip") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> n(-40, 40), d(1, 12);
  int recovered = 0;
  for (int i = 0; i < 50; ++i) {
    long a = n(rng);
    if (a == 0) a = 7;
    Rational t(Integer(a), Integer(d(rng)));
    ModuliPoint P = n2_point(t);
    CHECK(satisfies_moduli_equations(P));
    CHECK(P.u3 * P.v == P.w * P.w);
    if (!validate_moduli(P)) continue;
    StrataFlags F = strata(P);
    REQUIRE(F.N2.has_value());
    CHECK(n2_point(*F.N2) == P);
    ++recovered;
  }
  CHECK(recovered >= 45);
}

TEST_CASE("property: permutation behaviour") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 50; ++i) {
    BurniatSurface S = oracle::random_surface(rng, 12, true);
    BurniatSurface cyc{{S.curves[1], S.curves[2], S.curves[0]}, S.c};
    BurniatSurface swp{{S.curves[1], S.curves[0], S.curves[2]}, S.c};
    ModuliPoint P = moduli_point(S), Pc = moduli_point(cyc), Ps = moduli_point(swp);
    CHECK(Pc == P);
    CHECK(Ps.d == -P.d);
    Ps.d = P.d;
    CHECK(Ps == P);
    CHECK(census(swp).typeI == census(S).typeI);
  }
  // typeI invariance on a degenerate family
  BurniatSurface T{{QuarticCurve{2, 1, 1}, QuarticCurve{1, 1, 2}, QuarticCurve{1, 5, 1}}, 3};
  REQUIRE(is_smooth_surface(T));
  int base = census(T).typeI;
  CHECK(base == 1);
  CHECK(census(BurniatSurface{{T.curves[2], T.curves[0], T.curves[1]}, T.c}).typeI == base);
  CHECK(census(BurniatSurface{{T.curves[0], T.curves[2], T.curves[1]}, T.c}).typeI == base);
}
