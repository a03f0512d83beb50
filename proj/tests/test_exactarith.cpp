#include <random>

#include "burniat/exactarith.hpp"
#include "doctest.h"

using namespace burniat;

TEST_CASE("rationals stay in lowest terms") {
  Rational q(Integer(6), Integer(-4));
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rational::parse(" -6/4 ") == q);
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("+7/1") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(pow(Rational(Integer(2), Integer(3)), -2) == Rational(Integer(9), Integer(4)));
  CHECK(Rational(1) < Rational(Integer(3), Integer(2)));
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(12) == 3);
  CHECK(squarefree_part(-50) == -2);
  CHECK(squarefree_part(Rational(Integer(9), Integer(4))) == 1);
  CHECK(squarefree_part(Rational(Integer(1), Integer(2))) == 2);
  CHECK_THROWS_AS(squarefree_part(0), DomainError);
}

TEST_CASE("prime_support") {
  CHECK(prime_support(50625) == PrimeSet({3, 5}));
  CHECK(prime_support(1).empty());
  CHECK(prime_support(436) == PrimeSet({2, 109}));
  CHECK(prime_support(Rational(Integer(-9), Integer(14))) == PrimeSet({2, 3, 7}));
  CHECK_THROWS_AS(prime_support(0), DomainError);
  CHECK(PrimeSet({5, 2, 3, 2}).str() == "{2, 3, 5}");
  CHECK_THROWS_AS(PrimeSet({4}), DomainError);
}

TEST_CASE("is_square") {
  CHECK(is_square(Rational(Integer(16), Integer(9))));
  CHECK_FALSE(is_square(-1));
  CHECK_FALSE(is_square(2));
  CHECK(is_square(0));
}

TEST_CASE("rational_roots") {
  auto roots = rational_roots({-1, 0, 1});
  CHECK(roots == std::vector<Rational>{-1, 1});
  // 4(t-1)^2(t+2) = 4t^3 - 12t + 8
  CHECK(rational_roots({8, -12, 0, 4}) == std::vector<Rational>{-2, 1});
  CHECK(rational_roots({1, 0, 1}).empty());
  CHECK(rational_roots({0, 0, -3, 2}) == std::vector<Rational>{0, Rational(Integer(3), Integer(2))});
  CHECK_THROWS_AS(rational_roots({0, 0}), DomainError);
}

TEST_CASE("factorization past the trial bound") {
  // product of two primes near 2^40 forces the rho path with a small trial bound
  Integer p("1099511627791"), q("1099511627803");
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  auto f = factorize(p * q * 12, FactorOptions{100});
  REQUIRE(f.size() == 4);
  CHECK(f[0] == std::pair<Integer, unsigned>(2, 2));
  CHECK(f[1] == std::pair<Integer, unsigned>(3, 1));
  CHECK(f[2].first == p);
  CHECK(f[3].first == q);
  auto g = factorize(p * p, FactorOptions{100});
  REQUIRE(g.size() == 1);
  CHECK(g[0].second == 2);
}

TEST_CASE("properties: squarefree part and squares") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 300);
  for (int i = 0; i < 300; ++i) {
    long n = num(rng);
    if (n == 0) continue;
    Rational q(Integer(n), Integer(den(rng)));
    Integer e = squarefree_part(q);
    CHECK(is_squarefree(e));
    CHECK(is_square(q / Rational(e)));
    CHECK(squarefree_part(e) == e);
    if (q.sign() > 0) CHECK(is_square(q) == (e == 1));
  }
}

TEST_CASE("properties: prime support of coprime products") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(1, 100000);
  int checked = 0;
  while (checked < 100) {
    Integer a = d(rng), b = d(rng);
    if (gcd(a, b) != 1) continue;
    ++checked;
    CHECK(prime_support(a * b) == prime_support(a).unite(prime_support(b)));
  }
}
