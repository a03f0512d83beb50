#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "burniat/errors.hpp"

namespace burniat {

using Integer = mpz_class;

// Exact rational in lowest terms, denominator positive.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<I>)
      q_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
    else
      q_ = mpq_class(mpz_class(static_cast<long>(n)));
  }
  Rational(const Integer& n) : q_(n) {}          // NOLINT(google-explicit-constructor)
  template <class U>
  Rational(const __gmp_expr<mpz_t, U>& e) : q_(Integer(e)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  // Accepts "p", "-p", "p/q" with optional surrounding blanks.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

Rational abs(const Rational& q);
// Integer power; negative exponents need q != 0.
Rational pow(const Rational& q, int e);

// Sorted, duplicate-free list of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<Integer> primes);  // validates primality

  const std::vector<Integer>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  bool contains(const Integer& p) const;
  PrimeSet unite(const PrimeSet& other) const;
  std::string str() const;  // "{2, 3, 5}"
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<Integer> primes_;
};

struct FactorOptions {
  unsigned long trial_bound = 1UL << 20;
};

// |n| factored into (prime, exponent) pairs, ascending. n != 0.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n, const FactorOptions& opt = {});
bool is_prime(const Integer& n);
// v_p(n); n != 0.
int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

Integer squarefree_part(const Rational& q);
PrimeSet prime_support(const Rational& q);
bool is_squarefree(const Integer& n);
bool is_square(const Rational& q);
std::optional<Rational> exact_sqrt(const Rational& q);
Integer isqrt(const Integer& n);

// coeffs in ascending degree order.
std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs);
Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x);

// Common denominator of a list (lcm of denominators), positive.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace burniat
