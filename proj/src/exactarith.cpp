#include "burniat/exactarith.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace burniat {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };
  std::string_view body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body));
  Integer n = parse_int(body.substr(0, slash));
  Integer d = parse_int(body.substr(slash + 1));
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::str() const { return q_.get_str(10); }

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}
Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, int e) {
  if (e < 0) return Rational(1) / pow(q, -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

// ---- primes and factoring ----

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // GMP 6.2+ runs Baillie-PSW first; no counterexample is known and none exists below 2^64.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Integer rho_factor(const Integer& n) {
  // Brent's variant of Pollard rho. n odd composite.
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split(root, out);
    split(root, out);
    return;
  }
  Integer d = rho_factor(n);
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n_in, const FactorOptions& opt) {
  if (n_in == 0) throw DomainError("factorize: zero");
  Integer n = abs(n_in);
  std::map<Integer, unsigned> found;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++found[Integer(p)];
    }
  };
  strip(2);
  strip(3);
  for (unsigned long p = 5; p <= opt.trial_bound; p += 6) {
    if (Integer(p) * p > n) break;
    strip(p);
    strip(p + 2);
  }
  if (n > 1) {
    if (Integer(opt.trial_bound) * opt.trial_bound >= n)
      ++found[n];  // no factor up to sqrt(n)
    else
      split(n, found);
  }
  return {found.begin(), found.end()};
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& q, const Integer& p) {
  if (q.is_zero()) throw DomainError("valuation of zero");
  return valuation(q.num(), p) - valuation(q.den(), p);
}

PrimeSet::PrimeSet(std::vector<Integer> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes)
    if (!is_prime(p)) throw DomainError("not a prime: " + p.get_str());
  primes_ = std::move(primes);
}

bool PrimeSet::contains(const Integer& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
  std::vector<Integer> all = primes_;
  all.insert(all.end(), other.primes_.begin(), other.primes_.end());
  return PrimeSet(std::move(all));
}

std::string PrimeSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ", ";
    s += primes_[i].get_str();
  }
  return s + "}";
}

// ---- squares ----

Integer squarefree_part(const Rational& q) {
  if (q.is_zero()) throw DomainError("squarefree_part of zero");
  // q/e is a square iff num*den/e is, so work with num*den.
  Integer prod = q.num() * q.den();
  Integer e = q.sign();
  for (const auto& [p, k] : factorize(prod))
    if (k % 2) e *= p;
  return e;
}

PrimeSet prime_support(const Rational& q) {
  if (q.is_zero()) throw DomainError("prime_support of zero");
  std::vector<Integer> ps;
  for (const auto& [p, k] : factorize(q.num())) ps.push_back(p);
  for (const auto& [p, k] : factorize(q.den())) ps.push_back(p);
  return PrimeSet(std::move(ps));
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& [p, k] : factorize(n))
    if (k > 1) return false;
  return true;
}

bool is_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.num().get_mpz_t()) && mpz_perfect_square_p(q.den().get_mpz_t());
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (!is_square(q)) return std::nullopt;
  return Rational(isqrt(q.num()), isqrt(q.den()));
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// ---- polynomials ----

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, k] : factorize(n)) {
    std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs_in) {
  std::vector<Integer> c = coeffs_in;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() > 1) {
    Integer g = 0;
    for (const auto& a : c) g = gcd(g, a);
    std::vector<Rational> poly;
    for (auto& a : c) {
      a /= g;
      poly.emplace_back(a);
    }
    for (const auto& num : divisors(c.front()))
      for (const auto& den : divisors(c.back()))
        for (int s : {1, -1}) {
          if (gcd(num, den) != 1) continue;
          Rational x(Integer(s * num), den);
          if (evaluate(poly, x).is_zero()) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm(l, v.den());
  return l;
}

}  // namespace burniat
