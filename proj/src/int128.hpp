#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>

namespace burniat {

inline __int128 to_i128(const mpz_class& z) {
  mpz_class a = abs(z);
  unsigned __int128 lo = mpz_getlimbn(a.get_mpz_t(), 0);
  unsigned __int128 hi = mpz_size(a.get_mpz_t()) > 1 ? mpz_getlimbn(a.get_mpz_t(), 1) : 0;
  __int128 v = static_cast<__int128>((hi << 64) | lo);
  return sgn(z) < 0 ? -v : v;
}

inline mpz_class from_u128(unsigned __int128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64)), lo(static_cast<unsigned long>(v));
  return (hi << 64) + lo;
}

namespace detail {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> t{};
  for (unsigned i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}

}  // namespace detail

// Exact square root test for v >= 0.
inline bool square_root_i128(__int128 v, unsigned __int128& root) {
  static constexpr auto q64 = detail::square_residues<64>();
  static constexpr auto q63 = detail::square_residues<63>();
  static constexpr auto q65 = detail::square_residues<65>();
  static constexpr auto q11 = detail::square_residues<11>();
  if (v < 0) return false;
  if (v == 0) {
    root = 0;
    return true;
  }
  unsigned __int128 u = static_cast<unsigned __int128>(v);
  if (!q64[static_cast<unsigned>(u & 63)]) return false;
  if (!q63[static_cast<unsigned>(u % 63)] || !q65[static_cast<unsigned>(u % 65)] ||
      !q11[static_cast<unsigned>(u % 11)])
    return false;
  unsigned __int128 r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(u)));
  while (r * r > u) --r;
  while ((r + 1) * (r + 1) <= u) ++r;
  root = r;
  return r * r == u;
}

}  // namespace burniat
