#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace coxrep {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing |n| (n != 0).
inline std::int64_t p_part(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("p_part of zero");
  if (n < 0) n = -n;
  std::int64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t prime) {
  return powmod(a, prime - 2, prime);
}

/// Least primitive root modulo a prime.
inline std::uint64_t primitive_root(std::uint64_t prime) {
  if (prime == 2) return 1;
  auto factors = prime_factors(static_cast<std::int64_t>(prime - 1));
  for (std::uint64_t g = 2; g < prime; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (powmod(g, (prime - 1) / static_cast<std::uint64_t>(f), prime) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace coxrep
