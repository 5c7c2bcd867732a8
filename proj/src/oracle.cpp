#include "simulprime/oracle.hpp"

namespace simulprime {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) {
      acc = mulmod(acc, base, m);
    }
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// One strong-probable-prime round for odd n = d * 2^s + 1.
bool sprp_round(std::uint64_t n, std::uint64_t d, unsigned s,
                std::uint64_t a) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    if (n == p) {
      return true;
    }
    if (n % p == 0) {
      return false;
    }
  }
  // candidates coprime to 30, starting from 7
  static constexpr std::uint64_t gaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t d = 7;
  std::size_t g = 0;
  while (d * d <= n) {
    if (n % d == 0) {
      return false;
    }
    d += gaps[g];
    g = (g + 1) & 7;
  }
  return true;
}

bool sprp_is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This battery decides primality exactly for every n < 2^64.
  for (std::uint64_t a :
       {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
        31ull, 37ull}) {
    if (a % n == 0) {
      continue;  // n itself is one of the bases
    }
    if (!sprp_round(n, d, s, a)) {
      return false;
    }
  }
  return true;
}

bool is_prime(const Natural& n, PrimalityMethod method) {
  if (n < 2) {
    return false;
  }
  if (!n.fits_ulong_p()) {
    throw OutOfRange("primality oracle handles n < 2^64, got " + n.get_str());
  }
  const std::uint64_t v = n.get_ui();
  switch (method) {
    case PrimalityMethod::sprp_battery:
      return sprp_is_prime_u64(v);
    case PrimalityMethod::trial_division:
    default:
      return is_prime_u64(v);
  }
}

bool tuple_is_prime(const Natural& base, const TuplePattern& pattern,
                    PrimalityMethod method) {
  for (const Int& off : pattern.offsets()) {
    const Int t = base + off;
    if (t < 2 || !is_prime(Natural(t), method)) {
      return false;
    }
  }
  return true;
}

std::vector<bool> prime_sieve(std::uint64_t limit) {
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = false;
  if (limit >= 1) {
    sieve[1] = false;
  }
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (sieve[i]) {
      for (std::uint64_t j = i * i; j <= limit; j += i) {
        sieve[j] = false;
      }
    }
  }
  return sieve;
}

}  // namespace simulprime
