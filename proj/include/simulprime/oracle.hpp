#pragma once

// Independent primality answers used to cross-check the factorial-based
// characterisations.  Nothing in here touches factorials: trial division on a
// 2-3-5 wheel, a deterministic strong-probable-prime battery, and a sieve.

#include <cstdint>
#include <vector>

#include "simulprime/numkernel.hpp"
#include "simulprime/tuple_pattern.hpp"

namespace simulprime {

enum class PrimalityMethod {
  trial_division,  // default: wheel trial division, unconditional
  sprp_battery,    // Miller-Rabin with a fixed base set, deterministic < 2^64
};

// Wheel trial division for machine-word inputs.
bool is_prime_u64(std::uint64_t n);

// Strong-probable-prime test against the fixed bases
// {2,3,5,7,11,13,17,19,23,29,31,37}, a battery known to be exact for all
// n < 2^64.
bool sprp_is_prime_u64(std::uint64_t n);

// Big-int entry point.  n < 2 (including negatives) is not prime.  Throws
// OutOfRange for n >= 2^64; both methods here are word-sized by design.
bool is_prime(const Natural& n,
              PrimalityMethod method = PrimalityMethod::trial_division);

// True when base + offset is prime for every offset in the pattern.
bool tuple_is_prime(const Natural& base, const TuplePattern& pattern,
                    PrimalityMethod method = PrimalityMethod::trial_division);

// Bitmap of primality for 0..limit inclusive.
std::vector<bool> prime_sieve(std::uint64_t limit);

}  // namespace simulprime
