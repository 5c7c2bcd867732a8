#pragma once

// Single-modulus factorial congruences that each characterise primality of
// one target.  Every producer returns the condition value reduced into
// [0, r) together with the verdict "value == 0 (mod r)".

#include "simulprime/numkernel.hpp"

namespace simulprime {

// One congruence c == 0 (mod r).  holds is derived from c and r at
// construction; c is stored canonically reduced when produced by the
// criterion functions below, but make_condition accepts any integer c.
struct CongruenceCondition {
  Int c;
  Natural r;
  bool holds = false;
};

// Computes holds = (c == 0 mod r).  Throws ZeroModulus for r < 1.
CongruenceCondition make_condition(Int c, Natural r);

// (p-k)! (k-1)! - (-1)^k == 0 (mod p), valid for 2 <= p, 1 <= k <= p.
// Characterises primality of p for every k in that range.
CongruenceCondition simionov(const Natural& p, const Natural& k);

// (p-1)! + 1 == 0 (mod p); the k = 1 instance of simionov.
CongruenceCondition wilson(const Natural& p);

// (p-2)! - 1 == 0 (mod p); the k = 2 instance up to sign normalisation.
CongruenceCondition leibniz(const Natural& p);

// (p-3)! - (p-1)/2 == 0 (mod p) for odd p >= 3.
CongruenceCondition smarandache_factorial(const Natural& p);

// floor((p+1)/2): the k that splits the two factorials most evenly and
// roughly halves the work of the k = 1 form.
Natural balanced_k(const Natural& p);

// (-1)^d d! (p-1)! + 1 == 0 (mod p+d): primality of p+d expressed through
// (p-1)!.  d = 0 recovers wilson(p).  Requires p >= 1, d >= 0, p+d >= 2.
CongruenceCondition offset_wilson(const Natural& p, const Natural& d);

// Exact (unreduced) condition value of offset_wilson, for integrality
// witnesses.  Factorials respect the cap.
Int offset_wilson_value(const Natural& p, const Natural& d,
                        const Natural& cap);

}  // namespace simulprime
