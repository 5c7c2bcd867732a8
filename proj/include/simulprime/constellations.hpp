#pragma once

// Characterisations of small prime constellations: twin pairs, distance-k
// pairs, quadruplets, and two flavours of triples.  Each is a single
// arithmetic statement equivalent to "all tuple members are prime".

#include <optional>

#include "simulprime/combinator.hpp"
#include "simulprime/criteria.hpp"
#include "simulprime/numkernel.hpp"

namespace simulprime {

// 4[(p-1)! + 1] + p == 0 (mod p(p+2)): p and p+2 both prime.  Odd p >= 3.
CongruenceCondition clement(const Natural& p);

// (p-1)!(3p+2) + 2p + 2 == 0 (mod p(p+2)): same tuple, different weights.
CongruenceCondition twin_a(const Natural& p);

// (p-1)!(p-2) - 2 == 0 (mod p(p+2)).
CongruenceCondition twin_b(const Natural& p);

// [(p-1)! + 1]/p + [(p+1)! + 1]/(p+2) is an integer: the rational twin-pair
// statement, evaluated through the combined-sum machinery.
CombinedVerdict twin_sum(const Natural& p);

// (p-1)!(p+k) + (p+k-1)!p + 2p + k == 0 (mod p(p+k)): p and p+k both prime.
// Requires p >= 2 and gcd(p, p+k) = 1.
CongruenceCondition pair_smarandache(const Natural& p, const Natural& k);

// k k![(p-1)! + 1] + [k! - (-1)^k]p == 0 (mod p(p+k)): same tuple via a
// Wilson shift.  Same domain as pair_smarandache.
CongruenceCondition pair_cucurezeanu(const Natural& p, const Natural& k);

// Sum over d in {0,2,6,8} of [(p+d-1)! + 1]/(p+d) is an integer: the
// quadruplet p, p+2, p+6, p+8.  Odd p >= 3.
CombinedVerdict quadruplet(const Natural& p);

// Verdict for the triple characterisations, whose statements have explicit
// divisibility gates in front of a final congruence.
struct TripleVerdict {
  bool holds = false;
  std::optional<Residue> residue;  // final congruence residue when reached
  std::string reason = "ok";       // "ok" or the gate that failed
};

// p-2, p, p+4 all prime (p >= 5):
//   (p-2) | (p-3)!+1,  (p+4) | (p+3)!+1,  and with the quotients q1, q2
//   (p-1)! + p q1 + p q2 == -1 (mod p).
// The p q_i terms vanish mod p, so after the gates this is Wilson at p.
TripleVerdict triple_smarandache(const Natural& p);

// p-2, p, p+4 all prime (p >= 5):
//   8 floor((p+3)!/(p+4)) + 4 floor((p-3)!/(p-2)) == -11 (mod p).
// Same tuple as triple_smarandache, so the two agree at every p.
TripleVerdict triple_patrizio(const Natural& p);

// Exact witnesses for the integrality and triple statements, factorials
// gated by cap.
IntegerSumWitness twin_sum_witness(const Natural& p, const Natural& cap);
IntegerSumWitness quadruplet_witness(const Natural& p, const Natural& cap);

// Exact left-hand side (p-1)! + p q1 + p q2; nullopt when a gate fails and
// the quotients are not integers.
std::optional<Int> triple_smarandache_witness(const Natural& p,
                                              const Natural& cap);

// Exact 8 floor((p+3)!/(p+4)) + 4 floor((p-3)!/(p-2)).
Int triple_patrizio_witness(const Natural& p, const Natural& cap);

}  // namespace simulprime
