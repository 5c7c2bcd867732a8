#pragma once

// Combines several congruence conditions, each guarding its own coprime
// modulus, into one statement over the product modulus.  With pairwise
// coprime moduli r_i, coefficients a_i coprime to their r_i, and
// R = prod r_i, the conditions c_i == 0 (mod r_i) hold simultaneously
// exactly when
//
//     X = sum_i a_i c_i (R / r_i) == 0 (mod R)
//
// because each summand vanishes mod r_j for j != i and a_i (R/r_i) is
// invertible mod r_i.  The same X supports three presentations: the weighted
// sum itself, the sum divided through by any divisor D of R, and the purely
// rational statement sum a_i c_i / r_i being an integer.

#include <optional>
#include <vector>

#include "simulprime/criteria.hpp"
#include "simulprime/numkernel.hpp"

namespace simulprime {

// A congruence condition tied to the tuple members it certifies.
struct GroupCondition {
  std::vector<Natural> targets;  // nonempty, each >= 2
  Int a;                         // combination coefficient
  CongruenceCondition cond;
};

// Validates targets (nonempty, each >= 2).
GroupCondition make_group(std::vector<Natural> targets, Int a,
                          CongruenceCondition cond);

enum class CombineReason {
  ok,
  not_coprime_targets,
  not_coprime_moduli,
  coefficient_not_coprime,
};

const char* to_string(CombineReason reason);

// How the combined statement is presented.
struct CombinedForm {
  enum class Kind { weighted_sum, divisor, integer_sum };

  Kind kind = Kind::weighted_sum;
  Natural D = 1;  // meaningful for Kind::divisor only

  static CombinedForm weighted();
  static CombinedForm with_divisor(Natural divisor);
  static CombinedForm integer_sum();
};

struct CombinedVerdict {
  bool holds = false;        // preconditions ok and X == 0 (mod R)
  Residue witness;           // X mod R
  Natural modulus_shown;     // R, R/D, or 1 for the integer-sum view
  std::optional<Natural> shown_value;  // X/D when the divisor view applies
  CombineReason reason = CombineReason::ok;

  CombinedVerdict() : witness(0, 1), modulus_shown(1) {}
};

// Checks the hypotheses the equivalence needs: all targets pairwise coprime,
// all moduli pairwise coprime, every a_i coprime to its r_i.  Returns the
// first failure found, or ok.  Throws EmptyInput on an empty list.
CombineReason check_preconditions(const std::vector<GroupCondition>& groups);

// Evaluates X and packages the verdict for the requested presentation.  The
// witness is always X mod R; a failed precondition forces holds = false but
// still reports the numbers.  Throws DivisorInvalid when a divisor view names
// a D < 1 or one that does not divide R.
CombinedVerdict combine(const std::vector<GroupCondition>& groups,
                        const CombinedForm& form);

// The combined statement re-expressed as a single condition over modulus R,
// usable as input to a further combine.
GroupCondition combine_as_group(const std::vector<GroupCondition>& groups,
                                const CombinedForm& form);

// sum a_i c_i / r_i as an exact rational: integer_part is the truncated
// quotient, is_integer tells whether the sum had denominator 1.
struct IntegerSumWitness {
  Int integer_part;
  bool is_integer = false;
};

IntegerSumWitness integer_sum_witness(const std::vector<GroupCondition>& groups);

// Simionov conditions for several p with matching k (a_i = 1 throughout).
std::vector<GroupCondition> simionov_groups(const std::vector<Natural>& ps,
                                            const std::vector<Natural>& ks);

// The four presentations of "p_1 .. p_n simultaneously prime" built from
// simionov conditions:
//   form_T: weighted sum over R = prod p_i
//   form_U: divided through by prod of the p_i after position s
//   form_V: divided through by everything except p_j
//   form_W: rational integrality statement
CombinedVerdict form_T(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks);
CombinedVerdict form_U(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks, std::size_t s);
CombinedVerdict form_V(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks, std::size_t j);
CombinedVerdict form_W(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks);

}  // namespace simulprime
