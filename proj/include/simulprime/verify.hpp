#pragma once

// Cross-checks a characterisation against the independent primality oracle
// over a base range and reports every disagreement.

#include <vector>

#include "simulprime/forms.hpp"
#include "simulprime/oracle.hpp"

namespace simulprime {

struct Mismatch {
  Natural base;
  bool form_verdict = false;
  bool oracle_verdict = false;
};

struct VerificationReport {
  std::string form_id;
  TuplePattern pattern;
  Natural lo;
  Natural hi;
  unsigned long checked = 0;  // bases inside the form's domain
  std::vector<Mismatch> mismatches;
  double elapsed_ms = 0.0;
  unsigned jobs = 1;

  bool ok() const { return mismatches.empty(); }
};

// Evaluates the form and the oracle at every in-domain base in [lo, hi].
// Same contiguous-chunk partition as scan, so mismatch order is ascending
// and independent of job count.  Throws BadRange when hi < lo.
VerificationReport verify_equivalence(
    const Form& form, const Natural& lo, const Natural& hi, unsigned jobs = 1,
    PrimalityMethod method = PrimalityMethod::trial_division);

}  // namespace simulprime
