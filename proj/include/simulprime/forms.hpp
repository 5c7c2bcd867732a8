#pragma once

// Uniform registry over all characterisations: single-number criteria, the
// named constellation forms, and the combined-sum recipes.  Everything is
// addressed by a stable string id so the CLI, scanner, and verifier treat
// them interchangeably.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simulprime/numkernel.hpp"
#include "simulprime/tuple_pattern.hpp"

namespace simulprime {

// Verdict of one form at one base.  residue is the final congruence value
// when the form has one to show; reason records why a verdict is false for
// structural causes ("not-coprime-targets", gate failures) as opposed to a
// plain nonzero residue.
struct FormVerdict {
  bool holds = false;
  std::optional<Residue> residue;
  std::string reason = "ok";
};

// A bound, ready-to-evaluate form.
struct Form {
  std::string id;        // canonical id, e.g. "simionov:4" or "twin-a"
  std::string kind;      // "criterion" | "constellation" | "combined"
  TuplePattern pattern;  // offsets certified prime when the verdict is true

  // total over in_domain bases; throws DomainError outside
  std::function<FormVerdict(const Natural&)> eval;
  std::function<bool(const Natural&)> in_domain;

  // exact value behind the verdict (condition value or integer sum), gated
  // by the factorial cap; absent for forms without a useful exact witness
  std::function<std::optional<Int>(const Natural& base, const Natural& cap)>
      exact_witness;
};

// Parameters that id strings may need: k for the parametrised criteria and
// pairs, d for an explicit divisor, pattern for the combined recipes.
struct FormOptions {
  std::optional<Natural> k;
  std::optional<Natural> d;
  std::optional<TuplePattern> pattern;
};

// Binds an id like "wilson", "simionov:4", "pair-s:2", "quad", "U:2" or
// "divisor:35" (an optional "named:" prefix is accepted) to an evaluator.
// Throws UnknownForm for unrecognised ids, DomainError for missing or bad
// parameters.
Form make_form(const std::string& id, const FormOptions& opts = {});

// Static registry row for listings.
struct FormFamily {
  const char* id;
  const char* kind;
  const char* pattern;
  const char* domain;
  const char* source;
};

// All form families in fixed order.
const std::vector<FormFamily>& form_families();

// One verdict-true base found by scan.
struct ScanHit {
  Natural base;
  FormVerdict verdict;
};

// All bases in [lo, hi] inside the form's domain where the verdict is true,
// ascending.  Workers split the range into contiguous chunks and results are
// merged in order, so output is identical for any job count.  Throws
// BadRange when hi < lo.
std::vector<ScanHit> scan(const Form& form, const Natural& lo,
                          const Natural& hi, unsigned jobs = 1);

}  // namespace simulprime
