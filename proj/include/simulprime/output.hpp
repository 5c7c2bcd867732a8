#pragma once

// Rendering of verdicts, verification reports, benchmark rows, and the
// registry listing as aligned tables, JSON lines, or CSV.  All big integers
// serialise as decimal strings; all numeric formatting is locale-free so
// identical inputs yield identical bytes.

#include <optional>
#include <string>
#include <vector>

#include "simulprime/forms.hpp"
#include "simulprime/verify.hpp"

namespace simulprime {

enum class OutputFormat { table, json, csv };

// Accepts "table", "json", "csv"; throws DomainError otherwise.
OutputFormat parse_format(const std::string& name);

// One evaluated base, flattened for emission.
struct OutputRecord {
  Natural base;
  std::vector<Natural> targets;
  std::string form_id;
  bool verdict = false;
  std::optional<Residue> residue;
  std::string reason = "ok";
  std::optional<Int> witness;
};

// Builds the record for a verdict at a base (targets from the form pattern).
OutputRecord record_for(const Form& form, const Natural& base,
                        const FormVerdict& verdict);

// CSV columns: p,targets,form,verdict,residue,modulus,reason (header always
// present, targets semicolon-joined).  JSON: one object per record per line.
std::string render_records(const std::vector<OutputRecord>& records,
                           OutputFormat format);

std::string render_report(const VerificationReport& report,
                          OutputFormat format);

struct BenchRow {
  std::string form_id;
  Natural lo;
  Natural hi;
  unsigned long candidates = 0;  // in-domain bases examined
  unsigned long hits = 0;        // verdict-true bases
  double form_ms = 0.0;          // characterisation sweep
  double sieve_ms = 0.0;         // sieve-oracle baseline on the same range
};

// Includes the cost ratio per row; the characterisations are expected to
// lose to the sieve, the point is by how much.
std::string render_bench(const std::vector<BenchRow>& rows,
                         OutputFormat format);

std::string render_families(const std::vector<FormFamily>& families,
                            OutputFormat format);

}  // namespace simulprime
