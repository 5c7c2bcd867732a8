// Command-line front end: check one base, scan or verify a range, benchmark
// characterisations against the sieve, or list the registry.
//
// Exit codes: 0 success / verdict true, 1 verification found mismatches,
// 2 usage or domain error, 3 check verdict false.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "simulprime/forms.hpp"
#include "simulprime/numkernel.hpp"
#include "simulprime/oracle.hpp"
#include "simulprime/output.hpp"
#include "simulprime/verify.hpp"

namespace {

using namespace simulprime;

unsigned default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

Natural parse_natural(const std::string& text, const char* what) {
  Natural v;
  if (text.empty() || v.set_str(text, 10) != 0 || sgn(v) < 0) {
    throw DomainError(std::string(what) + " '" + text +
                      "' must be a nonnegative integer");
  }
  return v;
}

std::pair<Natural, Natural> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    throw DomainError("range '" + text + "' must look like lo..hi");
  }
  return {parse_natural(text.substr(0, pos), "range low end"),
          parse_natural(text.substr(pos + 2), "range high end")};
}

// flag values shared by all subcommands
struct Args {
  std::string form;
  std::string forms;  // bench takes a comma-separated list
  std::string pattern;
  std::string p;
  std::string range;
  std::string k;
  std::string d;
  std::string format = "table";
  unsigned jobs = default_jobs();
  std::string witness_cap = "5000";
};

void add_common_flags(CLI::App* cmd, Args& args) {
  cmd->add_option("--form", args.form, "form id, e.g. wilson or pair-s:2");
  cmd->add_option("--pattern", args.pattern,
                  "tuple offsets for combined forms, e.g. 0,2,6,8");
  cmd->add_option("--p", args.p, "base to check");
  cmd->add_option("--range", args.range, "inclusive base range lo..hi");
  cmd->add_option("--k", args.k, "criterion parameter k");
  cmd->add_option("--d", args.d, "divisor D for the divisor form");
  cmd->add_option("--format", args.format, "output format: table|json|csv");
  cmd->add_option("--jobs", args.jobs, "worker count for scan/verify");
  cmd->add_option("--witness-cap", args.witness_cap,
                  "largest n whose exact n! a witness may use");
}

FormOptions options_from(const Args& args) {
  FormOptions opts;
  if (!args.k.empty()) {
    opts.k = parse_natural(args.k, "k");
  }
  if (!args.d.empty()) {
    opts.d = parse_natural(args.d, "d");
  }
  if (!args.pattern.empty()) {
    opts.pattern = TuplePattern::parse(args.pattern);
  }
  return opts;
}

std::string require_flag(const std::string& value, const char* name) {
  if (value.empty()) {
    throw DomainError(std::string("missing required flag ") + name);
  }
  return value;
}

int run_check(const Args& args) {
  const Form form = make_form(require_flag(args.form, "--form"),
                              options_from(args));
  const Natural p = parse_natural(require_flag(args.p, "--p"), "p");
  const FormVerdict verdict = form.eval(p);

  OutputRecord rec = record_for(form, p, verdict);
  if (form.exact_witness) {
    try {
      rec.witness = form.exact_witness(p, parse_natural(args.witness_cap,
                                                        "witness cap"));
    } catch (const CapExceeded&) {
      // witness would need a factorial beyond the cap; verdict stands alone
    }
  }
  std::cout << render_records({rec}, parse_format(args.format));
  return verdict.holds ? 0 : 3;
}

int run_scan(const Args& args) {
  const Form form = make_form(require_flag(args.form, "--form"),
                              options_from(args));
  const auto [lo, hi] = parse_range(require_flag(args.range, "--range"));
  const std::vector<ScanHit> hits = scan(form, lo, hi, args.jobs);

  std::vector<OutputRecord> records;
  records.reserve(hits.size());
  for (const ScanHit& hit : hits) {
    records.push_back(record_for(form, hit.base, hit.verdict));
  }
  std::cout << render_records(records, parse_format(args.format));
  return 0;
}

int run_verify(const Args& args) {
  const Form form = make_form(require_flag(args.form, "--form"),
                              options_from(args));
  const auto [lo, hi] = parse_range(require_flag(args.range, "--range"));
  const VerificationReport report =
      verify_equivalence(form, lo, hi, args.jobs);
  std::cout << render_report(report, parse_format(args.format));
  return report.ok() ? 0 : 1;
}

int run_bench(const Args& args) {
  const auto [lo, hi] = parse_range(require_flag(args.range, "--range"));
  if (hi < lo) {
    throw BadRange("range " + lo.get_str() + ".." + hi.get_str() +
                   " has hi < lo");
  }
  if (!hi.fits_ulong_p()) {
    throw OutOfRange("bench range end " + hi.get_str() +
                     " too large for the sieve baseline");
  }

  std::vector<std::string> ids;
  std::stringstream in(require_flag(args.forms, "--forms"));
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (!piece.empty()) {
      ids.push_back(piece);
    }
  }
  if (ids.empty()) {
    throw DomainError("--forms needs at least one form id");
  }

  using clock = std::chrono::steady_clock;
  const auto ms_since = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start)
        .count();
  };

  std::vector<BenchRow> rows;
  for (const std::string& id : ids) {
    const Form form = make_form(id, options_from(args));

    BenchRow row;
    row.form_id = form.id;
    row.lo = lo;
    row.hi = hi;

    auto start = clock::now();
    for (Natural base = lo; base <= hi; ++base) {
      if (!form.in_domain(base)) {
        continue;
      }
      ++row.candidates;
      if (form.eval(base).holds) {
        ++row.hits;
      }
    }
    row.form_ms = ms_since(start);

    // sieve baseline: build once, answer every tuple membership by lookup
    start = clock::now();
    const Int top_offset = form.pattern.offsets().back();
    const Natural limit = top_offset > 0 ? Natural(hi + top_offset) : hi;
    const std::vector<bool> sieve = prime_sieve(limit.get_ui());
    unsigned long sieve_hits = 0;
    for (Natural base = lo; base <= hi; ++base) {
      if (!form.in_domain(base)) {
        continue;
      }
      bool all = true;
      for (const Int& t : form.pattern.targets_at(base)) {
        if (t < 2 || !sieve[Natural(t).get_ui()]) {
          all = false;
          break;
        }
      }
      sieve_hits += all ? 1 : 0;
    }
    row.sieve_ms = ms_since(start);
    // keep the baseline honest: both sides must find the same tuples
    if (sieve_hits != row.hits) {
      throw Error("bench disagreement for " + form.id + ": form found " +
                  std::to_string(row.hits) + " tuples, sieve found " +
                  std::to_string(sieve_hits));
    }
    rows.push_back(std::move(row));
  }

  std::cout << render_bench(rows, parse_format(args.format));
  return 0;
}

int run_list(const Args& args) {
  std::cout << render_families(form_families(), parse_format(args.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruence characterisations of simultaneously prime numbers"};
  app.require_subcommand(1);

  Args args;
  CLI::App* check = app.add_subcommand("check", "evaluate one form at one base");
  CLI::App* scan_cmd = app.add_subcommand("scan", "list verdict-true bases in a range");
  CLI::App* verify = app.add_subcommand("verify", "cross-check a form against the primality oracle");
  CLI::App* bench = app.add_subcommand("bench", "time characterisations against a sieve baseline");
  CLI::App* list = app.add_subcommand("list-criteria", "show the form registry");
  for (CLI::App* cmd : {check, scan_cmd, verify, bench, list}) {
    add_common_flags(cmd, args);
  }
  bench->add_option("--forms", args.forms, "comma-separated form ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, parse failures are usage errors
  }

  try {
    if (check->parsed()) {
      return run_check(args);
    }
    if (scan_cmd->parsed()) {
      return run_scan(args);
    }
    if (verify->parsed()) {
      return run_verify(args);
    }
    if (bench->parsed()) {
      return run_bench(args);
    }
    if (list->parsed()) {
      return run_list(args);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
