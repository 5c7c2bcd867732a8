#include "simulprime/verify.hpp"

#include <chrono>
#include <exception>
#include <thread>

#include "parallel.hpp"

namespace simulprime {

namespace {

struct ChunkResult {
  unsigned long checked = 0;
  std::vector<Mismatch> mismatches;
};

ChunkResult verify_chunk(const Form& form, const detail::Chunk& chunk,
                         PrimalityMethod method) {
  ChunkResult out;
  for (Natural base = chunk.lo; base <= chunk.hi; ++base) {
    if (!form.in_domain(base)) {
      continue;
    }
    ++out.checked;
    const bool form_verdict = form.eval(base).holds;
    const bool oracle_verdict = tuple_is_prime(base, form.pattern, method);
    if (form_verdict != oracle_verdict) {
      out.mismatches.push_back(Mismatch{base, form_verdict, oracle_verdict});
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_equivalence(const Form& form, const Natural& lo,
                                      const Natural& hi, unsigned jobs,
                                      PrimalityMethod method) {
  if (hi < lo) {
    throw BadRange("range " + lo.get_str() + ".." + hi.get_str() +
                   " has hi < lo");
  }
  VerificationReport report;
  report.form_id = form.id;
  report.pattern = form.pattern;
  report.lo = lo;
  report.hi = hi;
  report.jobs = jobs == 0 ? 1 : jobs;

  const auto started = std::chrono::steady_clock::now();
  const auto chunks = detail::partition_range(lo, hi, report.jobs);

  std::vector<ChunkResult> results(chunks.size());
  if (chunks.size() <= 1) {
    if (!chunks.empty()) {
      results[0] = verify_chunk(form, chunks[0], method);
    }
  } else {
    std::vector<std::exception_ptr> errors(chunks.size());
    std::vector<std::thread> pool;
    pool.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      pool.emplace_back([&, i] {
        try {
          results[i] = verify_chunk(form, chunks[i], method);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
    for (const std::exception_ptr& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  for (ChunkResult& r : results) {
    report.checked += r.checked;
    report.mismatches.insert(report.mismatches.end(),
                             std::make_move_iterator(r.mismatches.begin()),
                             std::make_move_iterator(r.mismatches.end()));
  }
  const auto finished = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();
  return report;
}

}  // namespace simulprime
