#include "simulprime/forms.hpp"

#include <exception>
#include <thread>

#include "parallel.hpp"
#include "simulprime/combinator.hpp"
#include "simulprime/constellations.hpp"
#include "simulprime/criteria.hpp"

namespace simulprime {

namespace {

FormVerdict from_condition(const CongruenceCondition& cond) {
  FormVerdict v;
  v.holds = cond.holds;
  v.residue = Residue(cond.c, cond.r);
  return v;
}

FormVerdict from_combined(const CombinedVerdict& cv) {
  FormVerdict v;
  v.holds = cv.holds;
  v.residue = cv.witness;
  v.reason = to_string(cv.reason);
  return v;
}

FormVerdict from_triple(const TripleVerdict& tv) {
  FormVerdict v;
  v.holds = tv.holds;
  v.residue = tv.residue;
  v.reason = tv.reason;
  return v;
}

bool odd_ge3(const Natural& p) {
  return p >= 3 && mpz_odd_p(p.get_mpz_t());
}

Natural parse_param(const std::string& text, const std::string& what) {
  Natural v;
  if (text.empty() || v.set_str(text, 10) != 0 || sgn(v) < 0) {
    throw DomainError(what + " parameter '" + text +
                      "' must be a nonnegative integer");
  }
  return v;
}

// exact condition value of the parametrised criterion, for witnesses
Int simionov_value(const Natural& p, const Natural& k, const Natural& cap) {
  if (p < 2 || k < 1 || k > p) {
    throw DomainError("simionov requires p >= 2 and 1 <= k <= p");
  }
  return Int(factorial_exact(p - k, cap)) * Int(factorial_exact(k - 1, cap)) -
         neg_one_pow(k);
}

std::vector<Natural> recipe_targets(const TuplePattern& pattern,
                                    const Natural& base) {
  std::vector<Natural> out;
  out.reserve(pattern.size());
  for (const Int& t : pattern.targets_at(base)) {
    if (t < 2) {
      throw DomainError("tuple member " + t.get_str() + " is below 2");
    }
    out.push_back(Natural(t));
  }
  return out;
}

std::vector<Natural> recipe_ks(const std::vector<Natural>& targets,
                               const std::optional<Natural>& k) {
  std::vector<Natural> ks;
  ks.reserve(targets.size());
  for (const Natural& t : targets) {
    ks.push_back(k ? *k : balanced_k(t));
  }
  return ks;
}

bool recipe_in_domain(const TuplePattern& pattern,
                      const std::optional<Natural>& k, const Natural& base) {
  if (!pattern.targets_valid_at(base)) {
    return false;
  }
  if (k) {
    // an explicit k must be usable for every target
    const Int smallest = base + pattern.offsets().front();
    if (*k < 1 || Int(*k) > smallest) {
      return false;
    }
  }
  return true;
}

std::optional<Int> recipe_integer_witness(const TuplePattern& pattern,
                                          const std::optional<Natural>& k,
                                          const Natural& base,
                                          const Natural& cap) {
  const auto targets = recipe_targets(pattern, base);
  const auto ks = recipe_ks(targets, k);
  std::vector<GroupCondition> groups;
  groups.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    groups.push_back(make_group(
        {targets[i]}, 1,
        make_condition(simionov_value(targets[i], ks[i], cap), targets[i])));
  }
  const IntegerSumWitness w = integer_sum_witness(groups);
  if (!w.is_integer) {
    return std::nullopt;
  }
  return w.integer_part;
}

TuplePattern need_pattern(const std::string& head, const FormOptions& opts) {
  if (opts.pattern && !opts.pattern->empty()) {
    return *opts.pattern;
  }
  throw DomainError("combined form '" + head + "' needs --pattern");
}

void reject_param(const std::string& head, const std::string& param) {
  if (!param.empty()) {
    throw DomainError("form '" + head + "' takes no parameter");
  }
}

}  // namespace

Form make_form(const std::string& raw_id, const FormOptions& opts) {
  std::string id = raw_id;
  if (id.rfind("named:", 0) == 0) {
    id = id.substr(6);
  }
  std::string head = id;
  std::string param;
  if (const auto pos = id.find(':'); pos != std::string::npos) {
    head = id.substr(0, pos);
    param = id.substr(pos + 1);
    if (param.empty()) {
      throw DomainError("form '" + head + "' has an empty parameter");
    }
  }

  const auto need_k = [&](const std::string& who) -> Natural {
    if (!param.empty()) {
      return parse_param(param, "k");
    }
    if (opts.k) {
      return *opts.k;
    }
    throw DomainError(who + " needs k (use " + who + ":k or --k)");
  };

  Form f;

  if (head == "wilson") {
    reject_param(head, param);
    f.id = "wilson";
    f.kind = "criterion";
    f.pattern = TuplePattern({Int(0)});
    f.eval = [](const Natural& p) { return from_condition(wilson(p)); };
    f.in_domain = [](const Natural& p) { return p >= 2; };
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      if (p < 2) {
        throw DomainError("wilson requires p >= 2");
      }
      return Int(factorial_exact(p - 1, cap)) + 1;
    };
    return f;
  }

  if (head == "leibniz") {
    reject_param(head, param);
    f.id = "leibniz";
    f.kind = "criterion";
    f.pattern = TuplePattern({Int(0)});
    f.eval = [](const Natural& p) { return from_condition(leibniz(p)); };
    f.in_domain = [](const Natural& p) { return p >= 2; };
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      if (p < 2) {
        throw DomainError("leibniz requires p >= 2");
      }
      return Int(factorial_exact(p - 2, cap)) - 1;
    };
    return f;
  }

  if (head == "simionov") {
    const Natural k = need_k("simionov");
    if (k < 1) {
      throw DomainError("simionov requires k >= 1");
    }
    f.id = "simionov:" + k.get_str();
    f.kind = "criterion";
    f.pattern = TuplePattern({Int(0)});
    f.eval = [k](const Natural& p) { return from_condition(simionov(p, k)); };
    f.in_domain = [k](const Natural& p) { return p >= 2 && k <= p; };
    f.exact_witness = [k](const Natural& p,
                          const Natural& cap) -> std::optional<Int> {
      return simionov_value(p, k, cap);
    };
    return f;
  }

  if (head == "smarandache-factorial") {
    reject_param(head, param);
    f.id = "smarandache-factorial";
    f.kind = "criterion";
    f.pattern = TuplePattern({Int(0)});
    f.eval = [](const Natural& p) {
      return from_condition(smarandache_factorial(p));
    };
    f.in_domain = odd_ge3;
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      if (!odd_ge3(p)) {
        throw DomainError("smarandache-factorial requires odd p >= 3");
      }
      return Int(factorial_exact(p - 3, cap)) - Int((p - 1) / 2);
    };
    return f;
  }

  if (head == "clement") {
    reject_param(head, param);
    f.id = "clement";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(0), Int(2)});
    f.eval = [](const Natural& p) { return from_condition(clement(p)); };
    f.in_domain = odd_ge3;
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      if (!odd_ge3(p)) {
        throw DomainError("clement requires odd p >= 3");
      }
      return 4 * (Int(factorial_exact(p - 1, cap)) + 1) + p;
    };
    return f;
  }

  if (head == "twin-a") {
    reject_param(head, param);
    f.id = "twin-a";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(0), Int(2)});
    f.eval = [](const Natural& p) { return from_condition(twin_a(p)); };
    f.in_domain = odd_ge3;
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      if (!odd_ge3(p)) {
        throw DomainError("twin-a requires odd p >= 3");
      }
      return Int(factorial_exact(p - 1, cap)) * (3 * p + 2) + 2 * p + 2;
    };
    return f;
  }

  if (head == "twin-b") {
    reject_param(head, param);
    f.id = "twin-b";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(0), Int(2)});
    f.eval = [](const Natural& p) { return from_condition(twin_b(p)); };
    f.in_domain = odd_ge3;
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      if (!odd_ge3(p)) {
        throw DomainError("twin-b requires odd p >= 3");
      }
      return Int(factorial_exact(p - 1, cap)) * (p - 2) - 2;
    };
    return f;
  }

  if (head == "twin-sum") {
    reject_param(head, param);
    f.id = "twin-sum";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(0), Int(2)});
    f.eval = [](const Natural& p) { return from_combined(twin_sum(p)); };
    f.in_domain = odd_ge3;
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      const IntegerSumWitness w = twin_sum_witness(p, cap);
      if (!w.is_integer) {
        return std::nullopt;
      }
      return w.integer_part;
    };
    return f;
  }

  if (head == "pair-s" || head == "pair-c") {
    const bool smarandache_flavour = head == "pair-s";
    const Natural k = need_k(head);
    if (k < 1) {
      throw DomainError(head + " requires k >= 1");
    }
    f.id = head + ":" + k.get_str();
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(0), Int(k)});
    if (smarandache_flavour) {
      f.eval = [k](const Natural& p) {
        return from_condition(pair_smarandache(p, k));
      };
      f.exact_witness = [k](const Natural& p,
                            const Natural& cap) -> std::optional<Int> {
        if (p < 2 || gcd(p, p + k) != 1) {
          throw DomainError("pair-s requires p >= 2 with gcd(p, p+k) = 1");
        }
        return Int(factorial_exact(p - 1, cap)) * (p + k) +
               Int(factorial_exact(p + k - 1, cap)) * p + 2 * p + k;
      };
    } else {
      // The k.k! factor in front of [(p-1)! + 1] must stay coprime to p, or
      // the base-side of the statement is vacuous and a composite base can
      // satisfy the congruence (p = 9, k = 8 does).  gcd(k! mod p, p) equals
      // gcd(k!, p), so no exact factorial is needed, and any shared factor
      // of p and p+k divides k, so this single test also covers pair
      // coprimality.
      const auto coprime_to_kfac = [k](const Natural& p) {
        return gcd(factorial_mod(k, p).value(), p) == 1;
      };
      f.eval = [k, coprime_to_kfac](const Natural& p) {
        if (p < 2 || !coprime_to_kfac(p)) {
          throw DomainError("pair-c requires p >= 2 with gcd(p, k!) = 1");
        }
        return from_condition(pair_cucurezeanu(p, k));
      };
      f.exact_witness = [k, coprime_to_kfac](
                            const Natural& p,
                            const Natural& cap) -> std::optional<Int> {
        if (p < 2 || !coprime_to_kfac(p)) {
          throw DomainError("pair-c requires p >= 2 with gcd(p, k!) = 1");
        }
        const Int kfac(factorial_exact(k, cap));
        return Int(k) * kfac * (Int(factorial_exact(p - 1, cap)) + 1) +
               (kfac - neg_one_pow(k)) * p;
      };
      f.in_domain = [coprime_to_kfac](const Natural& p) {
        return p >= 2 && coprime_to_kfac(p);
      };
      return f;
    }
    f.in_domain = [k](const Natural& p) {
      return p >= 2 && gcd(p, p + k) == 1;
    };
    return f;
  }

  if (head == "quad") {
    reject_param(head, param);
    f.id = "quad";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(0), Int(2), Int(6), Int(8)});
    f.eval = [](const Natural& p) { return from_combined(quadruplet(p)); };
    f.in_domain = odd_ge3;
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      const IntegerSumWitness w = quadruplet_witness(p, cap);
      if (!w.is_integer) {
        return std::nullopt;
      }
      return w.integer_part;
    };
    return f;
  }

  if (head == "triple-s") {
    reject_param(head, param);
    f.id = "triple-s";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(-2), Int(0), Int(4)});
    f.eval = [](const Natural& p) {
      return from_triple(triple_smarandache(p));
    };
    f.in_domain = [](const Natural& p) { return p >= 5; };
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      return triple_smarandache_witness(p, cap);
    };
    return f;
  }

  if (head == "triple-p") {
    reject_param(head, param);
    f.id = "triple-p";
    f.kind = "constellation";
    f.pattern = TuplePattern({Int(-2), Int(0), Int(4)});
    f.eval = [](const Natural& p) { return from_triple(triple_patrizio(p)); };
    f.in_domain = [](const Natural& p) { return p >= 5; };
    f.exact_witness = [](const Natural& p,
                         const Natural& cap) -> std::optional<Int> {
      return triple_patrizio_witness(p, cap);
    };
    return f;
  }

  // combined recipes share targets/ks handling
  if (head == "weighted" || head == "T" || head == "integer-sum" ||
      head == "W" || head == "divisor" || head == "U" || head == "V") {
    const TuplePattern pattern = need_pattern(head, opts);
    const std::optional<Natural> k = opts.k;
    f.kind = "combined";
    f.pattern = pattern;
    f.in_domain = [pattern, k](const Natural& base) {
      return recipe_in_domain(pattern, k, base);
    };

    if (head == "weighted" || head == "T") {
      reject_param(head, param);
      f.id = head;
      f.eval = [pattern, k](const Natural& base) {
        const auto ts = recipe_targets(pattern, base);
        return from_combined(form_T(ts, recipe_ks(ts, k)));
      };
      return f;
    }

    if (head == "integer-sum" || head == "W") {
      reject_param(head, param);
      f.id = head;
      f.eval = [pattern, k](const Natural& base) {
        const auto ts = recipe_targets(pattern, base);
        return from_combined(form_W(ts, recipe_ks(ts, k)));
      };
      f.exact_witness = [pattern, k](const Natural& base,
                                     const Natural& cap) -> std::optional<Int> {
        return recipe_integer_witness(pattern, k, base, cap);
      };
      return f;
    }

    if (head == "divisor") {
      Natural D;
      if (!param.empty()) {
        D = parse_param(param, "divisor");
      } else if (opts.d) {
        D = *opts.d;
      } else {
        throw DomainError("divisor needs D (use divisor:D or --d)");
      }
      if (D < 1) {
        throw DomainError("divisor must be >= 1");
      }
      f.id = "divisor:" + D.get_str();
      f.eval = [pattern, k, D](const Natural& base) {
        const auto ts = recipe_targets(pattern, base);
        return from_combined(combine(simionov_groups(ts, recipe_ks(ts, k)),
                                     CombinedForm::with_divisor(D)));
      };
      return f;
    }

    // U:s and V:j share position validation against the pattern width
    if (param.empty()) {
      throw DomainError(head == "U" ? "U needs a split position (use U:s)"
                                    : "V needs a target index (use V:j)");
    }
    const Natural pos = parse_param(param, head == "U" ? "split" : "index");
    if (pos < 1 || pos > pattern.size()) {
      throw DomainError("position " + pos.get_str() +
                        " is outside 1.." + std::to_string(pattern.size()));
    }
    const std::size_t posv = pos.get_ui();
    f.id = head + ":" + pos.get_str();
    if (head == "U") {
      f.eval = [pattern, k, posv](const Natural& base) {
        const auto ts = recipe_targets(pattern, base);
        return from_combined(form_U(ts, recipe_ks(ts, k), posv));
      };
    } else {
      f.eval = [pattern, k, posv](const Natural& base) {
        const auto ts = recipe_targets(pattern, base);
        return from_combined(form_V(ts, recipe_ks(ts, k), posv));
      };
    }
    return f;
  }

  throw UnknownForm("unknown form id '" + raw_id + "'");
}

const std::vector<FormFamily>& form_families() {
  static const std::vector<FormFamily> families = {
      {"wilson", "criterion", "0", "2 ≤ p", "Wilson"},
      {"leibniz", "criterion", "0", "2 ≤ p", "Leibniz"},
      {"simionov:k", "criterion", "0", "2 ≤ p, 1 ≤ k ≤ p", "Simionov"},
      {"smarandache-factorial", "criterion", "0", "odd p ≥ 3", "Example 2"},
      {"clement", "constellation", "0,2", "odd p ≥ 3", "Clement"},
      {"twin-a", "constellation", "0,2", "odd p ≥ 3", "Example 3"},
      {"twin-b", "constellation", "0,2", "odd p ≥ 3", "Example 3"},
      {"twin-sum", "constellation", "0,2", "odd p ≥ 3", "Example 3"},
      {"pair-s:k", "constellation", "0,k", "2 ≤ p, gcd(p, p+k) = 1",
       "Example 4"},
      {"pair-c:k", "constellation", "0,k", "2 ≤ p, gcd(p, k!) = 1",
       "Cucurezeanu"},
      {"quad", "constellation", "0,2,6,8", "odd p ≥ 3", "Example 5"},
      {"triple-s", "constellation", "-2,0,4", "5 ≤ p", "Example 6"},
      {"triple-p", "constellation", "-2,0,4", "5 ≤ p", "Patrizio"},
      {"weighted", "combined", "--pattern", "targets ≥ 2, pairwise coprime",
       "General Theorem"},
      {"divisor:D", "combined", "--pattern", "targets ≥ 2, D | R",
       "General Theorem"},
      {"integer-sum", "combined", "--pattern",
       "targets ≥ 2, pairwise coprime", "General Theorem"},
      {"T", "combined", "--pattern", "targets ≥ 2, pairwise coprime",
       "Example 1"},
      {"U:s", "combined", "--pattern", "targets ≥ 2, 1 ≤ s ≤ n", "Example 1"},
      {"V:j", "combined", "--pattern", "targets ≥ 2, 1 ≤ j ≤ n", "Example 1"},
      {"W", "combined", "--pattern", "targets ≥ 2, pairwise coprime",
       "Example 1"},
  };
  return families;
}

std::vector<ScanHit> scan(const Form& form, const Natural& lo,
                          const Natural& hi, unsigned jobs) {
  if (hi < lo) {
    throw BadRange("range " + lo.get_str() + ".." + hi.get_str() +
                   " has hi < lo");
  }
  const auto chunks = detail::partition_range(lo, hi, jobs);

  const auto run_chunk = [&form](const detail::Chunk& chunk,
                                 std::vector<ScanHit>& out) {
    for (Natural base = chunk.lo; base <= chunk.hi; ++base) {
      if (!form.in_domain(base)) {
        continue;
      }
      FormVerdict v = form.eval(base);
      if (v.holds) {
        out.push_back(ScanHit{base, std::move(v)});
      }
    }
  };

  if (chunks.size() <= 1) {
    std::vector<ScanHit> out;
    if (!chunks.empty()) {
      run_chunk(chunks[0], out);
    }
    return out;
  }

  std::vector<std::vector<ScanHit>> buckets(chunks.size());
  std::vector<std::exception_ptr> errors(chunks.size());
  std::vector<std::thread> pool;
  pool.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    pool.emplace_back([&, i] {
      try {
        run_chunk(chunks[i], buckets[i]);
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

  std::vector<ScanHit> out;
  for (std::vector<ScanHit>& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  }
  return out;
}

}  // namespace simulprime
