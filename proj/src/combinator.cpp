#include "simulprime/combinator.hpp"

#include <algorithm>

namespace simulprime {

GroupCondition make_group(std::vector<Natural> targets, Int a,
                          CongruenceCondition cond) {
  if (targets.empty()) {
    throw DomainError("group condition needs at least one target");
  }
  for (const Natural& t : targets) {
    if (t < 2) {
      throw DomainError("group targets must be >= 2");
    }
  }
  return GroupCondition{std::move(targets), std::move(a), std::move(cond)};
}

const char* to_string(CombineReason reason) {
  switch (reason) {
    case CombineReason::ok:
      return "ok";
    case CombineReason::not_coprime_targets:
      return "not-coprime-targets";
    case CombineReason::not_coprime_moduli:
      return "not-coprime-moduli";
    case CombineReason::coefficient_not_coprime:
      return "coefficient-not-coprime";
  }
  return "unknown";
}

CombinedForm CombinedForm::weighted() { return CombinedForm{}; }

CombinedForm CombinedForm::with_divisor(Natural divisor) {
  CombinedForm out;
  out.kind = Kind::divisor;
  out.D = std::move(divisor);
  return out;
}

CombinedForm CombinedForm::integer_sum() {
  CombinedForm out;
  out.kind = Kind::integer_sum;
  return out;
}

CombineReason check_preconditions(const std::vector<GroupCondition>& groups) {
  if (groups.empty()) {
    throw EmptyInput("combine needs at least one group condition");
  }
  std::vector<Natural> targets;
  for (const GroupCondition& g : groups) {
    targets.insert(targets.end(), g.targets.begin(), g.targets.end());
  }
  if (!pairwise_coprime(targets)) {
    return CombineReason::not_coprime_targets;
  }
  std::vector<Natural> moduli;
  moduli.reserve(groups.size());
  for (const GroupCondition& g : groups) {
    moduli.push_back(g.cond.r);
  }
  if (!pairwise_coprime(moduli)) {
    return CombineReason::not_coprime_moduli;
  }
  for (const GroupCondition& g : groups) {
    if (gcd(Natural(abs(g.a)), g.cond.r) != 1) {
      return CombineReason::coefficient_not_coprime;
    }
  }
  return CombineReason::ok;
}

CombinedVerdict combine(const std::vector<GroupCondition>& groups,
                        const CombinedForm& form) {
  const CombineReason reason = check_preconditions(groups);

  Natural R = 1;
  for (const GroupCondition& g : groups) {
    R *= g.cond.r;
  }

  Natural D = 1;
  if (form.kind == CombinedForm::Kind::divisor) {
    D = form.D;
    if (D < 1 || !mpz_divisible_p(R.get_mpz_t(), D.get_mpz_t())) {
      throw DivisorInvalid("divisor " + D.get_str() +
                           " does not divide combined modulus " + R.get_str());
    }
  }

  // X = sum a_i c_i (R / r_i), accumulated reduced mod R.
  Natural X = 0;
  for (const GroupCondition& g : groups) {
    const Natural ci = mod_reduce(g.cond.c, g.cond.r).value();
    const Natural share = R / g.cond.r;  // exact by construction
    X += mod_reduce(g.a * Int(ci) * Int(share), R).value();
    X %= R;
  }

  CombinedVerdict out;
  out.reason = reason;
  out.holds = reason == CombineReason::ok && X == 0;
  out.witness = Residue(Int(X), R);
  switch (form.kind) {
    case CombinedForm::Kind::weighted_sum:
      out.modulus_shown = R;
      break;
    case CombinedForm::Kind::divisor:
      out.modulus_shown = R / D;
      if (auto q = exact_div(Int(X), D)) {
        out.shown_value = Natural(*q);
      }
      break;
    case CombinedForm::Kind::integer_sum:
      out.modulus_shown = 1;
      break;
  }
  return out;
}

GroupCondition combine_as_group(const std::vector<GroupCondition>& groups,
                                const CombinedForm& form) {
  const CombinedVerdict v = combine(groups, form);
  std::vector<Natural> targets;
  for (const GroupCondition& g : groups) {
    targets.insert(targets.end(), g.targets.begin(), g.targets.end());
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return make_group(std::move(targets), 1,
                    make_condition(Int(v.witness.value()), v.witness.modulus()));
}

IntegerSumWitness integer_sum_witness(
    const std::vector<GroupCondition>& groups) {
  if (groups.empty()) {
    throw EmptyInput("integer sum needs at least one group condition");
  }
  mpq_class sum = 0;
  for (const GroupCondition& g : groups) {
    mpq_class term(g.a * g.cond.c, g.cond.r);
    term.canonicalize();
    sum += term;
  }
  IntegerSumWitness out;
  out.is_integer = sum.get_den() == 1;
  out.integer_part = sum.get_num() / sum.get_den();
  return out;
}

std::vector<GroupCondition> simionov_groups(const std::vector<Natural>& ps,
                                            const std::vector<Natural>& ks) {
  if (ps.empty()) {
    throw EmptyInput("need at least one target");
  }
  if (ps.size() != ks.size()) {
    throw DomainError("need exactly one k per target");
  }
  std::vector<GroupCondition> groups;
  groups.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    groups.push_back(make_group({ps[i]}, 1, simionov(ps[i], ks[i])));
  }
  return groups;
}

CombinedVerdict form_T(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks) {
  return combine(simionov_groups(ps, ks), CombinedForm::weighted());
}

CombinedVerdict form_U(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks, std::size_t s) {
  auto groups = simionov_groups(ps, ks);
  if (s < 1 || s > ps.size()) {
    throw DomainError("split position must be in 1..n");
  }
  // drop the moduli after position s from the displayed denominator
  Natural D = 1;
  for (std::size_t i = s; i < ps.size(); ++i) {
    D *= ps[i];
  }
  return combine(groups, CombinedForm::with_divisor(D));
}

CombinedVerdict form_V(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks, std::size_t j) {
  auto groups = simionov_groups(ps, ks);
  if (j < 1 || j > ps.size()) {
    throw DomainError("distinguished index must be in 1..n");
  }
  // everything except p_j divides out, leaving a statement mod p_j
  Natural D = 1;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i != j - 1) {
      D *= ps[i];
    }
  }
  return combine(groups, CombinedForm::with_divisor(D));
}

CombinedVerdict form_W(const std::vector<Natural>& ps,
                       const std::vector<Natural>& ks) {
  return combine(simionov_groups(ps, ks), CombinedForm::integer_sum());
}

}  // namespace simulprime
