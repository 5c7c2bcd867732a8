#include "simulprime/constellations.hpp"

namespace simulprime {

namespace {

void require_odd_base(const Natural& p, const char* name) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw DomainError(std::string(name) + " requires odd p >= 3");
  }
}

void require_coprime_pair(const Natural& p, const Natural& k,
                          const char* name) {
  if (p < 2 || sgn(k) < 0 || p + k < 2) {
    throw DomainError(std::string(name) + " requires p >= 2 and p+k >= 2");
  }
  if (gcd(p, p + k) != 1) {
    throw DomainError(std::string(name) +
                      " requires gcd(p, p+k) = 1; both targets share a factor");
  }
}

Int reduced(const Int& c, const Natural& r) {
  return Int(mod_reduce(c, r).value());
}

// floor(n!/d) mod p without the exact factorial: with F = n! mod (p d),
// F mod d equals n! mod d, and (F - F mod d)/d differs from the true floor
// by a multiple of p.
Natural floor_factorial_quotient_mod(const Natural& n, const Natural& d,
                                     const Natural& p) {
  const Natural m = p * d;
  const Natural F = factorial_mod(n, m).value();
  const Natural rho = F % d;
  const Natural q = (F - rho) / d;
  return q % p;
}

}  // namespace

CongruenceCondition clement(const Natural& p) {
  require_odd_base(p, "clement");
  const Natural r = p * (p + 2);
  const Int c = 4 * (Int(factorial_mod(p - 1, r).value()) + 1) + p;
  return make_condition(reduced(c, r), r);
}

CongruenceCondition twin_a(const Natural& p) {
  require_odd_base(p, "twin-a");
  const Natural r = p * (p + 2);
  const Int c = Int(factorial_mod(p - 1, r).value()) * (3 * p + 2) + 2 * p + 2;
  return make_condition(reduced(c, r), r);
}

CongruenceCondition twin_b(const Natural& p) {
  require_odd_base(p, "twin-b");
  const Natural r = p * (p + 2);
  const Int c = Int(factorial_mod(p - 1, r).value()) * (p - 2) - 2;
  return make_condition(reduced(c, r), r);
}

CombinedVerdict twin_sum(const Natural& p) {
  require_odd_base(p, "twin-sum");
  // (p+1)! + 1 == 2(p-1)! + 1 (mod p+2) by the shift identity, so both
  // numerators come from offset_wilson.
  std::vector<GroupCondition> groups;
  groups.push_back(make_group({p}, 1, offset_wilson(p, 0)));
  groups.push_back(make_group({p + 2}, 1, offset_wilson(p, 2)));
  return combine(groups, CombinedForm::integer_sum());
}

CongruenceCondition pair_smarandache(const Natural& p, const Natural& k) {
  require_coprime_pair(p, k, "pair-s");
  const Natural r = p * (p + k);
  const Int c = Int(factorial_mod(p - 1, r).value()) * (p + k) +
                Int(factorial_mod(p + k - 1, r).value()) * p + 2 * p + k;
  return make_condition(reduced(c, r), r);
}

CongruenceCondition pair_cucurezeanu(const Natural& p, const Natural& k) {
  require_coprime_pair(p, k, "pair-c");
  const Natural r = p * (p + k);
  const Int kfac(factorial_mod(k, r).value());
  const Int c = Int(k) * kfac * (Int(factorial_mod(p - 1, r).value()) + 1) +
                (kfac - neg_one_pow(k)) * p;
  return make_condition(reduced(c, r), r);
}

CombinedVerdict quadruplet(const Natural& p) {
  require_odd_base(p, "quad");
  std::vector<GroupCondition> groups;
  for (unsigned long d : {0ul, 2ul, 6ul, 8ul}) {
    groups.push_back(make_group({p + d}, 1, offset_wilson(p, d)));
  }
  return combine(groups, CombinedForm::integer_sum());
}

TripleVerdict triple_smarandache(const Natural& p) {
  if (p < 5) {
    throw DomainError("triple-s requires p >= 5");
  }
  TripleVerdict out;
  if ((factorial_mod(p - 3, p - 2).value() + 1) % (p - 2) != 0) {
    out.reason = "not-divisible:p-2";
    return out;
  }
  if ((factorial_mod(p + 3, p + 4).value() + 1) % (p + 4) != 0) {
    out.reason = "not-divisible:p+4";
    return out;
  }
  // Both p q_i terms vanish mod p, leaving (p-1)! + 1 == 0 (mod p).
  const Residue w = mod_reduce(Int(factorial_mod(p - 1, p).value()) + 1, p);
  out.holds = w.is_zero();
  out.residue = w;
  return out;
}

TripleVerdict triple_patrizio(const Natural& p) {
  if (p < 5) {
    throw DomainError("triple-p requires p >= 5");
  }
  const Natural f1 = floor_factorial_quotient_mod(p + 3, p + 4, p);
  const Natural f2 = floor_factorial_quotient_mod(p - 3, p - 2, p);
  const Residue w = mod_reduce(8 * Int(f1) + 4 * Int(f2) + 11, p);
  TripleVerdict out;
  out.holds = w.is_zero();
  out.residue = w;
  return out;
}

IntegerSumWitness twin_sum_witness(const Natural& p, const Natural& cap) {
  require_odd_base(p, "twin-sum");
  std::vector<GroupCondition> groups;
  groups.push_back(make_group(
      {p}, 1, make_condition(offset_wilson_value(p, 0, cap), p)));
  groups.push_back(make_group(
      {p + 2}, 1, make_condition(offset_wilson_value(p, 2, cap), p + 2)));
  return integer_sum_witness(groups);
}

IntegerSumWitness quadruplet_witness(const Natural& p, const Natural& cap) {
  require_odd_base(p, "quad");
  std::vector<GroupCondition> groups;
  for (unsigned long d : {0ul, 2ul, 6ul, 8ul}) {
    groups.push_back(make_group(
        {p + d}, 1, make_condition(offset_wilson_value(p, d, cap), p + d)));
  }
  return integer_sum_witness(groups);
}

std::optional<Int> triple_smarandache_witness(const Natural& p,
                                              const Natural& cap) {
  if (p < 5) {
    throw DomainError("triple-s requires p >= 5");
  }
  const auto q1 = exact_div(Int(factorial_exact(p - 3, cap)) + 1, p - 2);
  const auto q2 = exact_div(Int(factorial_exact(p + 3, cap)) + 1, p + 4);
  if (!q1 || !q2) {
    return std::nullopt;
  }
  return Int(factorial_exact(p - 1, cap)) + Int(p) * *q1 + Int(p) * *q2;
}

Int triple_patrizio_witness(const Natural& p, const Natural& cap) {
  if (p < 5) {
    throw DomainError("triple-p requires p >= 5");
  }
  return 8 * Int(floor_div(factorial_exact(p + 3, cap), p + 4)) +
         4 * Int(floor_div(factorial_exact(p - 3, cap), p - 2));
}

}  // namespace simulprime
