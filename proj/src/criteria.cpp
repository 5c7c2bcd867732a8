#include "simulprime/criteria.hpp"

namespace simulprime {

namespace {

Int reduced(const Int& c, const Natural& r) {
  return Int(mod_reduce(c, r).value());
}

}  // namespace

CongruenceCondition make_condition(Int c, Natural r) {
  if (sgn(r) <= 0) {
    throw ZeroModulus();
  }
  CongruenceCondition out{std::move(c), std::move(r), false};
  out.holds = mpz_divisible_p(out.c.get_mpz_t(), out.r.get_mpz_t()) != 0;
  return out;
}

CongruenceCondition simionov(const Natural& p, const Natural& k) {
  if (p < 2) {
    throw DomainError("simionov requires p >= 2");
  }
  if (k < 1 || k > p) {
    throw DomainError("simionov requires 1 <= k <= p");
  }
  const Int c = Int(factorial_mod(p - k, p).value()) *
                    Int(factorial_mod(k - 1, p).value()) -
                neg_one_pow(k);
  return make_condition(reduced(c, p), p);
}

CongruenceCondition wilson(const Natural& p) { return simionov(p, 1); }

CongruenceCondition leibniz(const Natural& p) {
  if (p < 2) {
    throw DomainError("leibniz requires p >= 2");
  }
  const Int c = Int(factorial_mod(p - 2, p).value()) - 1;
  return make_condition(reduced(c, p), p);
}

CongruenceCondition smarandache_factorial(const Natural& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw DomainError("smarandache-factorial requires odd p >= 3");
  }
  const Natural half = (p - 1) / 2;
  const Int c = Int(factorial_mod(p - 3, p).value()) - Int(half);
  return make_condition(reduced(c, p), p);
}

Natural balanced_k(const Natural& p) {
  if (p < 2) {
    throw DomainError("balanced_k requires p >= 2");
  }
  return (p + 1) / 2;
}

CongruenceCondition offset_wilson(const Natural& p, const Natural& d) {
  if (p < 1 || sgn(d) < 0 || p + d < 2) {
    throw DomainError("offset_wilson requires p >= 1, d >= 0, p+d >= 2");
  }
  const Natural r = p + d;
  // (p+d-1)! == (-1)^d d! (p-1)! (mod p+d), so this value is
  // (p+d-1)! + 1 shifted back to base p.
  const Int c = neg_one_pow(d) * Int(factorial_mod(d, r).value()) *
                    Int(factorial_mod(p - 1, r).value()) +
                1;
  return make_condition(reduced(c, r), r);
}

Int offset_wilson_value(const Natural& p, const Natural& d,
                        const Natural& cap) {
  if (p < 1 || sgn(d) < 0 || p + d < 2) {
    throw DomainError("offset_wilson requires p >= 1, d >= 0, p+d >= 2");
  }
  return neg_one_pow(d) * Int(factorial_exact(d, cap)) *
             Int(factorial_exact(p - 1, cap)) +
         1;
}

}  // namespace simulprime
