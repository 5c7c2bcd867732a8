#include "simulprime/numkernel.hpp"

#include <cstdint>

namespace simulprime {

namespace {

void require_nonneg(const Int& x, const char* what) {
  if (sgn(x) < 0) {
    throw DomainError(std::string(what) + " must be nonnegative");
  }
}

void require_modulus(const Natural& m) {
  if (sgn(m) <= 0) {
    throw ZeroModulus();
  }
}

}  // namespace

Residue::Residue(const Int& value, const Natural& modulus) : modulus_(modulus) {
  require_modulus(modulus_);
  // mpz_mod always yields a result with the sign of the divisor, so this is
  // the canonical representative even for negative inputs.
  mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

Residue mod_reduce(const Int& x, const Natural& m) { return Residue(x, m); }

Residue factorial_mod(const Natural& n, const Natural& m) {
  require_nonneg(n, "n");
  require_modulus(m);
  if (n >= m) {
    // m is itself one of the factors 1..n, so n! == 0 (mod m).
    return Residue(0, m);
  }
  if (m.fits_ulong_p()) {
    // n < m <= ULONG_MAX: run the product in machine words.
    const std::uint64_t mod = m.get_ui();
    const std::uint64_t top = n.get_ui();
    std::uint64_t acc = 1 % mod;
    for (std::uint64_t i = 2; i <= top; ++i) {
      acc = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(acc) * i % mod);
    }
    return Residue(Natural(static_cast<unsigned long>(acc)), m);
  }
  Natural acc = 1;
  for (Natural i = 2; i <= n; ++i) {
    acc *= i;
    acc %= m;
  }
  return Residue(acc, m);
}

Natural factorial_exact(const Natural& n, const Natural& cap) {
  require_nonneg(n, "n");
  if (n > cap) {
    throw CapExceeded("factorial of " + n.get_str() + " exceeds cap " +
                      cap.get_str());
  }
  if (!n.fits_ulong_p()) {
    throw CapExceeded("factorial argument " + n.get_str() +
                      " too large to evaluate exactly");
  }
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), n.get_ui());
  return out;
}

Natural factorial_exact(const Natural& n) {
  return factorial_exact(n, Natural(kDefaultFactorialCap));
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool pairwise_coprime(const std::vector<Natural>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (gcd(xs[i], xs[j]) != 1) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Int> exact_div(const Int& a, const Natural& d) {
  require_modulus(d);
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    return std::nullopt;
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

Natural floor_div(const Natural& a, const Natural& d) {
  require_nonneg(a, "a");
  require_modulus(d);
  Natural q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int neg_one_pow(const Natural& k) {
  require_nonneg(k, "k");
  return mpz_odd_p(k.get_mpz_t()) ? Int(-1) : Int(1);
}

}  // namespace simulprime
