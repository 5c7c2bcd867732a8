#pragma once

// Arbitrary-precision integer kernel: canonical residues, modular and exact
// factorials, divisibility helpers.  Everything downstream builds on these.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simulprime {

using Int = mpz_class;      // signed, arbitrary precision
using Natural = mpz_class;  // same representation; >= 0 by contract

// Exact factorials are refused above this bound unless the caller raises it.
inline constexpr unsigned long kDefaultFactorialCap = 5000;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// modulus < 1 where a modulus is required
struct ZeroModulus : Error {
  ZeroModulus() : Error("modulus must be >= 1") {}
};

// argument outside a function's stated domain
struct DomainError : Error {
  using Error::Error;
};

// exact factorial requested beyond the configured cap
struct CapExceeded : Error {
  using Error::Error;
};

// divisor form asked for a D that does not divide the combined modulus
struct DivisorInvalid : Error {
  using Error::Error;
};

// an operation that needs at least one element got none
struct EmptyInput : Error {
  using Error::Error;
};

// form id not recognised by the registry
struct UnknownForm : Error {
  using Error::Error;
};

// scan/verify range with hi < lo
struct BadRange : Error {
  using Error::Error;
};

// value too large for a fixed-width code path that has no big-int fallback
struct OutOfRange : Error {
  using Error::Error;
};

// A canonical residue class: value() is always in [0, modulus()).
class Residue {
 public:
  Residue(const Int& value, const Natural& modulus);

  const Natural& value() const { return value_; }
  const Natural& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  Natural value_;
  Natural modulus_;
};

// Canonical x mod m, result in [0, m).  Throws ZeroModulus if m < 1.
Residue mod_reduce(const Int& x, const Natural& m);

// n! mod m without materialising n!.  n >= m short-circuits to 0 since m
// divides n! outright.  Throws DomainError for n < 0, ZeroModulus for m < 1.
Residue factorial_mod(const Natural& n, const Natural& m);

// Exact n!.  Throws CapExceeded when n > cap; the cap keeps witnesses at
// desk scale rather than letting a typo allocate gigabytes.
Natural factorial_exact(const Natural& n, const Natural& cap);
Natural factorial_exact(const Natural& n);

// Nonnegative gcd; gcd(0, 0) == 0.
Natural gcd(const Natural& a, const Natural& b);

// True when every pair has gcd 1.  Empty and singleton lists are vacuously
// coprime.
bool pairwise_coprime(const std::vector<Natural>& xs);

// a / d when d divides a exactly, nullopt otherwise.  Throws ZeroModulus for
// d < 1.
std::optional<Int> exact_div(const Int& a, const Natural& d);

// floor(a / d) for a >= 0, d >= 1.
Natural floor_div(const Natural& a, const Natural& d);

// (-1)^k for k >= 0.
Int neg_one_pow(const Natural& k);

}  // namespace simulprime
