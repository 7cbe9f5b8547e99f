#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "algact/scalar.hpp"

namespace algact {

inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Trial-division factorization of |n| up to `bound`. When the remaining
/// cofactor is below bound^2 it is certified prime and the factorization is
/// complete; otherwise `complete` is false and `cofactor` holds the rest.
struct Factorization {
  std::vector<std::pair<BigInt, int>> factors;
  BigInt cofactor = 1;
  bool complete = true;

  std::set<BigInt> primes() const;
  int valuation(const BigInt& p) const;
};

Factorization trial_factor(const BigInt& n, std::uint64_t bound = kTrialDivisionBound);

/// Divisors of a positive machine integer, ascending.
std::vector<long> divisors(long n);

}  // namespace algact
