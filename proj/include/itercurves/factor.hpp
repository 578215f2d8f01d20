#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "itercurves/number.hpp"

namespace itc {

struct FactorBudget {
  std::uint64_t trial_bound = 1u << 16;
  std::uint64_t rho_iterations = 1u << 20;  // per composite, summed over restarts
};

struct Factorization {
  int sign = 1;
  std::vector<std::pair<BigInt, unsigned>> factors;  // primes strictly increasing
  std::vector<BigInt> unfactored;                      // composites left over when incomplete
  bool complete = true;

  BigInt value() const;  // sign * product, including unfactored parts
};

Factorization factor_bounded(const BigInt& n, const FactorBudget& budget = {});
bool is_probable_prime(const BigInt& n);

}  // namespace itc
