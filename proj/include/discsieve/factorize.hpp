// Copyright 2026 the discsieve authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISCSIEVE_FACTORIZE_HPP
#define DISCSIEVE_FACTORIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "discsieve/integer.hpp"

namespace discsieve::maximality {

using u64 = std::uint64_t;

/// Deterministic Miller-Rabin below 2^64 (fixed witness set), BPSW with
/// extra Miller-Rabin rounds above (via GMP).
bool is_prime_u64(u64 n);
bool is_prime(const Int& n);

/// Pollard rho with Brent cycle detection; returns a nontrivial factor of
/// composite odd n > 1, or 0 if the iteration budget runs out.
u64 pollard_rho_u64(u64 n, u64 max_iters);

/// Nonzero integer with its complete prime factorization.
struct FactoredInteger {
  Int value;                                   // the original integer, != 0
  int sign = 1;                                // +1 or -1
  std::vector<std::pair<Int, unsigned>> factors;  // (p, e), p ascending

  Int reassemble() const;
  bool is_squarefree() const;
  /// Largest t with t^2 | value.
  Int square_part_root() const;
  /// Product of the primes appearing with exponent >= 2.
  Int squarefull_kernel() const;
  unsigned valuation(const Int& p) const;
};

/// Complete factorization. Trial division to 10^4, then Pollard rho with
/// Brent cycle detection; primality by deterministic Miller-Rabin below
/// 2^64 and BPSW above. Rejects 0; budget counts rho iterations.
FactoredInteger factor(const Int& n, u64 rho_budget = 1u << 26);

/// Ascending primes up to and including `bound`, by sieve of Eratosthenes.
std::vector<u64> primes_up_to(u64 bound);

/// Square-divisor analysis of |n| that never splits a cofactor known to be
/// a product of two distinct large primes: enough for squarefree tests,
/// obstruction primes and the largest square divisor, at a fraction of a
/// full factorization's cost.
struct SquareProfile {
  bool squarefree = true;
  std::vector<u64> square_primes;  // p with p^2 | n
  u64 square_part_root = 1;        // largest t with t^2 | n
  u64 squarefull_kernel = 1;       // product of square_primes
};

/// `primes` must cover cbrt(|n|); n != 0. Exact for any |n| < 2^63.
SquareProfile square_profile_u64(u64 n, const std::vector<u64>& primes);

struct SquareProfileZ {
  bool squarefree = true;
  std::vector<Int> square_primes;
  Int square_part_root = 1;
  Int squarefull_kernel = 1;
};

/// Arbitrary-precision variant backed by factor(); may throw BudgetExceeded.
SquareProfileZ square_profile(const Int& n, u64 rho_budget = 1u << 26);

}  // namespace discsieve::maximality

#endif  // DISCSIEVE_FACTORIZE_HPP
