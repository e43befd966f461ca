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

#ifndef DISCSIEVE_MAXIMALITY_HPP
#define DISCSIEVE_MAXIMALITY_HPP

#include <vector>

#include "discsieve/factorize.hpp"
#include "discsieve/integer.hpp"
#include "discsieve/monic_poly.hpp"

namespace discsieve::maximality {

struct MaximalityVerdict {
  bool is_maximal = false;
  bool squarefree_disc = false;
  std::vector<Int> obstruction_primes;  // primes where p-maximality fails
};

/// True iff no prime square divides Delta(f). Rejects Delta = 0.
bool is_squarefree_disc(const MonicPoly& f, u64 rho_budget = 1u << 26);

/// Dedekind's criterion at p: with fbar = prod gbar_i^{e_i} over F_p,
/// g* and h* monic lifts of prod gbar_i and fbar / prod gbar_i, and
/// T = (g* h* - f) / p, the order Z[x]/(f) is p-maximal iff
/// gcd(gbar*, hbar*, Tbar) = 1 in F_p[x]. Rejects Delta = 0.
bool p_maximal(const MonicPoly& f, u64 p);

/// Core of the criterion; takes f reduced mod p^2 (ascending, monic,
/// size n+1). Everything the verdict depends on survives that reduction.
bool p_maximal_mod_p2(const std::vector<u64>& f_mod_p2, u64 p);
bool p_maximal_mod_p2(const u64* f_mod_p2, std::size_t n1, u64 p);

/// Factors Delta(f), runs the criterion only at primes with p^2 | Delta,
/// and aggregates. Rejects Delta = 0; throws BudgetExceeded if the
/// factorization budget runs out (never a silent wrong answer).
MaximalityVerdict is_maximal(const MonicPoly& f, u64 rho_budget = 1u << 26);

}  // namespace discsieve::maximality

#endif  // DISCSIEVE_MAXIMALITY_HPP
