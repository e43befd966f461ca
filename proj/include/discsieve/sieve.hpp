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

#ifndef DISCSIEVE_SIEVE_HPP
#define DISCSIEVE_SIEVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "discsieve/factorize.hpp"
#include "discsieve/integer.hpp"
#include "discsieve/monic_poly.hpp"

namespace discsieve::sieve {

using maximality::FactoredInteger;
using u64 = std::uint64_t;

// The sieve classes, for a positive integer m:
//   W_m     = { f : m^2 | Delta(f), Delta(f) != 0 }
//   W_m^(1) = { f in W_m : m | Delta'(f) }
//   W_m^(2) = { f in W_m : exists r with m | f'(r), m^2 | f(r) }

struct SieveMembership {
  Int m = 1;
  bool in_wm = false;
  bool in_w1 = false;
  bool in_w2 = false;
  std::optional<Int> witness_r;  // mod m^2, present iff in_w2
};

bool member_wm(const MonicPoly& f, const FactoredInteger& m);
bool member_w1(const MonicPoly& f, const FactoredInteger& m);
SieveMembership member_w2(const MonicPoly& f, const FactoredInteger& m);
/// All three classes in one pass (Delta and Delta' computed once).
SieveMembership membership(const MonicPoly& f, const FactoredInteger& m);

/// Witness r mod p^{2e} with p^e | f'(r) and p^{2e} | f(r), or nullopt.
/// Searched by lifting the common roots of f and f' mod p through powers
/// of p; e = 0 trivially returns 0.
std::optional<Int> search_w2_prime_power(const MonicPoly& f, const Int& p,
                                         unsigned e,
                                         u64 eval_budget = 10'000'000);

/// The per-prime split of W_m membership: each p^k || m is assigned to
/// class W^(1) at exponent k or class W^(2) at exponent ceil(k/2) for odd
/// p and floor(k/2) for p = 2 (the exponent the containment proof
/// actually yields; the floor keeps m1 m2^2 >= m/2 at even 2-powers).
struct Decomposition {
  enum class Cls { kW1, kW2 };
  struct Entry {
    Int p;
    unsigned k = 0;
    Cls cls = Cls::kW1;
    unsigned w2_exponent = 0;       // meaningful for kW2
    std::optional<Int> witness;     // mod p^{2 w2_exponent}
  };
  Int m = 1;
  Int m1 = 1;
  Int m2 = 1;
  std::vector<Entry> ledger;
};

/// Requires f in W_m; a prime eligible for both classes goes to W^(1).
Decomposition decompose(const MonicPoly& f, const FactoredInteger& m);

/// Exhaustive check of the containment
///   W_{p^k} subset W_{p^k}^(1) union W_{p^e}^(2)
/// over all degree-n coefficient classes mod p^{2k}, where e = ceil(k/2)
/// for odd p and e = ceil(k/2) - 1 for p = 2. Memberships are decided at
/// an integer lift with Delta != 0 (the constant term is bumped by p^{2k}
/// until Delta is nonzero; no membership changes under that bump).
struct Lemma31Report {
  Int p;
  unsigned k = 0;
  int n = 0;
  bool even_rule = false;
  unsigned w2_exponent = 0;
  Int classes_total = 0;
  Int classes_in_wpk = 0;
  Int classes_in_w1 = 0;
  Int classes_in_w2 = 0;  // among those not already in W^(1)
  std::vector<std::vector<Int>> violations;  // coefficient classes, if any
};

struct Lemma31Options {
  Int class_ceiling = 4'000'000;  // refuse larger enumerations
  int workers = 1;
};

Lemma31Report verify_lemma31(const Int& p, unsigned k, int n,
                             const Lemma31Options& opts = {});

/// p = 2 case; k = 1 is rejected as vacuous (the W^(2) modulus is 2^0).
Lemma31Report verify_lemma31_even(unsigned k, int n,
                                  const Lemma31Options& opts = {});

}  // namespace discsieve::sieve

#endif  // DISCSIEVE_SIEVE_HPP
