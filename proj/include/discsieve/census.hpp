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

#ifndef DISCSIEVE_CENSUS_HPP
#define DISCSIEVE_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discsieve/integer.hpp"

namespace discsieve::census {

using u64 = std::uint64_t;

/// The box {f monic of degree n : H(f) < H}, i.e. |a_i| < H^i for all i,
/// optionally restricted to vanishing subleading coefficient a_1 = 0.
/// Integer endpoints resolve the strict inequality as |a_i| <= ceil(H^i)-1.
struct HeightBox {
  int n = 2;
  double height = 2.0;
  bool subleading_zero = false;

  /// B_i with |a_i| <= B_i, for i = 1..n. Exact for integral heights.
  std::vector<Int> bounds() const;
  Int total() const;
};

struct PredicateSet {
  bool squarefree = false;
  bool maximal = false;
  std::optional<Int> abs_disc_below;  // count 0 < |Delta| < threshold
  std::optional<Int> tail_m;  // count largest t with t^2 | Delta above M,
                              // plus the squarefree-m variant
  bool w_tails = false;       // also the W^(1) / W^(2) largest-m tails
};

struct EnumerateOptions {
  int workers = 0;  // 0 = default_worker_count()
  Int budget = Int(1000000000);
  u64 rho_budget = 1u << 22;
};

struct CensusReport {
  HeightBox box;
  Int total = 0;
  Int delta_zero = 0;
  std::optional<Int> squarefree;
  std::optional<Int> maximal;
  std::optional<Int> small_disc;  // 0 < |Delta| < threshold
  std::optional<Int> tail_count;
  std::optional<Int> tail_sf_count;
  std::optional<Int> tail_w1_count;
  std::optional<Int> tail_w2_count;
  Int factor_errors = 0;  // polynomials whose analysis ran out of budget
  std::optional<Int> threshold;  // echo of abs_disc_below
  std::optional<Int> tail_m;     // echo of the tail cutoff

  /// count / total as an exact rational (0 if the box is empty).
  Rat density(const Int& count) const;
};

/// Worker count from DISCSIEVE_WORKERS, else hardware concurrency.
int default_worker_count();

/// One deterministic sweep over the box evaluating every requested
/// predicate exactly. Refuses boxes larger than the budget, reporting the
/// computed total in the exception message.
CensusReport enumerate_box(const HeightBox& box, const PredicateSet& preds,
                           const EnumerateOptions& opts = {});

/// Count of f with a_1 = 0, H(f) < H and 0 < |Delta(f)| < H^{n(n-1)-kappa};
/// Delta = 0 is tallied separately in the report.
CensusReport small_disc_census(int n, double height, double kappa,
                               const EnumerateOptions& opts = {});

/// Counts of f with H(f) < H lying in some W_m with m > M: writing
/// |Delta| = s t^2 with s squarefree, membership is t > M; the
/// squarefree-m variant uses the product of primes with exponent >= 2.
CensusReport tail_census(int n, double height, const Int& tail_m,
                         bool w_tails = false,
                         const EnumerateOptions& opts = {});

/// theta(m): density of {f mod m^2 : m^2 | Delta(f)} among all coefficient
/// tuples mod m^2, exact. Optionally carries a fiber (theta_a).
struct LocalDensity {
  int n = 0;
  Int m = 1;
  Rat theta;
  std::optional<std::vector<Int>> fiber;
};

LocalDensity local_density(int n, const Int& m,
                           const EnumerateOptions& opts = {});

/// theta_a(m): density of constant terms t with m^2 | Delta_a(t), for the
/// fixed head a = (a_1, ..., a_{n-1}).
LocalDensity fiber_density(const std::vector<Int>& head, const Int& m,
                           const EnumerateOptions& opts = {});

/// Truncated Euler product prod_{p <= P} (1 - theta(p)) with a crude
/// bracket for the omitted tail from the observed theta(p) p^2 bound.
/// (The defining product for the paper's constant lives in prior work;
/// this is the working definition used for internal consistency checks.)
struct EulerProduct {
  int n = 0;
  u64 cutoff = 0;
  Rat product;
  std::vector<std::pair<u64, Rat>> terms;
  double theta_p2_max = 0.0;      // max over p <= P of theta(p) p^2
  double tail_lower_factor = 1.0; // heuristic lower bound for the tail
};

EulerProduct euler_product_lambda(int n, u64 cutoff,
                                  const EnumerateOptions& opts = {});

/// Closed form for Delta(x^n + b x + c):
///   (-1)^{n(n-1)/2} n^n c^{n-1} - (-1)^{n(n+1)/2} (n-1)^{n-1} b^n.
Int trinomial_disc(int n, const Int& b, const Int& c);

}  // namespace discsieve::census

#endif  // DISCSIEVE_CENSUS_HPP
