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

#include "discsieve/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace discsieve::maximality {
namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // This witness set decides primality for all n < 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n <= 1) return false;
  if (auto u = to_uint64(n)) return is_prime_u64(*u);
  // BPSW plus Miller-Rabin rounds; no pseudoprime is known below 2^128.
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

u64 pollard_rho_u64(u64 n, u64 max_iters) {
  // Brent's variant of Pollard rho with batched gcds.
  for (u64 c = 1; max_iters > 0; ++c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = y;
    const u64 m = 128;
    u64 r = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1 && max_iters > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && d == 1) {
        ys = y;
        const u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        if (max_iters < lim) {
          max_iters = 0;
        } else {
          max_iters -= lim;
        }
        d = std::gcd(q, n);
        k += m;
      }
      r <<= 1;
    }
    if (d == n) {
      // Backtrack one step at a time to find the factor.
      d = 1;
      while (d == 1) {
        ys = step(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n && d != 1) return d;
  }
  return 0;
}

namespace {

void factor_u64_into(u64 n, u64 rho_budget,
                     std::vector<std::pair<Int, unsigned>>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.emplace_back(Int(static_cast<unsigned long>(n)), 1u);
    return;
  }
  u64 d = 0;
  const u64 root = isqrt_u64(n);
  if (root * root == n) {
    d = root;
  } else {
    d = pollard_rho_u64(n, rho_budget);
    if (d == 0) throw BudgetExceeded("pollard rho budget exhausted");
  }
  factor_u64_into(d, rho_budget, out);
  factor_u64_into(n / d, rho_budget, out);
}

void factor_mpz_into(const Int& n, u64 rho_budget,
                     std::vector<std::pair<Int, unsigned>>& out) {
  if (n == 1) return;
  if (auto u = to_uint64(n)) {
    factor_u64_into(*u, rho_budget, out);
    return;
  }
  if (is_prime(n)) {
    out.emplace_back(n, 1u);
    return;
  }
  if (is_perfect_square(n)) {
    const Int r = isqrt(n);
    factor_mpz_into(r, rho_budget, out);
    factor_mpz_into(r, rho_budget, out);
    return;
  }
  // Pollard rho over mpz, budgeted.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    u64 iters = 0;
    while (d == 1) {
      if (++iters > rho_budget) throw BudgetExceeded("mpz rho budget");
      x = mod_floor(x * x + c, n);
      y = mod_floor(y * y + c, n);
      y = mod_floor(y * y + c, n);
      Int diff = abs(x - y);
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) {
      factor_mpz_into(d, rho_budget, out);
      factor_mpz_into(exact_div(n, d), rho_budget, out);
      return;
    }
  }
}

}  // namespace

Int FactoredInteger::reassemble() const {
  Int v = sign;
  for (const auto& [p, e] : factors) v *= pow_int(p, e);
  return v;
}

bool FactoredInteger::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const auto& pe) { return pe.second < 2; });
}

Int FactoredInteger::square_part_root() const {
  Int t = 1;
  for (const auto& [p, e] : factors) {
    if (e >= 2) t *= pow_int(p, e / 2);
  }
  return t;
}

Int FactoredInteger::squarefull_kernel() const {
  Int s = 1;
  for (const auto& [p, e] : factors) {
    if (e >= 2) s *= p;
  }
  return s;
}

unsigned FactoredInteger::valuation(const Int& p) const {
  for (const auto& [q, e] : factors) {
    if (q == p) return e;
  }
  return 0;
}

FactoredInteger factor(const Int& n, u64 rho_budget) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  FactoredInteger out;
  out.value = n;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  // Trial division to 10^4 keeps rho off desk-scale smooth parts.
  for (u64 p = 2; p <= 10000 && m > 1; p == 2 ? p = 3 : p += 2) {
    if (!divides(Int(static_cast<unsigned long>(p)), m)) continue;
    unsigned e = 0;
    do {
      m = exact_div(m, Int(static_cast<unsigned long>(p)));
      ++e;
    } while (divides(Int(static_cast<unsigned long>(p)), m));
    out.factors.emplace_back(Int(static_cast<unsigned long>(p)), e);
  }
  if (m > 1) {
    std::vector<std::pair<Int, unsigned>> rest;
    factor_mpz_into(m, rho_budget, rest);
    std::sort(rest.begin(), rest.end());
    for (auto& [p, e] : rest) {
      if (!out.factors.empty() && out.factors.back().first == p) {
        out.factors.back().second += e;
      } else {
        out.factors.emplace_back(p, e);
      }
    }
  }
  return out;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

SquareProfile square_profile_u64(u64 n, const std::vector<u64>& primes) {
  SquareProfile out;
  u64 c = n;
  if (c == 0) throw std::invalid_argument("square_profile: zero");
  for (u64 p : primes) {
    if (p * p * p > c) break;
    if (c % p != 0) continue;
    unsigned e = 0;
    do {
      c /= p;
      ++e;
    } while (c % p == 0);
    if (e >= 2) {
      out.squarefree = false;
      out.square_primes.push_back(p);
      out.squarefull_kernel *= p;
      for (unsigned i = 0; i < e / 2; ++i) out.square_part_root *= p;
    }
  }
  // Remaining cofactor has at most two prime factors, both above cbrt:
  // 1, a prime, p*q with p != q (all exponent 1), or p^2.
  if (c > 1) {
    const u64 r = isqrt_u64(c);
    if (r * r == c) {
      out.squarefree = false;
      out.square_primes.push_back(r);
      out.squarefull_kernel *= r;
      out.square_part_root *= r;
    }
  }
  return out;
}

SquareProfileZ square_profile(const Int& n, u64 rho_budget) {
  const FactoredInteger f = factor(n, rho_budget);
  SquareProfileZ out;
  out.squarefree = f.is_squarefree();
  out.square_part_root = f.square_part_root();
  out.squarefull_kernel = f.squarefull_kernel();
  for (const auto& [p, e] : f.factors) {
    if (e >= 2) out.square_primes.push_back(p);
  }
  return out;
}

}  // namespace discsieve::maximality
