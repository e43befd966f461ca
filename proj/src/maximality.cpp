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

#include "discsieve/maximality.hpp"

#include <stdexcept>

#include "discsieve/fppoly.hpp"
#include "discsieve/polyarith.hpp"

namespace discsieve::maximality {
namespace {

using u128 = unsigned __int128;

std::vector<u64> reduce_mod(const MonicPoly& f, const Int& m) {
  const int n = f.degree();
  std::vector<u64> out(static_cast<size_t>(n) + 1);
  const auto asc = f.ascending();
  for (size_t i = 0; i < asc.size(); ++i) {
    out[i] = *to_uint64(mod_floor(asc[i], m));
  }
  return out;
}

}  // namespace

bool p_maximal_mod_p2(const std::vector<u64>& f_mod_p2, u64 p) {
  return p_maximal_mod_p2(f_mod_p2.data(), f_mod_p2.size(), p);
}

bool p_maximal_mod_p2(const u64* f_mod_p2, std::size_t n1, u64 p) {
  const u64 p2 = p * p;
  fppoly::Poly fbar(n1);
  for (size_t i = 0; i < n1; ++i) fbar[i] = f_mod_p2[i] % p;
  fppoly::trim(fbar);

  const fppoly::Poly gstar = fppoly::radical(fbar, p);
  if (fppoly::is_one(gstar)) {
    // fbar is a unit only if f degenerated mod p; cannot happen, f monic.
    throw std::logic_error("p_maximal: trivial radical");
  }
  const fppoly::Poly hstar = fppoly::divexact(fbar, gstar, p);
  if (fppoly::is_one(fppoly::gcd(gstar, hstar, p))) {
    // fbar squarefree: p-maximal without looking at T.
    return true;
  }

  // X = g* h* - f mod p^2 with lifts in [0, p); then Tbar = (X / p) mod p.
  std::vector<u64> prod(n1, 0);
  for (size_t i = 0; i < gstar.size(); ++i) {
    if (gstar[i] == 0) continue;
    for (size_t j = 0; j < hstar.size(); ++j) {
      prod[i + j] =
          static_cast<u64>((static_cast<u128>(gstar[i]) * hstar[j] + prod[i + j]) % p2);
    }
  }
  fppoly::Poly tbar(n1, 0);
  for (size_t i = 0; i < n1; ++i) {
    u64 x = prod[i] >= f_mod_p2[i] ? prod[i] - f_mod_p2[i]
                                   : prod[i] + p2 - f_mod_p2[i];
    // p | X is forced by g* h* == f mod p.
    tbar[i] = (x / p) % p;
  }
  fppoly::trim(tbar);

  fppoly::Poly g = fppoly::gcd(gstar, hstar, p);
  g = fppoly::gcd(g, tbar, p);
  return fppoly::is_one(g) || g.empty();
}

bool p_maximal(const MonicPoly& f, u64 p) {
  if (p < 2 || p >= (1ull << 31)) {
    throw std::invalid_argument("p_maximal: p out of word-sized range");
  }
  if (polyarith::discriminant(f) == 0) {
    throw std::invalid_argument("p_maximal: zero discriminant");
  }
  return p_maximal_mod_p2(reduce_mod(f, Int(static_cast<unsigned long>(p * p))), p);
}

bool is_squarefree_disc(const MonicPoly& f, u64 rho_budget) {
  const Int d = polyarith::discriminant(f);
  if (d == 0) {
    throw std::invalid_argument("is_squarefree_disc: zero discriminant");
  }
  return square_profile(d, rho_budget).squarefree;
}

MaximalityVerdict is_maximal(const MonicPoly& f, u64 rho_budget) {
  const Int d = polyarith::discriminant(f);
  if (d == 0) throw std::invalid_argument("is_maximal: zero discriminant");
  const SquareProfileZ prof = square_profile(d, rho_budget);
  MaximalityVerdict v;
  v.squarefree_disc = prof.squarefree;
  if (prof.squarefree) {
    // index^2 | Delta, so squarefree discriminant forces maximality.
    v.is_maximal = true;
    return v;
  }
  for (const Int& p : prof.square_primes) {
    const auto pu = to_uint64(p);
    if (!pu || *pu >= (1ull << 31)) {
      throw BudgetExceeded("is_maximal: obstruction prime beyond word size");
    }
    if (!p_maximal_mod_p2(reduce_mod(f, p * p), *pu)) {
      v.obstruction_primes.push_back(p);
    }
  }
  v.is_maximal = v.obstruction_primes.empty();
  return v;
}

}  // namespace discsieve::maximality
