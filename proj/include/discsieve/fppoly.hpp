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

#ifndef DISCSIEVE_FPPOLY_HPP
#define DISCSIEVE_FPPOLY_HPP

#include <cstdint>
#include <vector>

namespace discsieve::fppoly {

// Dense polynomials over F_p for word-sized prime p, ascending coefficients,
// no trailing zeros. Desk scale: degrees stay below ~10, schoolbook
// arithmetic throughout.

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 base, u64 e, u64 p);
u64 inv_mod(u64 a, u64 p);  // p prime, a != 0 mod p

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial
bool is_one(const Poly& f);

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);

/// Remainder of a mod b (b nonzero).
Poly rem(const Poly& a, const Poly& b, u64 p);
/// Exact quotient a / b; remainder must vanish.
Poly divexact(const Poly& a, const Poly& b, u64 p);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b, u64 p);

Poly derivative(const Poly& f, u64 p);
u64 eval(const Poly& f, u64 x, u64 p);

/// Product of the distinct irreducible factors of f (monic). Correct in
/// characteristic p: exponents divisible by p are handled through p-th
/// root extraction rather than gcd(f, f') alone.
Poly radical(const Poly& f, u64 p);

/// x^e mod (f, p) for monic f of degree >= 1.
Poly xpow_mod(u64 e, const Poly& f, u64 p);

/// All roots of f in F_p, ascending. f need not be squarefree.
std::vector<u64> roots(const Poly& f, u64 p);

}  // namespace discsieve::fppoly

#endif  // DISCSIEVE_FPPOLY_HPP
