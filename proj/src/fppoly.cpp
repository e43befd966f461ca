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

#include "discsieve/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace discsieve::fppoly {

u64 powmod(u64 base, u64 e, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  // Extended Euclid; valid for any p > 1 with gcd(a, p) = 1.
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
  long long res = t % static_cast<long long>(p);
  if (res < 0) res += static_cast<long long>(p);
  return static_cast<u64>(res);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v >= p ? v - p : v;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 av = i < a.size() ? a[i] : 0;
    u64 bv = i < b.size() ? b[i] : 0;
    r[i] = av >= bv ? av - bv : av + p - bv;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  c %= p;
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
  trim(r);
  return r;
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw std::invalid_argument("rem: division by zero");
  Poly r = a;
  trim(r);
  const u64 lead_inv = inv_mod(b.back(), p);
  while (r.size() >= b.size()) {
    u64 factor = mulmod(r.back(), lead_inv, p);
    size_t shift = r.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      u64 t = mulmod(factor, b[i], p);
      u64& ri = r[shift + i];
      ri = ri >= t ? ri - t : ri + p - t;
    }
    trim(r);
    if (r.size() < b.size()) break;
  }
  return r;
}

Poly divexact(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw std::invalid_argument("divexact: division by zero");
  Poly r = a;
  trim(r);
  if (r.empty()) return {};
  Poly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const u64 lead_inv = inv_mod(b.back(), p);
  while (r.size() >= b.size()) {
    u64 factor = mulmod(r.back(), lead_inv, p);
    size_t shift = r.size() - b.size();
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) {
      u64 t = mulmod(factor, b[i], p);
      u64& ri = r[shift + i];
      ri = ri >= t ? ri - t : ri + p - t;
    }
    trim(r);
  }
  if (!r.empty()) throw std::logic_error("divexact: nonzero remainder");
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = scale(a, inv_mod(a.back(), p), p);
  return a;
}

Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) {
    d[i - 1] = mulmod(f[i], i % p, p);
  }
  trim(d);
  return d;
}

u64 eval(const Poly& f, u64 x, u64 p) {
  u64 v = 0;
  x %= p;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    v = (mulmod(v, x, p) + *it) % p;
  }
  return v;
}

namespace {

// Joins two squarefree monic polynomials into their squarefree lcm.
Poly squarefree_join(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly g = gcd(a, b, p);
  return mul(a, divexact(b, g, p), p);
}

}  // namespace

Poly radical(const Poly& f, u64 p) {
  Poly u = f;
  trim(u);
  if (u.empty()) throw std::invalid_argument("radical: zero polynomial");
  if (u.back() != 1) u = scale(u, inv_mod(u.back(), p), p);
  if (degree(u) == 0) return {1};
  Poly d = derivative(u, p);
  if (d.empty()) {
    // u = v(x^p) = v(x)^p over F_p; pull out the p-th root.
    Poly v((u.size() - 1) / p + 1, 0);
    for (size_t i = 0; i < u.size(); i += p) v[i / p] = u[i];
    return radical(v, p);
  }
  Poly g = gcd(u, d, p);
  if (is_one(g)) return u;  // already squarefree
  Poly w = divexact(u, g, p);
  // w carries every factor whose exponent is not divisible by p;
  // the rest hides in g and is recovered recursively.
  return squarefree_join(radical(w, p), radical(g, p), p);
}

Poly xpow_mod(u64 e, const Poly& f, u64 p) {
  if (degree(f) < 1) throw std::invalid_argument("xpow_mod: constant modulus");
  Poly result{1};
  Poly base{0, 1};
  base = rem(base, f, p);
  while (e) {
    if (e & 1) result = rem(mul(result, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

namespace {

// Equal-degree-1 splitting of a monic product of distinct linear factors.
void collect_linear_roots(const Poly& f, u64 p, std::vector<u64>& out,
                          u64& state) {
  const int d = degree(f);
  if (d <= 0) return;
  if (d == 1) {
    // x + c -> root -c
    out.push_back(f[0] == 0 ? 0 : p - f[0]);
    return;
  }
  if (p == 2) {
    // Only candidates are 0 and 1; d <= 2 here.
    for (u64 r = 0; r < 2; ++r) {
      if (eval(f, r, p) == 0) out.push_back(r);
    }
    return;
  }
  // Random shift delta; gcd((x+delta)^((p-1)/2) - 1, f) splits f.
  for (;;) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    u64 delta = (state >> 11) % p;
    Poly shifted{delta, 1};
    // (x + delta)^((p-1)/2) mod f
    Poly h{1};
    Poly base = rem(shifted, f, p);
    u64 e = (p - 1) / 2;
    while (e) {
      if (e & 1) h = rem(mul(h, base, p), f, p);
      base = rem(mul(base, base, p), f, p);
      e >>= 1;
    }
    Poly h1 = h;
    if (h1.empty()) {
      h1 = Poly{p - 1};
    } else {
      h1[0] = (h1[0] + p - 1) % p;
      trim(h1);
    }
    Poly g = gcd(f, h1, p);
    const int dg = degree(g);
    if (dg > 0 && dg < d) {
      collect_linear_roots(g, p, out, state);
      collect_linear_roots(divexact(f, g, p), p, out, state);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const Poly& f, u64 p) {
  std::vector<u64> out;
  Poly g = f;
  trim(g);
  if (g.empty()) throw std::invalid_argument("roots: zero polynomial");
  if (degree(g) == 0) return out;
  if (p <= 64) {
    for (u64 r = 0; r < p; ++r) {
      if (eval(g, r, p) == 0) out.push_back(r);
    }
    return out;
  }
  if (g.back() != 1) g = scale(g, inv_mod(g.back(), p), p);
  // Distinct roots = roots of gcd(f, x^p - x).
  Poly xp = xpow_mod(p, g, p);
  Poly x_only{0, 1};
  Poly lin_part = gcd(g, sub(xp, x_only, p), p);
  if (degree(lin_part) <= 0) return out;
  u64 state = 0x9e3779b97f4a7c15ULL ^ (p * 0x2545f4914f6cdd1dULL);
  collect_linear_roots(lin_part, p, out, state);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace discsieve::fppoly
