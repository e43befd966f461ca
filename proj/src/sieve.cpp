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

#include "discsieve/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "discsieve/fppoly.hpp"
#include "discsieve/polyarith.hpp"

namespace discsieve::sieve {
namespace {

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  // m1, m2 coprime; result mod m1 m2.
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), m1.get_mpz_t(),
             m2.get_mpz_t());
  // r1 + m1 * u * (r2 - r1) mod m1 m2
  return mod_floor(r1 + m1 * u * (r2 - r1), m1 * m2);
}

unsigned w2_exponent_stated(const Int& p, unsigned k) {
  // Exponent in Lemma 3.1 as stated: ceil(k/2), minus one when p = 2.
  unsigned e = (k + 1) / 2;
  if (p == 2) e -= 1;
  return e;
}

unsigned w2_exponent_sharp(const Int& p, unsigned k) {
  // Exponent the containment proof yields; this is what keeps
  // m1 m2^2 >= m/2 across even powers of 2.
  return p == 2 ? k / 2 : (k + 1) / 2;
}

}  // namespace

bool member_wm(const MonicPoly& f, const FactoredInteger& m) {
  if (m.value < 1) throw std::invalid_argument("member_wm: m must be >= 1");
  const Int d = polyarith::discriminant(f);
  return d != 0 && divides(m.value * m.value, d);
}

bool member_w1(const MonicPoly& f, const FactoredInteger& m) {
  if (m.value < 1) throw std::invalid_argument("member_w1: m must be >= 1");
  const Int d = polyarith::discriminant(f);
  if (d == 0 || !divides(m.value * m.value, d)) return false;
  return divides(m.value, polyarith::delta_prime(f));
}

std::optional<Int> search_w2_prime_power(const MonicPoly& f, const Int& p,
                                         unsigned e, u64 eval_budget) {
  if (e == 0) return Int(0);
  const auto pu = to_uint64(p);
  if (!pu) throw BudgetExceeded("search_w2: prime exceeds word size");

  const Int pe = pow_int(p, e);
  const Int pe2 = pe * pe;  // p^{2e}
  u64 evals = 0;
  auto conditions_hold = [&](const Int& r, unsigned level) {
    if (++evals > eval_budget) throw BudgetExceeded("search_w2: eval budget");
    const Int mf = pow_int(p, std::min<unsigned>(level, 2 * e));
    const Int mdf = pow_int(p, std::min<unsigned>(level, e));
    return mod_floor(f(r), mf) == 0 && mod_floor(f.derivative_at(r), mdf) == 0;
  };

  // Level 1: common roots of f and f' mod p.
  std::vector<Int> level_set;
  {
    const u64 prime = *pu;
    fppoly::Poly fbar(static_cast<size_t>(f.degree()) + 1);
    fppoly::Poly dbar(static_cast<size_t>(f.degree()));
    const auto asc = f.ascending();
    const auto der = f.derivative_ascending();
    for (size_t i = 0; i < asc.size(); ++i) {
      fbar[i] = *to_uint64(mod_floor(asc[i], p));
    }
    for (size_t i = 0; i < der.size(); ++i) {
      dbar[i] = *to_uint64(mod_floor(der[i], p));
    }
    fppoly::trim(fbar);
    fppoly::trim(dbar);
    fppoly::Poly g = dbar.empty() ? fbar : fppoly::gcd(fbar, dbar, prime);
    if (fppoly::degree(g) < 1) return std::nullopt;
    for (u64 r : fppoly::roots(g, prime)) {
      level_set.emplace_back(static_cast<unsigned long>(r));
    }
  }

  // Lift digit by digit up to mod p^{2e}, keeping every residue class that
  // still satisfies both congruences at the truncated precision.
  Int pj = p;
  for (unsigned level = 1; level < 2 * e && !level_set.empty(); ++level) {
    std::vector<Int> next;
    for (const Int& r : level_set) {
      for (Int t = 0; t < p; ++t) {
        Int cand = r + t * pj;
        if (conditions_hold(cand, level + 1)) next.push_back(cand);
      }
    }
    level_set = std::move(next);
    pj *= p;
  }
  if (level_set.empty()) return std::nullopt;
  return *std::min_element(level_set.begin(), level_set.end());
}

SieveMembership member_w2(const MonicPoly& f, const FactoredInteger& m) {
  return membership(f, m);
}

SieveMembership membership(const MonicPoly& f, const FactoredInteger& m) {
  if (m.value < 1) throw std::invalid_argument("membership: m must be >= 1");
  SieveMembership out;
  out.m = m.value;
  const Int d = polyarith::discriminant(f);
  if (d == 0 || !divides(m.value * m.value, d)) return out;
  out.in_wm = true;
  out.in_w1 = divides(m.value, polyarith::delta_prime(f));

  // W^(2): per prime power by lifting, then CRT on the witnesses.
  Int witness = 0;
  Int modulus = 1;
  bool ok = true;
  for (const auto& [p, k] : m.factors) {
    auto r = search_w2_prime_power(f, p, k);
    if (!r) {
      ok = false;
      break;
    }
    const Int pk2 = pow_int(p, 2 * k);
    witness = crt_pair(witness, modulus, *r, pk2);
    modulus *= pk2;
  }
  if (ok) {
    out.in_w2 = true;
    out.witness_r = witness;
  }
  return out;
}

Decomposition decompose(const MonicPoly& f, const FactoredInteger& m) {
  const Int d = polyarith::discriminant(f);
  if (d == 0 || !divides(m.value * m.value, d)) {
    throw std::invalid_argument("decompose: f is not in W_m");
  }
  Decomposition out;
  out.m = m.value;
  const Int dp = polyarith::delta_prime(f);
  for (const auto& [p, k] : m.factors) {
    Decomposition::Entry entry;
    entry.p = p;
    entry.k = k;
    if (divides(pow_int(p, k), dp)) {
      entry.cls = Decomposition::Cls::kW1;
      out.m1 *= pow_int(p, k);
    } else {
      const unsigned e = w2_exponent_sharp(p, k);
      auto witness = search_w2_prime_power(f, p, e);
      if (!witness) {
        throw std::logic_error(
            "decompose: neither class holds; Lemma 3.1 containment violated");
      }
      entry.cls = Decomposition::Cls::kW2;
      entry.w2_exponent = e;
      entry.witness = *witness;
      out.m2 *= pow_int(p, e);
    }
    out.ledger.push_back(std::move(entry));
  }
  return out;
}

namespace {

struct LemmaCounters {
  u64 in_wpk = 0;
  u64 in_w1 = 0;
  u64 in_w2 = 0;
  std::vector<std::vector<Int>> violations;
};

// Shared exhaustive engine for both parities.
Lemma31Report run_lemma31(const Int& p, unsigned k, int n, unsigned w2_e,
                          bool even_rule, const Lemma31Options& opts) {
  if (n < 2) throw std::invalid_argument("verify_lemma31: n must be >= 2");
  if (k < 1) throw std::invalid_argument("verify_lemma31: k must be >= 1");
  const Int modulus = pow_int(p, 2 * k);
  Int total = 1;
  for (int i = 0; i < n; ++i) total *= modulus;
  if (total > opts.class_ceiling) {
    throw BudgetExceeded("verify_lemma31: class count " + to_decimal(total) +
                         " exceeds the enumeration ceiling");
  }
  const u64 mod_u = *to_uint64(modulus);
  const Int pk = pow_int(p, k);
  const u64 pk_u = *to_uint64(pk);
  const u64 fibers = *to_uint64(total / modulus);

  const int workers = std::max(1, opts.workers);
  std::atomic<u64> next_fiber{0};
  std::vector<LemmaCounters> partial(static_cast<size_t>(workers));

  auto worker = [&](int wid) {
    LemmaCounters& c = partial[static_cast<size_t>(wid)];
    const u64 chunk = 16;
    for (;;) {
      const u64 begin = next_fiber.fetch_add(chunk);
      if (begin >= fibers) break;
      const u64 end = std::min(begin + chunk, fibers);
      for (u64 fiber = begin; fiber < end; ++fiber) {
        // Decode fiber index into (a_1, ..., a_{n-1}) in [0, modulus)^{n-1}.
        std::vector<Int> head(static_cast<size_t>(n) - 1);
        u64 idx = fiber;
        for (int i = n - 2; i >= 0; --i) {
          head[static_cast<size_t>(i)] =
              static_cast<unsigned long>(idx % mod_u);
          idx /= mod_u;
        }
        const auto disc_c = polyarith::disc_fiber_coeffs(head);
        const auto dp_c = polyarith::delta_prime_fiber_coeffs(head);
        std::vector<u64> disc_mod(disc_c.size()), dp_mod(dp_c.size());
        for (size_t i = 0; i < disc_c.size(); ++i) {
          disc_mod[i] = *to_uint64(mod_floor(disc_c[i], modulus));
        }
        for (size_t i = 0; i < dp_c.size(); ++i) {
          dp_mod[i] = *to_uint64(mod_floor(dp_c[i], pk));
        }
        for (u64 an = 0; an < mod_u; ++an) {
          u64 dv = 0;
          for (auto it = disc_mod.rbegin(); it != disc_mod.rend(); ++it) {
            dv = (static_cast<unsigned __int128>(dv) * an + *it) % mod_u;
          }
          if (dv != 0) continue;
          ++c.in_wpk;
          u64 dpv = 0;
          const u64 an_pk = an % pk_u;
          for (auto it = dp_mod.rbegin(); it != dp_mod.rend(); ++it) {
            dpv = (static_cast<unsigned __int128>(dpv) * an_pk + *it) % pk_u;
          }
          if (dpv == 0) {
            ++c.in_w1;
            continue;
          }
          // Build an integer lift with nonzero discriminant; bumping the
          // constant term by p^{2k} changes no membership at these moduli.
          std::vector<Int> tail = head;
          tail.emplace_back(static_cast<unsigned long>(an));
          Int disc_val = 0;
          for (int tries = 0; tries <= n; ++tries) {
            disc_val = 0;
            for (auto it = disc_c.rbegin(); it != disc_c.rend(); ++it) {
              disc_val = disc_val * tail.back() + *it;
            }
            if (disc_val != 0) break;
            tail.back() += modulus;
          }
          if (disc_val == 0) {
            throw std::logic_error("verify_lemma31: no nonzero-disc lift");
          }
          const MonicPoly lift(tail);
          if (search_w2_prime_power(lift, p, w2_e)) {
            ++c.in_w2;
          } else {
            if (c.violations.size() < 16) c.violations.push_back(tail);
          }
        }
      }
    }
  };

  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          worker(w);
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Lemma31Report rep;
  rep.p = p;
  rep.k = k;
  rep.n = n;
  rep.even_rule = even_rule;
  rep.w2_exponent = w2_e;
  rep.classes_total = total;
  for (const auto& c : partial) {
    rep.classes_in_wpk += c.in_wpk;
    rep.classes_in_w1 += c.in_w1;
    rep.classes_in_w2 += c.in_w2;
    for (const auto& v : c.violations) rep.violations.push_back(v);
  }
  return rep;
}

}  // namespace

Lemma31Report verify_lemma31(const Int& p, unsigned k, int n,
                             const Lemma31Options& opts) {
  if (p < 3 || !maximality::is_prime(p)) {
    throw std::invalid_argument("verify_lemma31: p must be an odd prime");
  }
  return run_lemma31(p, k, n, w2_exponent_stated(p, k), false, opts);
}

Lemma31Report verify_lemma31_even(unsigned k, int n,
                                  const Lemma31Options& opts) {
  if (k < 2) {
    throw std::invalid_argument(
        "verify_lemma31_even: k = 1 is vacuous (the W^(2) modulus is 2^0)");
  }
  return run_lemma31(Int(2), k, n, w2_exponent_stated(Int(2), k), true, opts);
}

}  // namespace discsieve::sieve
