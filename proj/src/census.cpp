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

#include "discsieve/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "discsieve/factorize.hpp"
#include "discsieve/maximality.hpp"
#include "discsieve/monic_poly.hpp"
#include "discsieve/polyarith.hpp"
#include "discsieve/sieve.hpp"

namespace discsieve::census {
namespace {

using u128 = unsigned __int128;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Shared worker-pool: contiguous chunks of a u64 index range, merged by
// addition, so any worker count reproduces the same report.

void parallel_chunks(u64 count, int workers, u64 chunk,
                     const std::function<void(int, u64, u64)>& body) {
  workers = std::max(1, workers);
  if (workers == 1 || count <= chunk) {
    body(0, 0, count);
    return;
  }
  std::atomic<u64> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const u64 begin = next.fetch_add(chunk);
          if (begin >= count) break;
          body(w, begin, std::min(begin + chunk, count));
        }
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

// ---------------------------------------------------------------------------
// Word-sized square-divisor analysis tuned for the enumeration inner loop:
// no allocation, division-free trial tests, early exit at p^3 > cofactor.

struct PrimeRec {
  u64 p;
  u64 cube;     // p^3 (fits: table stops at 2^21)
  u64 inv;      // p^{-1} mod 2^64 (odd p)
  u64 limit;    // UINT64_MAX / p
};

struct PrimePlan {
  std::vector<PrimeRec> recs;  // odd primes ascending
};

u64 inv_pow2_64(u64 p) {
  // Newton iteration for the inverse of odd p mod 2^64.
  u64 x = p;
  for (int i = 0; i < 5; ++i) x *= 2 - p * x;
  return x;
}

PrimePlan build_prime_plan() {
  PrimePlan plan;
  const u64 bound = 1u << 21;  // covers cbrt of any |Delta| < 2^63
  auto primes = maximality::primes_up_to(bound);
  plan.recs.reserve(primes.size());
  for (u64 p : primes) {
    if (p == 2) continue;
    plan.recs.push_back({p, p * p * p, inv_pow2_64(p), UINT64_MAX / p});
  }
  return plan;
}

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

constexpr int kMaxSquarePrimes = 16;

struct ProfileU64 {
  bool squarefree = true;
  u64 square_root_part = 1;  // largest t with t^2 | n
  u64 kernel = 1;            // product of primes with exponent >= 2
  int nsq = 0;
  u64 sq_p[kMaxSquarePrimes];
  unsigned sq_e[kMaxSquarePrimes];
};

// n != 0, |n| < 2^63. Trial division never proceeds past cbrt(cofactor);
// the remaining cofactor is 1, prime, p^2 or a product of two distinct
// primes, so square divisors are fully determined without factoring it.
ProfileU64 analyze_u64(u64 n, const PrimePlan& plan) {
  ProfileU64 out;
  u64 c = n;
  unsigned twos = 0;
  while ((c & 1) == 0) {
    c >>= 1;
    ++twos;
  }
  if (twos >= 1) {
    if (twos >= 2) {
      out.squarefree = false;
      out.kernel *= 2;
      out.square_root_part <<= (twos / 2);
      out.sq_p[out.nsq] = 2;
      out.sq_e[out.nsq] = twos;
      ++out.nsq;
    }
  }
  for (const PrimeRec& rec : plan.recs) {
    if (rec.cube > c) break;
    if (c * rec.inv > rec.limit) continue;  // p does not divide c
    unsigned e = 0;
    do {
      c *= rec.inv;  // exact division by p
      ++e;
    } while (c * rec.inv <= rec.limit);
    if (e >= 2) {
      out.squarefree = false;
      out.kernel *= rec.p;
      for (unsigned i = 0; i < e / 2; ++i) out.square_root_part *= rec.p;
      out.sq_p[out.nsq] = rec.p;
      out.sq_e[out.nsq] = e;
      ++out.nsq;
    }
  }
  if (c > 1) {
    const u64 r = isqrt_u64(c);
    if (r * r == c) {
      out.squarefree = false;
      out.kernel *= r;
      out.square_root_part *= r;
      out.sq_p[out.nsq] = r;
      out.sq_e[out.nsq] = 2;
      ++out.nsq;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Tally {
  u64 total = 0;
  u64 delta_zero = 0;
  u64 squarefree = 0;
  u64 maximal = 0;
  u64 small_disc = 0;
  u64 tail_count = 0;
  u64 tail_sf = 0;
  u64 tail_w1 = 0;
  u64 tail_w2 = 0;
  u64 factor_errors = 0;

  void merge(const Tally& o) {
    total += o.total;
    delta_zero += o.delta_zero;
    squarefree += o.squarefree;
    maximal += o.maximal;
    small_disc += o.small_disc;
    tail_count += o.tail_count;
    tail_sf += o.tail_sf;
    tail_w1 += o.tail_w1;
    tail_w2 += o.tail_w2;
    factor_errors += o.factor_errors;
  }
};

struct BoxShape {
  std::vector<Int> bounds;   // B_1..B_n
  std::vector<u64> dims;     // 1..n-1 dimensions (a_1..a_{n-1})
  u64 fibers = 1;
  i64 bn = 0;                // inner bound as int64
};

// Decode a fiber index into the head (a_1, ..., a_{n-1}).
void decode_head(const BoxShape& shape, u64 idx, bool subleading_zero,
                 std::vector<Int>& head) {
  const size_t k = shape.dims.size();
  for (size_t i = k; i-- > 0;) {
    const u64 d = shape.dims[i];
    const u64 off = idx % d;
    idx /= d;
    if (i == 0 && subleading_zero) {
      head[i] = 0;
    } else {
      head[i] = Int(static_cast<long>(off)) - shape.bounds[i];
    }
  }
}

bool coeffs_fit_i64(const std::vector<Int>& coeffs, const Int& bn,
                    std::vector<i64>& out) {
  // Require sum |c_j| bn^j < 2^62 so Horner stays in range.
  Int bound = 0;
  Int bpow = 1;
  for (const Int& c : coeffs) {
    bound += abs(c) * bpow;
    bpow *= bn;
  }
  if (bound >= Int("4611686018427387904")) return false;  // 2^62
  out.resize(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) out[i] = to_int64(coeffs[i]);
  return true;
}

// Maximality of one polynomial from its precomputed square primes; the
// head and constant term are word-sized here.
bool maximal_from_profile(const std::vector<i64>& head, i64 t,
                          const ProfileU64& prof) {
  u64 fbuf[16];
  const size_t n = head.size() + 1;
  for (int s = 0; s < prof.nsq; ++s) {
    const u64 p = prof.sq_p[s];
    if (p >= (1ull << 31)) {
      throw BudgetExceeded("census: obstruction prime beyond word size");
    }
    const u64 p2 = p * p;
    for (size_t i = 0; i < n - 1; ++i) {
      i64 v = head[i] % static_cast<i64>(p2);
      if (v < 0) v += static_cast<i64>(p2);
      fbuf[n - 1 - i] = static_cast<u64>(v);  // ascending order
    }
    i64 v = t % static_cast<i64>(p2);
    if (v < 0) v += static_cast<i64>(p2);
    fbuf[0] = static_cast<u64>(v);
    fbuf[n] = 1;
    if (!maximality::p_maximal_mod_p2(fbuf, n + 1, p)) return false;
  }
  return true;
}

struct WTailContext {
  const std::vector<Int>* head;
  u64 tail_m;
};

// W^(1)/W^(2) largest-m tails for one polynomial; slow path, opt-in.
void w_tails_for(const std::vector<Int>& head, const Int& t, const Int& delta,
                 const Int& delta_prime, u64 tail_m, Tally& tally) {
  const auto prof = maximality::square_profile(delta);
  // largest m with m^2 | Delta and m | Delta'
  Int m1 = 1;
  for (const Int& p : prof.square_primes) {
    unsigned e = 0;
    Int d = delta;
    while (divides(p, d)) {
      d = exact_div(d, p);
      ++e;
    }
    unsigned cap = e / 2;
    unsigned vdp = 0;
    if (delta_prime == 0) {
      vdp = cap;
    } else {
      Int q = delta_prime;
      while (vdp < cap && divides(p, q)) {
        q = exact_div(q, p);
        ++vdp;
      }
    }
    m1 *= pow_int(p, std::min(cap, vdp));
  }
  if (m1 > Int(static_cast<unsigned long>(tail_m))) ++tally.tail_w1;

  std::vector<Int> tail_coeffs = head;
  tail_coeffs.push_back(t);
  const MonicPoly f(tail_coeffs);
  Int m2 = 1;
  for (const Int& p : prof.square_primes) {
    unsigned e = 0;
    Int d = delta;
    while (divides(p, d)) {
      d = exact_div(d, p);
      ++e;
    }
    for (unsigned cand = e / 2; cand >= 1; --cand) {
      if (sieve::search_w2_prime_power(f, p, cand)) {
        m2 *= pow_int(p, cand);
        break;
      }
    }
  }
  if (m2 > Int(static_cast<unsigned long>(tail_m))) ++tally.tail_w2;
}

}  // namespace

std::vector<Int> HeightBox::bounds() const {
  if (n < 2) throw std::invalid_argument("HeightBox: n must be >= 2");
  if (!(height > 1.0)) throw std::invalid_argument("HeightBox: H must be > 1");
  std::vector<Int> out(static_cast<size_t>(n));
  const bool integral = height == std::floor(height) && height < 1e15;
  for (int i = 1; i <= n; ++i) {
    if (integral) {
      out[static_cast<size_t>(i - 1)] =
          pow_int(Int(static_cast<long>(height)), static_cast<unsigned long>(i)) - 1;
    } else {
      const long double v = std::pow(static_cast<long double>(height), i);
      out[static_cast<size_t>(i - 1)] =
          Int(static_cast<long>(std::ceil(v))) - 1;
    }
  }
  return out;
}

Int HeightBox::total() const {
  Int t = 1;
  const auto b = bounds();
  for (int i = 0; i < n; ++i) {
    if (i == 0 && subleading_zero) continue;
    t *= 2 * b[static_cast<size_t>(i)] + 1;
  }
  return t;
}

int default_worker_count() {
  if (const char* env = std::getenv("DISCSIEVE_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

Rat CensusReport::density(const Int& count) const {
  if (total == 0) return Rat(0);
  Rat r(count, total);
  r.canonicalize();
  return r;
}

CensusReport enumerate_box(const HeightBox& box, const PredicateSet& preds,
                           const EnumerateOptions& opts) {
  CensusReport rep;
  rep.box = box;
  rep.total = box.total();
  if (rep.total > opts.budget) {
    throw BudgetExceeded("enumerate_box: box holds " + to_decimal(rep.total) +
                         " polynomials, budget is " + to_decimal(opts.budget));
  }

  BoxShape shape;
  shape.bounds = box.bounds();
  const int n = box.n;
  for (int i = 0; i < n - 1; ++i) {
    const u64 d = (i == 0 && box.subleading_zero)
                      ? 1
                      : *to_uint64(2 * shape.bounds[static_cast<size_t>(i)] + 1);
    shape.dims.push_back(d);
    shape.fibers *= d;
  }
  const Int& bn_int = shape.bounds.back();
  const bool inner_fits = fits_int64(bn_int);
  shape.bn = inner_fits ? to_int64(bn_int) : 0;

  const bool need_profile = preds.squarefree || preds.maximal ||
                            preds.tail_m.has_value();
  const bool need_dp = preds.w_tails && preds.tail_m.has_value();
  const PrimePlan plan = need_profile ? build_prime_plan() : PrimePlan{};

  Int threshold = preds.abs_disc_below.value_or(Int(0));
  const i64 thr64 =
      preds.abs_disc_below && fits_int64(threshold) ? to_int64(threshold)
                                                    : INT64_MAX;
  const u64 tail_m = preds.tail_m ? *to_uint64(*preds.tail_m) : 0;

  const int workers =
      opts.workers > 0 ? opts.workers : default_worker_count();
  std::vector<Tally> partial(static_cast<size_t>(std::max(1, workers)) + 1);

  auto body = [&](int wid, u64 begin, u64 end) {
    Tally& tally = partial[static_cast<size_t>(wid)];
    std::vector<Int> head(static_cast<size_t>(n) - 1);
    std::vector<i64> head64(static_cast<size_t>(n) - 1);
    std::vector<i64> c64;
    std::vector<i64> dp64;
    for (u64 fiber = begin; fiber < end; ++fiber) {
      decode_head(shape, fiber, box.subleading_zero, head);
      const auto coeffs = polyarith::disc_fiber_coeffs(head);
      std::vector<Int> dp_coeffs;
      if (need_dp) dp_coeffs = polyarith::delta_prime_fiber_coeffs(head);

      bool fast = inner_fits && coeffs_fit_i64(coeffs, bn_int, c64);
      if (fast) {
        for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i) {
          if (!fits_int64(head[i])) fast = false;
        }
        if (fast) {
          for (size_t i = 0; i + 1 < static_cast<size_t>(n); ++i) {
            head64[i] = to_int64(head[i]);
          }
        }
      }

      if (fast) {
        const i64 bn = shape.bn;
        for (i64 t = -bn; t <= bn; ++t) {
          ++tally.total;
          i64 delta = 0;
          for (auto it = c64.rbegin(); it != c64.rend(); ++it) {
            delta = delta * t + *it;
          }
          if (delta == 0) {
            ++tally.delta_zero;
            continue;
          }
          const u64 ad = static_cast<u64>(delta < 0 ? -delta : delta);
          if (preds.abs_disc_below &&
              static_cast<i64>(ad) < thr64) {
            ++tally.small_disc;
          }
          if (!need_profile) continue;
          const ProfileU64 prof = analyze_u64(ad, plan);
          if (preds.squarefree && prof.squarefree) ++tally.squarefree;
          if (preds.maximal) {
            if (prof.squarefree) {
              ++tally.maximal;
            } else {
              try {
                if (maximal_from_profile(head64, t, prof)) ++tally.maximal;
              } catch (const BudgetExceeded&) {
                ++tally.factor_errors;
              }
            }
          }
          if (preds.tail_m) {
            if (prof.square_root_part > tail_m) ++tally.tail_count;
            if (prof.kernel > tail_m) ++tally.tail_sf;
            if (need_dp && !prof.squarefree) {
              Int dp = 0;
              for (auto it = dp_coeffs.rbegin(); it != dp_coeffs.rend();
                   ++it) {
                dp = dp * t + *it;
              }
              w_tails_for(head, Int(static_cast<long>(t)), Int(delta), dp,
                          tail_m, tally);
            }
          }
        }
      } else {
        // Arbitrary-precision fallback; same predicates, factor()-backed.
        for (Int t = -bn_int; t <= bn_int; ++t) {
          ++tally.total;
          Int delta = 0;
          for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            delta = delta * t + *it;
          }
          if (delta == 0) {
            ++tally.delta_zero;
            continue;
          }
          const Int ad = abs(delta);
          if (preds.abs_disc_below && ad < threshold) ++tally.small_disc;
          if (!need_profile) continue;
          try {
            const auto prof = maximality::square_profile(ad, opts.rho_budget);
            if (preds.squarefree && prof.squarefree) ++tally.squarefree;
            if (preds.maximal) {
              std::vector<Int> tail = head;
              tail.push_back(t);
              const auto verdict =
                  maximality::is_maximal(MonicPoly(tail), opts.rho_budget);
              if (verdict.is_maximal) ++tally.maximal;
            }
            if (preds.tail_m) {
              const Int m_tail(static_cast<unsigned long>(tail_m));
              if (prof.square_part_root > m_tail) ++tally.tail_count;
              if (prof.squarefull_kernel > m_tail) ++tally.tail_sf;
              if (need_dp && !prof.squarefree) {
                Int dp = 0;
                for (auto it = dp_coeffs.rbegin(); it != dp_coeffs.rend();
                     ++it) {
                  dp = dp * t + *it;
                }
                w_tails_for(head, t, delta, dp, tail_m, tally);
              }
            }
          } catch (const BudgetExceeded&) {
            ++tally.factor_errors;
          }
        }
      }
    }
  };

  parallel_chunks(shape.fibers, workers, 4, body);

  Tally sum;
  for (const auto& t : partial) sum.merge(t);
  if (Int(static_cast<unsigned long>(sum.total)) != rep.total) {
    throw std::logic_error("enumerate_box: tally disagrees with box total");
  }
  rep.delta_zero = static_cast<unsigned long>(sum.delta_zero);
  rep.factor_errors = static_cast<unsigned long>(sum.factor_errors);
  if (preds.squarefree) rep.squarefree = Int(static_cast<unsigned long>(sum.squarefree));
  if (preds.maximal) rep.maximal = Int(static_cast<unsigned long>(sum.maximal));
  if (preds.abs_disc_below) {
    rep.small_disc = Int(static_cast<unsigned long>(sum.small_disc));
    rep.threshold = threshold;
  }
  if (preds.tail_m) {
    rep.tail_count = Int(static_cast<unsigned long>(sum.tail_count));
    rep.tail_sf_count = Int(static_cast<unsigned long>(sum.tail_sf));
    rep.tail_m = *preds.tail_m;
    if (preds.w_tails) {
      rep.tail_w1_count = Int(static_cast<unsigned long>(sum.tail_w1));
      rep.tail_w2_count = Int(static_cast<unsigned long>(sum.tail_w2));
    }
  }
  return rep;
}

CensusReport small_disc_census(int n, double height, double kappa,
                               const EnumerateOptions& opts) {
  const double exponent = n * (n - 1) - kappa;
  if (!(kappa > 0.0) || exponent < 0.0) {
    throw std::invalid_argument("small_disc_census: need 0 < kappa <= n(n-1)");
  }
  HeightBox box{n, height, true};
  Int threshold;
  const bool integral = height == std::floor(height) &&
                        kappa == std::floor(kappa);
  if (integral) {
    threshold = pow_int(Int(static_cast<long>(height)),
                        static_cast<unsigned long>(exponent));
  } else {
    const long double v =
        std::pow(static_cast<long double>(height), static_cast<long double>(exponent));
    const long double fl = std::floor(v);
    threshold = Int(static_cast<long>(fl)) + (v == fl ? 0 : 1);
  }
  PredicateSet preds;
  preds.abs_disc_below = threshold;
  return enumerate_box(box, preds, opts);
}

CensusReport tail_census(int n, double height, const Int& tail_m,
                         bool w_tails, const EnumerateOptions& opts) {
  if (tail_m < 0) throw std::invalid_argument("tail_census: M must be >= 0");
  HeightBox box{n, height, false};
  PredicateSet preds;
  preds.tail_m = tail_m;
  preds.w_tails = w_tails;
  return enumerate_box(box, preds, opts);
}

// ---------------------------------------------------------------------------
// Local densities.

namespace {

u64 horner_mod(const std::vector<u64>& c, u64 x, u64 mod) {
  u64 v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    v = static_cast<u64>((static_cast<u128>(v) * x + *it) % mod);
  }
  return v;
}

// Count of roots of the fiber discriminant mod p^2 via per-root lifting:
// a simple root mod p lifts once; a degenerate root lifts p times iff the
// value already vanishes mod p^2.
u64 count_roots_mod_p2(const std::vector<u64>& c_mod_p2, u64 p) {
  const u64 p2 = p * p;
  std::vector<u64> deriv(c_mod_p2.size() > 1 ? c_mod_p2.size() - 1 : 0);
  for (size_t j = 1; j < c_mod_p2.size(); ++j) {
    deriv[j - 1] = static_cast<u64>((static_cast<u128>(c_mod_p2[j]) * j) % p);
  }
  u64 count = 0;
  for (u64 r = 0; r < p; ++r) {
    const u64 v = horner_mod(c_mod_p2, r, p2);
    if (v % p != 0) continue;
    const u64 dv = horner_mod(deriv, r % p, p);
    if (dv % p != 0) {
      ++count;
    } else if (v == 0) {
      count += p;
    }
  }
  return count;
}

}  // namespace

LocalDensity local_density(int n, const Int& m, const EnumerateOptions& opts) {
  if (n < 2) throw std::invalid_argument("local_density: n must be >= 2");
  if (m < 1) throw std::invalid_argument("local_density: m must be >= 1");
  LocalDensity out;
  out.n = n;
  out.m = m;
  if (m == 1) {
    out.theta = 1;
    return out;
  }
  const auto mu = to_uint64(m);
  if (!mu) throw BudgetExceeded("local_density: m beyond word size");
  const u64 m2 = *mu * *mu;

  // Work estimate: fibers times inner loop.
  Int fibers = 1;
  for (int i = 0; i < n - 1; ++i) fibers *= Int(static_cast<unsigned long>(m2));
  const bool prime = maximality::is_prime_u64(*mu);
  {
    Int work = fibers * Int(static_cast<unsigned long>(prime ? *mu : m2));
    if (work > opts.budget) {
      throw BudgetExceeded("local_density: work " + to_decimal(work) +
                           " exceeds budget " + to_decimal(opts.budget));
    }
  }
  const u64 fiber_count = *to_uint64(fibers);
  const int workers = opts.workers > 0 ? opts.workers : default_worker_count();
  std::vector<u64> partial(static_cast<size_t>(std::max(1, workers)) + 1, 0);

  auto body = [&](int wid, u64 begin, u64 end) {
    u64 local = 0;
    std::vector<Int> head(static_cast<size_t>(n) - 1);
    std::vector<u64> cmod;
    for (u64 fiber = begin; fiber < end; ++fiber) {
      u64 idx = fiber;
      for (size_t i = head.size(); i-- > 0;) {
        head[i] = Int(static_cast<unsigned long>(idx % m2));
        idx /= m2;
      }
      const auto coeffs = polyarith::disc_fiber_coeffs(head);
      cmod.resize(coeffs.size());
      for (size_t j = 0; j < coeffs.size(); ++j) {
        cmod[j] = *to_uint64(mod_floor(coeffs[j], Int(static_cast<unsigned long>(m2))));
      }
      if (prime) {
        local += count_roots_mod_p2(cmod, *mu);
      } else {
        for (u64 t = 0; t < m2; ++t) {
          if (horner_mod(cmod, t, m2) == 0) ++local;
        }
      }
    }
    partial[static_cast<size_t>(wid)] += local;
  };
  parallel_chunks(fiber_count, workers, 64, body);

  u64 count = 0;
  for (u64 c : partial) count += c;
  Int denom = fibers * Int(static_cast<unsigned long>(m2));
  out.theta = Rat(Int(static_cast<unsigned long>(count)), denom);
  out.theta.canonicalize();
  return out;
}

LocalDensity fiber_density(const std::vector<Int>& head, const Int& m,
                           const EnumerateOptions& opts) {
  if (head.empty()) {
    throw std::invalid_argument("fiber_density: head must be nonempty");
  }
  if (m < 1) throw std::invalid_argument("fiber_density: m must be >= 1");
  LocalDensity out;
  out.n = static_cast<int>(head.size()) + 1;
  out.m = m;
  out.fiber = head;
  if (m == 1) {
    out.theta = 1;
    return out;
  }
  const Int m2 = m * m;
  if (m2 > opts.budget) {
    throw BudgetExceeded("fiber_density: m^2 exceeds budget");
  }
  const auto coeffs = polyarith::disc_fiber_coeffs(head);
  u64 count = 0;
  for (Int t = 0; t < m2; ++t) {
    Int v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    if (mod_floor(v, m2) == 0) ++count;
  }
  out.theta = Rat(Int(static_cast<unsigned long>(count)), m2);
  out.theta.canonicalize();
  return out;
}

EulerProduct euler_product_lambda(int n, u64 cutoff,
                                  const EnumerateOptions& opts) {
  EulerProduct out;
  out.n = n;
  out.cutoff = cutoff;
  out.product = 1;
  for (u64 p : maximality::primes_up_to(cutoff)) {
    const auto ld = local_density(n, Int(static_cast<unsigned long>(p)), opts);
    out.terms.emplace_back(p, ld.theta);
    out.product *= Rat(1) - ld.theta;
    out.product.canonicalize();
    const double tp2 = ld.theta.get_d() * static_cast<double>(p) *
                       static_cast<double>(p);
    if (tp2 > out.theta_p2_max) out.theta_p2_max = tp2;
  }
  if (cutoff >= 2) {
    // theta(p) <= C / p^2 with the observed C gives
    // prod_{p > P} (1 - theta(p)) >= 1 - C sum_{k > P} 1/k(k-1) = 1 - C/P.
    out.tail_lower_factor =
        std::max(0.0, 1.0 - out.theta_p2_max / static_cast<double>(cutoff));
  }
  return out;
}

Int trinomial_disc(int n, const Int& b, const Int& c) {
  if (n < 2) throw std::invalid_argument("trinomial_disc: n must be >= 2");
  const unsigned long un = static_cast<unsigned long>(n);
  Int s1 = pow_int(Int(n), un) * pow_int(c, un - 1);
  if ((n * (n - 1) / 2) % 2 != 0) s1 = -s1;
  Int s2 = pow_int(Int(n - 1), un - 1) * pow_int(b, un);
  if ((n * (n + 1) / 2) % 2 != 0) s2 = -s2;
  return s1 - s2;
}

}  // namespace discsieve::census
