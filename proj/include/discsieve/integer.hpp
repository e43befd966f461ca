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

#ifndef DISCSIEVE_INTEGER_HPP
#define DISCSIEVE_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace discsieve {

/// Arbitrary-precision signed integer; all exact arithmetic runs on this.
using Int = mpz_class;
/// Exact rational, used for interpolation and densities.
using Rat = mpq_class;

/// Raised when a bounded-effort operation (factorization, enumeration)
/// exceeds its work budget. Never a silent wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_int(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline bool divides(const Int& d, const Int& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; caller guarantees d | x.
inline Int exact_div(const Int& x, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// Least nonnegative residue of x mod m (m > 0).
inline Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int isqrt(const Int& x) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline bool fits_int64(const Int& x) {
  return x >= Int(INT64_MIN) && x <= Int(INT64_MAX);
}

inline std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer exceeds 64 bits");
  // mpz_get_si truncates to long; long is 64-bit on this platform.
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

inline std::optional<std::uint64_t> to_uint64(const Int& x) {
  // unsigned long is 64-bit on this platform, so mpz_get_ui is exact here.
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) return std::nullopt;
  return static_cast<std::uint64_t>(mpz_get_ui(x.get_mpz_t()));
}

inline std::string to_decimal(const Int& x) { return x.get_str(10); }

inline Int from_decimal(const std::string& s) {
  Int r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: " + s);
  }
  return r;
}

}  // namespace discsieve

#endif  // DISCSIEVE_INTEGER_HPP
