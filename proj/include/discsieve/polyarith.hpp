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

#ifndef DISCSIEVE_POLYARITH_HPP
#define DISCSIEVE_POLYARITH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "discsieve/integer.hpp"
#include "discsieve/monic_poly.hpp"

namespace discsieve::polyarith {

/// D(y) = prod_{i<j} (y - (r_i - r_j)^2) for the roots r_i of f; an integer
/// polynomial of degree N = n(n-1)/2. Both Delta and Delta' are read off it:
///   D(0) = (-1)^N Delta(f),   (-1)^{N-1} [y^1] D = Delta'(f).
class DiffPoly {
 public:
  explicit DiffPoly(std::vector<Int> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of y^k.
  const Int& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  const std::vector<Int>& ascending() const { return coeffs_; }

  Int operator()(const Int& y) const;

  Int delta() const;        // (-1)^N * D(0)
  Int delta_prime() const;  // (-1)^{N-1} * [y^1] D

 private:
  std::vector<Int> coeffs_;  // ascending, monic
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The matrix is consumed. All intermediate values are exact integers.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

/// Res(f, g) of two integer polynomials given in ascending coefficient
/// order, via the Sylvester matrix. Zero polynomials are rejected.
Int resultant(const std::vector<Int>& f, const std::vector<Int>& g);

/// Delta(f) = (-1)^{n(n-1)/2} Res(f, f'). Zero is a valid return.
Int discriminant(const MonicPoly& f);

/// The difference polynomial D(y), computed exactly: R(z) = Res_x(f(x),
/// f(x+z)) equals z^n D(z^2), so D is interpolated from R(1), ..., R(N+1).
DiffPoly diff_poly(const MonicPoly& f);

/// Delta'(f) = sum_{i<j} Delta(f) / (r_i - r_j)^2, as the exact integer
/// polynomial in the coefficients (extracted from diff_poly).
Int delta_prime(const MonicPoly& f);

/// g(x) = f(x + k); discriminant and Delta' are invariant under this.
MonicPoly translate(const MonicPoly& f, const Int& k);

/// f(x - a_1/n); requires n | a_1, else throws std::invalid_argument.
MonicPoly depress(const MonicPoly& f);

/// Exact polynomial interpolation through (x_i, y_i) with distinct x_i.
/// Throws std::domain_error if the result is not integral.
std::vector<Int> interpolate_integer(
    const std::vector<std::pair<Int, Int>>& points);

/// Coefficients (ascending in t) of Delta(x^n + a_1 x^{n-1} + ... + t),
/// a polynomial of degree n-1 in the constant term t. `head` is
/// (a_1, ..., a_{n-1}); n = head.size() + 1.
std::vector<Int> disc_fiber_coeffs(const std::vector<Int>& head);

/// Same fibering for Delta', which has degree at most n-2 in t.
std::vector<Int> delta_prime_fiber_coeffs(const std::vector<Int>& head);

}  // namespace discsieve::polyarith

#endif  // DISCSIEVE_POLYARITH_HPP
