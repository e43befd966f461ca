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

#ifndef DISCSIEVE_POLYROOTS_HPP
#define DISCSIEVE_POLYROOTS_HPP

#include <cstddef>
#include <vector>

#include "discsieve/highprec.hpp"

namespace discsieve::polyroots {

/// All complex roots of a monic polynomial (ascending coefficients, last
/// entry 1) by Aberth-Ehrlich simultaneous iteration. Multiple roots
/// converge linearly but still land within a cluster of the true value.
template <class R>
std::vector<highprec::Cx<R>> aberth_roots(
    const std::vector<highprec::Cx<R>>& coeffs, const R& tol,
    int max_iters = 400) {
  using C = highprec::Cx<R>;
  const std::size_t deg = coeffs.size() - 1;
  std::vector<C> z(deg);
  if (deg == 0) return z;

  // Cauchy-style inclusion radius.
  R radius(1);
  for (std::size_t i = 0; i < deg; ++i) {
    const R m = highprec::cx_abs(coeffs[i]);
    if (m + 1 > radius) radius = m + 1;
  }
  // Asymmetric starting angles avoid symmetric stalling.
  using std::atan;
  const R two_pi = 8 * atan(R(1));
  for (std::size_t k = 0; k < deg; ++k) {
    const R angle = two_pi * (R(static_cast<unsigned>(k)) + R(0.354)) /
                    R(static_cast<unsigned>(deg));
    using std::cos;
    using std::sin;
    z[k] = C(radius * cos(angle), radius * sin(angle));
  }

  std::vector<C> deriv(deg);
  for (std::size_t i = 1; i <= deg; ++i) {
    deriv[i - 1] = coeffs[i] * C(R(static_cast<unsigned>(i)), R(0));
  }

  auto eval = [](const std::vector<C>& c, const C& x) {
    C v(R(0), R(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    R worst(0);
    for (std::size_t k = 0; k < deg; ++k) {
      const C pv = eval(coeffs, z[k]);
      const C dv = eval(deriv, z[k]);
      if (pv.re == 0 && pv.im == 0) continue;
      C w = dv.re == 0 && dv.im == 0 ? C(R(0), R(0)) : pv / dv;
      C s(R(0), R(0));
      for (std::size_t j = 0; j < deg; ++j) {
        if (j == k) continue;
        C diff = z[k] - z[j];
        if (diff.re == 0 && diff.im == 0) diff = C(tol, tol);
        s += C(R(1), R(0)) / diff;
      }
      C corr;
      if (dv.re == 0 && dv.im == 0) {
        corr = C(tol * 8, tol * 8);  // nudge off a critical point
      } else {
        const C denom = C(R(1), R(0)) - w * s;
        corr = (denom.re == 0 && denom.im == 0) ? w : w / denom;
      }
      z[k] -= corr;
      const R step = highprec::cx_abs(corr) / (1 + highprec::cx_abs(z[k]));
      if (step > worst) worst = step;
    }
    if (worst < tol) break;
  }
  return z;
}

}  // namespace discsieve::polyroots

#endif  // DISCSIEVE_POLYROOTS_HPP
