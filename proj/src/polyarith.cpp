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

#include "discsieve/polyarith.hpp"

#include <stdexcept>

namespace discsieve::polyarith {
namespace {

int true_degree(const std::vector<Int>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<size_t>(i)] != 0) return i;
  }
  return -1;
}

}  // namespace

DiffPoly::DiffPoly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty() || coeffs_.back() != 1) {
    throw std::invalid_argument("DiffPoly: must be monic");
  }
}

Int DiffPoly::operator()(const Int& y) const {
  Int v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * y + *it;
  return v;
}

Int DiffPoly::delta() const {
  const int N = degree();
  return (N % 2 == 0) ? coeffs_[0] : Int(-coeffs_[0]);
}

Int DiffPoly::delta_prime() const {
  const int N = degree();
  if (N < 1) throw std::logic_error("DiffPoly: degree below 1");
  return (N % 2 == 1) ? coeffs_[1] : Int(-coeffs_[1]);
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k;
      for (size_t i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == k) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
  const int df = true_degree(f);
  const int dg = true_degree(g);
  if (df < 0 || dg < 0) {
    throw std::invalid_argument("resultant: zero polynomial");
  }
  if (df == 0 && dg == 0) return 1;
  const size_t size = static_cast<size_t>(df + dg);
  std::vector<std::vector<Int>> syl(size, std::vector<Int>(size, Int(0)));
  // dg rows of f's coefficients (descending), then df rows of g's.
  for (int r = 0; r < dg; ++r) {
    for (int i = 0; i <= df; ++i) {
      syl[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
          f[static_cast<size_t>(df - i)];
    }
  }
  for (int r = 0; r < df; ++r) {
    for (int i = 0; i <= dg; ++i) {
      syl[static_cast<size_t>(dg + r)][static_cast<size_t>(r + i)] =
          g[static_cast<size_t>(dg - i)];
    }
  }
  return bareiss_determinant(std::move(syl));
}

Int discriminant(const MonicPoly& f) {
  const int n = f.degree();
  const Int res = resultant(f.ascending(), f.derivative_ascending());
  const int exponent = (n * (n - 1) / 2) % 2;
  return exponent == 0 ? res : Int(-res);
}

std::vector<Int> interpolate_integer(
    const std::vector<std::pair<Int, Int>>& points) {
  // Newton divided differences over exact rationals, then expansion.
  const size_t n = points.size();
  if (n == 0) return {};
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Rat dx(points[i].first - points[i - level].first);
      if (dx == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form.
  std::vector<Rat> acc{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    acc.insert(acc.begin(), Rat(0));
    const Rat x0(points[i].first);
    for (size_t j = 0; j + 1 < acc.size(); ++j) acc[j] -= x0 * acc[j + 1];
    acc[0] += dd[i];
  }
  std::vector<Int> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    acc[i].canonicalize();
    if (acc[i].get_den() != 1) {
      throw std::domain_error("interpolate: non-integral coefficient");
    }
    out[i] = acc[i].get_num();
  }
  return out;
}

DiffPoly diff_poly(const MonicPoly& f) {
  const int n = f.degree();
  const int N = n * (n - 1) / 2;
  const auto fc = f.ascending();
  std::vector<std::pair<Int, Int>> pts;
  pts.reserve(static_cast<size_t>(N) + 1);
  for (int z = 1; z <= N + 1; ++z) {
    const auto shifted = translate(f, Int(z)).ascending();
    Int r = resultant(fc, shifted);
    const Int zn = pow_int(static_cast<unsigned long>(z),
                           static_cast<unsigned long>(n));
    if (!divides(zn, r)) {
      throw std::logic_error("diff_poly: z^n does not divide Res(f, f(x+z))");
    }
    pts.emplace_back(Int(z) * Int(z), exact_div(r, zn));
  }
  auto coeffs = interpolate_integer(pts);
  coeffs.resize(static_cast<size_t>(N) + 1, Int(0));
  if (coeffs.back() != 1) {
    throw std::logic_error("diff_poly: result is not monic of degree N");
  }
  return DiffPoly(std::move(coeffs));
}

Int delta_prime(const MonicPoly& f) { return diff_poly(f).delta_prime(); }

MonicPoly translate(const MonicPoly& f, const Int& k) {
  // Horner in (x + k): descending coefficients folded one at a time.
  const int n = f.degree();
  std::vector<Int> acc{Int(1)};  // current polynomial, descending order
  for (int i = 1; i <= n; ++i) {
    // acc <- acc * (x + k) + a_i
    acc.emplace_back(0);
    for (size_t j = acc.size() - 1; j >= 1; --j) {
      acc[j] += k * acc[j - 1];
    }
    acc.back() += f.a(i);
  }
  return MonicPoly(std::vector<Int>(acc.begin() + 1, acc.end()));
}

MonicPoly depress(const MonicPoly& f) {
  const int n = f.degree();
  if (!divides(Int(n), f.a(1))) {
    throw std::invalid_argument(
        "depress: degree does not divide the subleading coefficient");
  }
  return translate(f, Int(-exact_div(f.a(1), Int(n))));
}

std::vector<Int> disc_fiber_coeffs(const std::vector<Int>& head) {
  const int n = static_cast<int>(head.size()) + 1;
  if (n < 2) throw std::invalid_argument("disc_fiber_coeffs: degree below 2");
  if (n == 3) {
    // Closed form Delta = 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2, as a
    // quadratic in c. Cross-checked against the generic path in tests.
    const Int& a = head[0];
    const Int& b = head[1];
    return {a * a * b * b - 4 * b * b * b, 18 * a * b - 4 * a * a * a,
            Int(-27)};
  }
  std::vector<std::pair<Int, Int>> pts;
  pts.reserve(static_cast<size_t>(n));
  std::vector<Int> tail = head;
  tail.emplace_back(0);
  for (int t = 0; t < n; ++t) {
    tail.back() = t;
    pts.emplace_back(Int(t), discriminant(MonicPoly(tail)));
  }
  auto c = interpolate_integer(pts);
  c.resize(static_cast<size_t>(n), Int(0));
  return c;
}

std::vector<Int> delta_prime_fiber_coeffs(const std::vector<Int>& head) {
  const int n = static_cast<int>(head.size()) + 1;
  if (n < 2) {
    throw std::invalid_argument("delta_prime_fiber_coeffs: degree below 2");
  }
  // Delta' has weighted degree n(n-1) - 2, so degree <= n-2 in the
  // constant term; n-1 interpolation nodes pin it down.
  std::vector<std::pair<Int, Int>> pts;
  pts.reserve(static_cast<size_t>(n) - 1);
  std::vector<Int> tail = head;
  tail.emplace_back(0);
  for (int t = 0; t <= n - 2; ++t) {
    tail.back() = t;
    pts.emplace_back(Int(t), delta_prime(MonicPoly(tail)));
  }
  auto c = interpolate_integer(pts);
  c.resize(static_cast<size_t>(n) - 1, Int(0));
  return c;
}

}  // namespace discsieve::polyarith
