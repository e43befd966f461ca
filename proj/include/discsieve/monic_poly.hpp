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

#ifndef DISCSIEVE_MONIC_POLY_HPP
#define DISCSIEVE_MONIC_POLY_HPP

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "discsieve/integer.hpp"

namespace discsieve {

/// Monic integer polynomial f(x) = x^n + a_1 x^{n-1} + ... + a_n, n >= 2.
/// Immutable after construction; safe to share across threads.
class MonicPoly {
 public:
  /// tail holds (a_1, ..., a_n); the leading coefficient 1 is implicit.
  explicit MonicPoly(std::vector<Int> tail) : tail_(std::move(tail)) {
    if (tail_.size() < 2) {
      throw std::invalid_argument("MonicPoly: degree must be at least 2");
    }
  }

  MonicPoly(std::initializer_list<long> tail)
      : MonicPoly(std::vector<Int>(tail.begin(), tail.end())) {}

  int degree() const { return static_cast<int>(tail_.size()); }

  /// Coefficient a_i of x^{n-i}, 1-based as in a_1,...,a_n.
  const Int& a(int i) const { return tail_.at(static_cast<size_t>(i) - 1); }

  const std::vector<Int>& tail() const { return tail_; }

  /// Coefficients in ascending order: (a_n, a_{n-1}, ..., a_1, 1).
  std::vector<Int> ascending() const {
    std::vector<Int> c(tail_.rbegin(), tail_.rend());
    c.emplace_back(1);
    return c;
  }

  Int operator()(const Int& x) const {
    Int v = 1;
    for (const Int& ai : tail_) v = v * x + ai;
    return v;
  }

  /// f'(x) in ascending coefficient order.
  std::vector<Int> derivative_ascending() const {
    const int n = degree();
    std::vector<Int> d(static_cast<size_t>(n));
    // f = sum_{i=0..n} a_{n-i} x^i with a_0 = 1.
    for (int i = 1; i <= n; ++i) {
      const Int& coeff = (i == n) ? Int(1) : tail_[static_cast<size_t>(n - 1 - i)];
      d[static_cast<size_t>(i - 1)] = Int(i) * coeff;
    }
    return d;
  }

  Int derivative_at(const Int& x) const {
    const auto d = derivative_ascending();
    Int v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * x + *it;
    return v;
  }

  /// Height H(f) = max |a_i|^{1/i}, as a double approximation.
  double height() const {
    double h = 0.0;
    for (int i = 1; i <= degree(); ++i) {
      double m = std::pow(std::abs(a(i).get_d()), 1.0 / i);
      if (m > h) h = m;
    }
    return h;
  }

  /// Exact test for H(f) < H with integer H: |a_i| < H^i for every i.
  bool height_below(const Int& bound) const {
    Int hi = 1;
    for (int i = 1; i <= degree(); ++i) {
      hi *= bound;
      if (abs(a(i)) >= hi) return false;
    }
    return true;
  }

  bool operator==(const MonicPoly& o) const { return tail_ == o.tail_; }

 private:
  std::vector<Int> tail_;
};

}  // namespace discsieve

#endif  // DISCSIEVE_MONIC_POLY_HPP
