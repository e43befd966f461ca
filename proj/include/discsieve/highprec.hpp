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

#ifndef DISCSIEVE_HIGHPREC_HPP
#define DISCSIEVE_HIGHPREC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace discsieve::highprec {

/// Binary floating point with a Bits-wide mantissa.
template <unsigned Bits>
using FloatT = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<
        Bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using Real128 = FloatT<128>;
using Real256 = FloatT<256>;

/// Minimal complex type over a multiprecision real. std::complex is only
/// specified for the builtin floating types, so we carry our own.
template <class R>
struct Cx {
  R re{};
  R im{};

  Cx() = default;
  Cx(R r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Cx operator-(const Cx& a, const Cx& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx& operator*=(const Cx& o) { return *this = *this * o; }
};

template <class R>
R abs2(const Cx<R>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class R>
R cx_abs(const Cx<R>& z) {
  using std::sqrt;
  return sqrt(abs2(z));
}

/// Principal square root.
template <class R>
Cx<R> cx_sqrt(const Cx<R>& z) {
  using std::sqrt;
  const R zero(0);
  if (z.re == zero && z.im == zero) return {zero, zero};
  const R m = cx_abs(z);
  const R u = sqrt((m + (z.re >= zero ? z.re : R(-z.re))) / 2);
  if (z.re >= zero) {
    return {u, z.im / (2 * u)};
  }
  const R v = z.im >= zero ? u : R(-u);
  return {z.im / (2 * v), v};
}

}  // namespace discsieve::highprec

#endif  // DISCSIEVE_HIGHPREC_HPP
