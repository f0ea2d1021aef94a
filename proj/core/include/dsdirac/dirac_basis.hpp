#pragma once

#include <algorithm>
#include <array>
#include <complex>

namespace dsdirac {

using Spinor = std::array<std::complex<double>, 4>;

// Spinor-basis Dirac matrices, applied to a 4-component column.
namespace gamma_matrix {

inline Spinor g0(const Spinor& p) { return {p[2], p[3], p[0], p[1]}; }

inline Spinor g1(const Spinor& p) { return {-p[3], -p[2], p[1], p[0]}; }

inline Spinor g2(const Spinor& p) {
  const std::complex<double> i(0.0, 1.0);
  return {i * p[3], -i * p[2], -i * p[1], i * p[0]};
}

inline Spinor g3(const Spinor& p) { return {-p[2], p[3], p[0], -p[1]}; }

// i sigma^{12} = (1/2) diag(1, -1, 1, -1)
inline Spinor i_sigma12(const Spinor& p) { return {0.5 * p[0], -0.5 * p[1], 0.5 * p[2], -0.5 * p[3]}; }

}  // namespace gamma_matrix

inline Spinor operator+(const Spinor& x, const Spinor& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

inline Spinor operator-(const Spinor& x, const Spinor& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

inline Spinor operator*(std::complex<double> s, const Spinor& x) {
  return {s * x[0], s * x[1], s * x[2], s * x[3]};
}

inline double max_abs(const Spinor& x) {
  double m = 0.0;
  for (const auto& v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace dsdirac
