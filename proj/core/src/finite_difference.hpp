#pragma once

namespace dsdirac::detail {

// Fourth-order central difference.
template <class F>
auto central_difference(const F& f, double x, double h) {
  const auto fm2 = f(x - 2.0 * h);
  const auto fm1 = f(x - h);
  const auto fp1 = f(x + h);
  const auto fp2 = f(x + 2.0 * h);
  return (1.0 / (12.0 * h)) * (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2);
}

}  // namespace dsdirac::detail
