#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dsdirac/errors.hpp"
#include "dsdirac/flat_limit.hpp"
#include "dsdirac/jmin.hpp"
#include "oracles/oracles.hpp"

using namespace dsdirac;

namespace {

constexpr double kPi = std::numbers::pi;

double residual_at(double eps, double mass, double r, Combo c) {
  if (classify(eps, mass).regime == Regime::Threshold) {
    return minkowski_residual(eps, mass, minkowski_threshold(eps, mass, r, c),
                              minkowski_threshold_derivative(eps, mass, r, c));
  }
  return minkowski_residual(eps, mass, minkowski_jmin(eps, mass, r, c), minkowski_jmin_derivative(eps, mass, r, c));
}

// Finite-difference residual independent of the analytic derivatives.
double fd_residual(double eps, double mass, double r, Combo c) {
  const auto h = [&](double x) { return minkowski_jmin(eps, mass, x, c).h; };
  const auto g = [&](double x) { return minkowski_jmin(eps, mass, x, c).g; };
  const FlatHG v = minkowski_jmin(eps, mass, r, c);
  return std::max(std::abs(oracle::richardson(h, r, 1e-3) + (eps + mass) * v.g),
                  std::abs(oracle::richardson(g, r, 1e-3) - (eps - mass) * v.h));
}

}  // namespace

TEST_SUITE("regimes") {
  TEST_CASE("classification") {
    CHECK(classify(5, 3).regime == Regime::Oscillatory);
    CHECK(classify(5, 3).p_or_q == 4.0);
    CHECK(classify(1, 2).regime == Regime::Evanescent);
    CHECK(classify(1, 2).p_or_q == doctest::Approx(std::sqrt(3.0)));
    CHECK(classify(2, 2).regime == Regime::Threshold);
    CHECK(classify(2, 2).p_or_q == 0.0);
  }
}

TEST_SUITE("minkowski") {
  TEST_CASE("origin values") {
    const FlatHG a = minkowski_jmin(5, 3, 0.0, Combo::First);
    CHECK(a.h == 1.0);
    CHECK(a.g == 0.0);
  }

  TEST_CASE("oscillatory example") {
    const FlatHG a = minkowski_jmin(5, 3, 1.0, Combo::First);
    CHECK(a.h == doctest::Approx(-0.6536436).epsilon(1e-7));
    CHECK(a.g == doctest::Approx(-0.3784012).epsilon(1e-6));
    CHECK(fd_residual(5, 3, 1.0, Combo::First) < 1e-8);
  }

  TEST_CASE("evanescent example") {
    const double q = std::sqrt(3.0);
    const FlatHG a = minkowski_jmin(1, 2, 1.0, Combo::First);
    CHECK(a.h == doctest::Approx(std::cosh(q)));
    CHECK(a.g == doctest::Approx(-std::sinh(q) / q));
    CHECK(fd_residual(1, 2, 1.0, Combo::First) < 1e-8);
  }

  TEST_CASE("residuals in every regime and combination") {
    double worst = 0.0;
    for (auto [e, m] : {std::pair{5.0, 3.0}, {1.0, 2.0}, {2.0, 2.0}, {-3.0, 1.0}, {0.5, 0.0}, {-1.5, 1.5}}) {
      for (Combo c : {Combo::First, Combo::Second}) {
        if (e + m == 0.0 && c == Combo::Second) continue;
        for (double r = 0.0; r <= 3.0; r += 0.25) worst = std::max(worst, residual_at(e, m, r, c));
      }
    }
    CHECK(worst < 1e-10);
  }

  TEST_CASE("threshold path") {
    CHECK_THROWS_AS(minkowski_jmin(2, 2, 0.5, Combo::First), DomainError);
    CHECK_THROWS_AS(minkowski_threshold(2, 3, 0.5, Combo::First), DomainError);
    CHECK_THROWS_AS(minkowski_threshold(-2, 2, 0.5, Combo::Second), DomainError);
    const FlatHG t = minkowski_threshold(2, 2, 0.7, Combo::First);
    CHECK(t.h == 1.0);
    CHECK(t.g == 0.0);
  }

  TEST_CASE("continuity across the threshold") {
    for (double d : {1e-4, -1e-4}) {
      const FlatHG a = minkowski_jmin(2.0 + d, 2.0, 0.8, Combo::First);
      const FlatHG t = minkowski_threshold(2.0, 2.0, 0.8, Combo::First);
      CHECK(std::abs(a.h - t.h) < 1e-3);
      CHECK(std::abs(a.g - t.g) < 1e-3);
      // the second combination divided by p tends to the threshold one
      const double k = classify(2.0 + d, 2.0).p_or_q;
      const FlatHG b = minkowski_jmin(2.0 + d, 2.0, 0.8, Combo::Second);
      const FlatHG s = minkowski_threshold(2.0, 2.0, 0.8, Combo::Second);
      CHECK(std::abs(b.h / k - s.h) < 1e-3);
      CHECK(std::abs(std::abs(b.g / k) - std::abs(s.g)) < 1e-3);
    }
  }
}

TEST_SUITE("bound profile") {
  TEST_CASE("values") {
    CHECK(flat_bound_profile(0.5, 1.0, 0.0) == 1.0);
    CHECK(flat_bound_profile(0.0, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(flat_bound_profile(3.0, 5.0, 0.5) == doctest::Approx(std::exp(-2.0)));
    CHECK_THROWS_AS(flat_bound_profile(2.0, 1.0, 0.5), DomainError);
  }

  TEST_CASE("monotone decreasing") {
    double last = 2.0;
    for (double r = 0.0; r < 5.0; r += 0.1) {
      const double v = flat_bound_profile(0.3, 1.2, r);
      CHECK(v < last);
      CHECK(v > 0.0);
      last = v;
    }
  }
}

TEST_SUITE("physical units") {
  TEST_CASE("natural units reproduce the j_min parameters") {
    for (auto [E, m] : {std::pair{1.3, 0.4}, {-0.7, 2.0}, {0.0, 1.0}}) {
      const JminParamPair pp = physical_params({E, m});
      const HypParams f = jmin_f_params(E, m), g = jmin_g_params(E, m);
      CHECK(std::abs(pp.f.a() - f.a()) < 1e-15);
      CHECK(std::abs(pp.f.b() - f.b()) < 1e-15);
      CHECK(std::abs(pp.f.c() - f.c()) < 1e-15);
      CHECK(std::abs(pp.g.a() - g.a()) < 1e-15);
      CHECK(std::abs(pp.g.b() - g.b()) < 1e-15);
    }
  }

  TEST_CASE("zero energy gives mirrored real parts") {
    const JminParamPair pp = physical_params({0.0, 1.5});
    CHECK(pp.f.a().real() == 0.25);
    CHECK(pp.f.b().real() == -0.25);
    CHECK(pp.f.a().imag() == doctest::Approx(-pp.f.b().imag()));
  }

  TEST_CASE("imaginary parts scale with the curvature radius") {
    const JminParamPair a = physical_params({1.1, 0.6, 1.0, 1.0, 3.0});
    const JminParamPair b = physical_params({1.1, 0.6, 1.0, 1.0, 6.0});
    CHECK(b.f.a().imag() == doctest::Approx(2.0 * a.f.a().imag()));
    CHECK(b.f.b().imag() == doctest::Approx(2.0 * a.f.b().imag()));
    CHECK(b.f.a().real() == a.f.a().real());
  }

  TEST_CASE("dimensionless combinations") {
    const PhysicalUnits u{2.0, 3.0, 4.0, 0.5, 10.0};
    CHECK(u.epsilon() == doctest::Approx(2.0 * 10.0 / (4.0 * 0.5)));
    CHECK(u.mass() == doctest::Approx(3.0 * 4.0 * 10.0 / 0.5));
    CHECK_THROWS_AS(physical_params({1.0, 1.0, 0.0}), DomainError);
  }
}

TEST_SUITE("flat limit") {
  TEST_CASE("first series term tends to -(pR)^2/2") {
    const double E = 1.5, m = 0.5, R = 1.0, p = std::sqrt(E * E - m * m);
    for (double rho : {1e3, 1e4}) {
      const HypParams f = jmin_f_params(E * rho, m * rho);
      const cplx t1 = f.a() * f.b() / f.c() * (R * R / (rho * rho));
      CHECK(std::abs(t1 + p * p * R * R / 2.0) < 2.0 / rho);
    }
  }

  TEST_CASE("quarter period at rho = 1000 R") {
    const double m = 0.5, R = 1.0;
    const double p = kPi / 2 / R, E = std::sqrt(p * p + m * m);
    const LimitStudy s = limit_check(E, m, R, {1e3 * R});
    CHECK(s.points[0].cos_error < 1e-2);
  }

  TEST_CASE("errors shrink with the curvature radius") {
    const LimitStudy s = limit_check(1.5, 0.5, 1.0, {10, 20, 40, 80, 160});
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      CHECK(s.points[i].cos_error < s.points[i - 1].cos_error);
      CHECK(s.points[i].sin_error < s.points[i - 1].sin_error);
    }
    // the complex deviation is led by an imaginary O(1/rho) term, the real parts converge at O(1/rho^2)
    CHECK(s.order_cos == doctest::Approx(1.0).epsilon(0.05));
    CHECK(s.order_sin == doctest::Approx(1.0).epsilon(0.05));
    CHECK(s.order_cos_real == doctest::Approx(2.0).epsilon(0.05));
    CHECK(s.order_sin_real == doctest::Approx(2.0).epsilon(0.05));
    const double ratio = s.points[2].cos_error_real / s.points[3].cos_error_real;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(limit_check(0.5, 1.0, 1.0, {10}), DomainError);
    CHECK_THROWS_AS(limit_check(1.5, 1.0, 1.0, {0.5}), DomainError);
  }

  TEST_CASE("fitted order on exact power laws") {
    CHECK(fitted_order({1, 2, 4, 8}, {1, 0.25, 0.0625, 0.015625}) == doctest::Approx(2.0));
    CHECK(fitted_order({10, 100}, {1e-1, 1e-2}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(fitted_order({1}, {1}), DomainError);
    CHECK_THROWS_AS(fitted_order({1, 2}, {0, 1}), DomainError);
  }
}
