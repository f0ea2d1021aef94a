#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dsdirac/errors.hpp"
#include "dsdirac/radial.hpp"
#include "oracles/oracles.hpp"

using namespace dsdirac;
using oracle::C;

namespace {

const cplx I(0.0, 1.0);

struct Params {
  double eps, mass, nu;
};

std::vector<Params> random_params(unsigned seed, int n) {
  oracle::Draws d(seed);
  std::vector<Params> out;
  for (int i = 0; i < n; ++i) out.push_back({d.uniform(-3.0, 3.0), d.uniform(0.0, 3.0), d.uniform(0.0, 4.0)});
  return out;
}

// Gauss series evaluation of the regular families straight from their exponents and parameters.
C regular_f_direct(const Params& p, double z) {
  const C s = (I * p.mass + 0.5) / 2.0;
  const C base = (1.0 + p.nu - I * p.eps) / 2.0;
  return std::pow(z, (1.0 + p.nu) / 2) * std::pow(1.0 - z, -I * p.eps / 2.0) *
         oracle::brute_2f1(base + s, base - s, p.nu + 1.5, z);
}

// Second representation: (1-z)^((1 + i eps)/2) F(alpha, beta; nu + 3/2; z).
C regular_f_second(const Params& p, double z) {
  const C s = (I * p.mass + 0.5) / 2.0;
  const C base = (2.0 + p.nu + I * p.eps) / 2.0;
  return std::pow(z, (1.0 + p.nu) / 2) * std::pow(1.0 - z, (1.0 + I * p.eps) / 2.0) *
         oracle::brute_2f1(base + s, base - s, p.nu + 1.5, z);
}

C regular_g_second(const Params& p, double z) {
  const C s = (I * p.mass + 0.5) / 2.0;
  const C base = (1.0 + p.nu - I * p.eps) / 2.0;
  return std::pow(z, p.nu / 2) * std::pow(1.0 - z, (1.0 - I * p.eps) / 2.0) *
         oracle::brute_2f1(base - s, base + s, p.nu + 0.5, z);
}

double log_slope(const SolutionFamily& fam, double z) {
  return (std::log(std::abs(eval_solution(fam, 2.0 * z))) - std::log(std::abs(eval_solution(fam, z)))) /
         std::log(2.0);
}

}  // namespace

TEST_SUITE("chart") {
  TEST_CASE("representations agree") {
    for (double r : {0.0, 0.1, 0.5, 0.93}) {
      const auto c = CoordinateChart::from_r(r);
      const auto cz = CoordinateChart::from_z(c.z);
      const auto cr = CoordinateChart::from_rho(c.rho);
      CHECK(std::abs(cz.r - r) < 1e-14);
      CHECK(std::abs(cr.z - c.z) < 1e-14);
      CHECK(std::abs(cr.Phi - (1.0 - r * r)) < 1e-14);
    }
    CHECK_THROWS_AS(CoordinateChart::from_r(1.0), DomainError);
  }
}

TEST_SUITE("families") {
  TEST_CASE("massless zero-energy regular F") {
    const SolutionFamily f = family_params(0.0, 0.0, 0.0, Channel::F, Kind::Regular);
    CHECK(std::abs(f.exp_a - 0.5) < 1e-15);
    CHECK(std::abs(f.exp_b) < 1e-15);
    CHECK(std::abs(f.hyp.a() - 0.75) < 1e-15);
    CHECK(std::abs(f.hyp.b() - 0.25) < 1e-15);
    CHECK(std::abs(f.hyp.c() - 1.5) < 1e-15);
  }

  TEST_CASE("parameters of the two channels are shifted by one") {
    for (const auto& p : random_params(11, 20)) {
      const SystemParams sys = system_params(p.eps, p.mass, p.nu);
      const HypParams g = g_channel_params(sys);
      // alpha, beta, gamma of the second F representation
      const cplx s = (I * p.mass + 0.5) / 2.0;
      const cplx base = (2.0 + p.nu + I * p.eps) / 2.0;
      CHECK(std::abs((base + s) - (g.a() + 1.0)) < 1e-14);
      CHECK(std::abs((base - s) - (g.b() + 1.0)) < 1e-14);
      CHECK(std::abs((p.nu + 1.5) - (g.c() + 1.0)) < 1e-14);
    }
  }

  TEST_CASE("delta = -1 flips the mass") {
    const SolutionFamily a = family_params(1.0, 2.0, 1.5, Channel::G, Kind::Regular, Delta::Minus);
    const SolutionFamily b = family_params(1.0, -2.0, 1.5, Channel::G, Kind::Regular, Delta::Plus);
    CHECK(std::abs(a.hyp.a() - b.hyp.a()) == 0.0);
    CHECK(std::abs(a.hyp.b() - b.hyp.b()) == 0.0);
  }

  TEST_CASE("evaluation matches the Gauss series") {
    for (const auto& p : random_params(12, 20)) {
      const SolutionFamily f = family_params(p.eps, p.mass, p.nu, Channel::F, Kind::Regular);
      for (double z : {0.1, 0.4, 0.8}) CHECK(oracle::rel(eval_solution(f, z), regular_f_direct(p, z)) < 1e-11);
    }
  }

  TEST_CASE("the two representations coincide") {
    for (const auto& p : random_params(13, 30)) {
      CAPTURE(p.eps);
      CAPTURE(p.mass);
      CAPTURE(p.nu);
      const SolutionFamily f = family_params(p.eps, p.mass, p.nu, Channel::F, Kind::Regular);
      const SolutionFamily g = family_params(p.eps, p.mass, p.nu, Channel::G, Kind::Regular);
      CHECK(oracle::rel(eval_solution(f, 0.4), regular_f_second(p, 0.4)) < 1e-11);
      CHECK(oracle::rel(eval_solution(g, 0.4), regular_g_second(p, 0.4)) < 1e-11);
    }
  }

  TEST_CASE("leading behaviour at the origin") {
    const double nu = 1.3;
    const SolutionFamily fr = family_params(0.7, 1.1, nu, Channel::F, Kind::Regular);
    const SolutionFamily gs = family_params(0.7, 1.1, nu, Channel::G, Kind::Singular);
    CHECK(log_slope(fr, 1e-7) == doctest::Approx((1.0 + nu) / 2).epsilon(1e-5));
    CHECK(log_slope(gs, 1e-7) == doctest::Approx((1.0 - nu) / 2).epsilon(1e-5));
  }

  TEST_CASE("regular and singular solutions are independent") {
    for (Channel ch : {Channel::F, Channel::G}) {
      const SolutionFamily r = family_params(0.9, 1.4, 2.2, ch, Kind::Regular);
      const SolutionFamily s = family_params(0.9, 1.4, 2.2, ch, Kind::Singular);
      for (double z = 0.05; z < 0.99; z += 0.1) {
        const Jet a = eval_jet(r, z), b = eval_jet(s, z);
        const double w = std::abs(a.value * b.d1 - a.d1 * b.value);
        CHECK(w > 1e-6 * std::abs(a.value) * std::abs(b.d1));
      }
    }
  }

  TEST_CASE("domain") {
    const SolutionFamily f = family_params(0.5, 0.5, 1.0, Channel::F, Kind::Regular);
    CHECK_THROWS_AS(eval_solution(f, 1.0), DomainError);
    CHECK_THROWS_AS(family_params(0.5, 0.5, -1.0, Channel::F, Kind::Regular), DomainError);
  }
}

TEST_SUITE("second order") {
  TEST_CASE("all families solve their channel equation") {
    double worst = 0.0;
    for (const auto& p : random_params(21, 25)) {
      if (std::abs(p.nu - 0.5) < 0.05 || std::abs(p.nu - 1.5) < 0.05) continue;
      for (Channel ch : {Channel::F, Channel::G}) {
        for (Kind k : {Kind::Regular, Kind::Singular, Kind::In, Kind::Out}) {
          const SolutionFamily fam = family_params(p.eps, p.mass, p.nu, ch, k);
          for (double z = 0.05; z < 0.95; z += 0.1) worst = std::max(worst, second_order_residual(fam, z).relative);
        }
      }
    }
    CHECK(worst < 1e-8);
  }

  TEST_CASE("channel symmetry nu -> -nu, eps -> -eps") {
    for (const auto& p : random_params(22, 10)) {
      for (double z : {0.1, 0.5, 0.9}) {
        const auto g = second_order_coeffs(Channel::G, {p.eps, p.mass, p.nu}, z);
        const auto f = second_order_coeffs(Channel::F, {-p.eps, p.mass, -p.nu}, z);
        CHECK(g.p2 == f.p2);
        CHECK(g.p1 == f.p1);
        CHECK(std::abs(g.p0 - f.p0) <= 1e-15 * std::abs(g.p0));
      }
    }
  }
}

TEST_SUITE("pairs") {
  TEST_CASE("normalisations") {
    CHECK(pair_amplitudes(Kind::Regular, 1.0, 1.0, 1.0).g0 == cplx(1.0));
    CHECK(pair_amplitudes(Kind::Singular, 1.0, 1.0, 1.0).f0 == cplx(1.0));
    CHECK(pair_amplitudes(Kind::Out, 1.0, 1.0, 1.0).f0 == cplx(1.0));
    CHECK(pair_amplitudes(Kind::In, 1.0, 1.0, 1.0).g0 == cplx(1.0));
  }

  TEST_CASE("regular amplitude at eps = M = nu = 0") {
    // a' = 1/4 + i0, b' = -1/4, c' = 1/2: F0 = -2 a' b' / c' / (-i/2)
    const Amplitudes a = pair_amplitudes(Kind::Regular, 0.0, 0.0, 0.0);
    CHECK(std::abs(a.f0 - (0.25 / (-0.5 * I))) < 1e-15);
    const RadialPair pair = make_radial_pair(Kind::Regular, 0.0, 0.0, 0.0);
    for (double z = 0.05; z <= 0.9; z += 0.05) CHECK(first_order_residual(pair, z).max_relative() < 1e-8);
  }

  TEST_CASE("singular coupling degenerates at nu = 1/2") {
    CHECK_THROWS_AS(pair_amplitudes(Kind::Singular, 1.0, 1.0, 0.5), DegenerateParameterError);
  }

  TEST_CASE("regular pair eps = 2, M = 1, nu = sqrt 3") {
    const RadialPair pair = make_radial_pair(Kind::Regular, 2.0, 1.0, std::sqrt(3.0));
    for (double z = 0.05; z <= 0.9; z += 0.01) {
      const auto r = first_order_residual(pair, z);
      CHECK(r.max_relative() < 1e-8);
    }
  }

  TEST_CASE("absolute residuals at the sample points") {
    const RadialPair reg = make_radial_pair(Kind::Regular, 1.3, 0.8, 1.7);
    const RadialPair sing = make_radial_pair(Kind::Singular, 1.3, 0.8, 1.7);
    const auto r = first_order_residual(reg, 0.5);
    const auto s = first_order_residual(sing, 0.3);
    CHECK(std::abs(r.res1) < 1e-9);
    CHECK(std::abs(r.res2) < 1e-9);
    CHECK(std::abs(s.res1) < 1e-9);
    CHECK(std::abs(s.res2) < 1e-9);
  }

  TEST_CASE("randomised sweep, both deltas, all kinds") {
    double worst = 0.0;
    for (const auto& p : random_params(31, 40)) {
      if (std::abs(p.nu - 0.5) < 0.05) continue;
      for (Delta d : {Delta::Plus, Delta::Minus}) {
        for (Kind k : {Kind::Regular, Kind::Singular, Kind::In, Kind::Out}) {
          const RadialPair pair = make_radial_pair(k, p.eps, p.mass, p.nu, d);
          for (double z = 0.05; z <= 0.9; z += 0.05) worst = std::max(worst, first_order_residual(pair, z).max_relative());
        }
      }
    }
    CHECK(worst < 1e-8);
  }

  TEST_CASE("a corrupted amplitude is detected") {
    RadialPair pair = make_radial_pair(Kind::Regular, 1.0, 1.0, 1.2);
    pair.g0 *= 1.1;
    CHECK(first_order_residual(pair, 0.5).max_relative() > 1e-3);
  }
}

TEST_SUITE("reconstruction") {
  TEST_CASE("rotation matrix limits and unitarity") {
    const Matrix2 m0 = rotation_matrix(0.0);
    CHECK(m0[0][0] == cplx(1.0));
    CHECK(m0[0][1] == cplx(0.0));
    const Matrix2 m1 = rotation_matrix(1.0 - 1e-15);
    CHECK(std::abs(m1[0][0] - std::sqrt(0.5)) < 1e-7);
    CHECK(std::abs(m1[0][1] + I * std::sqrt(0.5)) < 1e-7);
    for (double z = 0.0; z < 1.0; z += 0.0625) {
      const Matrix2 m = rotation_matrix(z);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          const cplx e = m[r][0] * std::conj(m[c][0]) + m[r][1] * std::conj(m[c][1]);
          CHECK(std::abs(e - (r == c ? 1.0 : 0.0)) < 1e-15);
        }
      }
    }
  }

  TEST_CASE("rotation by half of rho") {
    const double rho = 0.9, z = std::sin(rho) * std::sin(rho);
    const Matrix2 m = rotation_matrix(z);
    CHECK(std::abs(m[0][0] - std::cos(rho / 2)) < 1e-15);
    CHECK(std::abs(m[1][0] + I * std::sin(rho / 2)) < 1e-15);
  }

  TEST_CASE("spinor components from (f, g)") {
    const double s2 = std::numbers::sqrt2;
    const Spinor a = f1234_from_fg(s2, 0.0, Delta::Plus);
    for (const auto& x : a) CHECK(std::abs(x - 1.0) < 1e-15);
    const Spinor b = f1234_from_fg(0.0, -I * s2, Delta::Plus);
    CHECK(std::abs(b[0] - 1.0) < 1e-15);
    CHECK(std::abs(b[1] + 1.0) < 1e-15);
    CHECK(std::abs(b[2] + 1.0) < 1e-15);
    CHECK(std::abs(b[3] - 1.0) < 1e-15);
    const Spinor c = f1234_from_fg(1.0, 2.0, Delta::Minus);
    CHECK(c[2] == -c[1]);
    CHECK(c[3] == -c[0]);
  }

  TEST_CASE("round trip") {
    oracle::Draws d(5);
    for (int i = 0; i < 50; ++i) {
      const cplx f = d.complex_in_disk(3.0), g = d.complex_in_disk(3.0);
      const auto [f2, g2] = fg_from_f1234(f1234_from_fg(f, g, d.sign() > 0 ? Delta::Plus : Delta::Minus));
      CHECK(std::abs(f2 - f) < 1e-15 * 8);
      CHECK(std::abs(g2 - g) < 1e-15 * 8);
    }
  }
}
