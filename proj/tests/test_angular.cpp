#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dsdirac/angular.hpp"
#include "dsdirac/errors.hpp"
#include "oracles/oracles.hpp"

using namespace dsdirac;

namespace {

constexpr double kPi = std::numbers::pi;

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

// Independent restatement of the lattice rule on doubled labels.
bool on_lattice(int tk, int tj, int tm) {
  if (tk == 0) return false;
  const int tjmin = std::abs(tk) - 1;
  if (tj < tjmin || (tj - tjmin) % 2 != 0) return false;
  if (std::abs(tm) > tj || (tj - tm) % 2 != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("half_int") {
  TEST_CASE("parsing") {
    CHECK(HalfInt::parse("1/2") == h(1));
    CHECK(HalfInt::parse("-3/2") == h(-3));
    CHECK(HalfInt::parse("2") == h(4));
    CHECK(HalfInt::parse("1.5") == h(3));
    CHECK(HalfInt::parse("-0.5") == h(-1));
    CHECK_THROWS(HalfInt::parse("1/4"));
    CHECK_THROWS(HalfInt::parse("0.3"));
    CHECK_THROWS(HalfInt::parse("abc"));
  }

  TEST_CASE("exact arithmetic") {
    CHECK((h(3) + h(1)).twice() == 4);
    CHECK((h(3) - h(5)).twice() == -2);
    CHECK(h(-3).abs() == h(3));
    CHECK(h(4).is_integer());
    CHECK_FALSE(h(3).is_integer());
    CHECK(h(-3).str() == "-3/2");
    CHECK(h(4).str() == "2");
  }
}

TEST_SUITE("lattice") {
  TEST_CASE("k = 1/2, j = 0 is the j_min sector") {
    const AngularLabels l = validate(h(1), h(0), h(0));
    CHECK(l.is_jmin());
    CHECK(l.j_min() == h(0));
  }

  TEST_CASE("rejections carry a reason") {
    CHECK_THROWS_AS(validate(h(0), h(1), h(1)), LatticeError);
    CHECK_THROWS_AS(validate(h(3), h(0), h(0)), LatticeError);  // below j_min = 1
    CHECK_THROWS_AS(validate(h(1), h(1), h(1)), LatticeError);  // k = 1/2 needs integer j
    CHECK_THROWS_AS(validate(h(2), h(3), h(5)), LatticeError);  // |m| > j
    CHECK_THROWS_AS(validate(h(2), h(3), h(0)), LatticeError);  // m - j not integer
    try {
      validate(h(3), h(0), h(0));
    } catch (const LatticeError& e) {
      CHECK(std::string(e.what()).find("j_min") != std::string::npos);
    }
  }

  TEST_CASE("accepts exactly the lattice on a bounded grid") {
    int accepted = 0;
    for (int tk = -7; tk <= 7; ++tk) {
      for (int tj = -2; tj <= 10; ++tj) {
        for (int tm = -11; tm <= 11; ++tm) {
          const bool ok = !lattice_violation(h(tk), h(tj), h(tm)).has_value();
          CAPTURE(tk);
          CAPTURE(tj);
          CAPTURE(tm);
          CHECK(ok == on_lattice(tk, tj, tm));
          accepted += ok;
        }
      }
    }
    CHECK(accepted > 100);
  }

  TEST_CASE("quantum numbers reject negative or non-finite inputs") {
    CHECK_THROWS_AS(make_quantum_numbers(1.0, -1.0, h(1), h(0), h(0)), DomainError);
    CHECK_THROWS_AS(make_quantum_numbers(NAN, 1.0, h(1), h(0), h(0)), DomainError);
    CHECK_NOTHROW(make_quantum_numbers(1.0, 0.0, h(1), h(2), h(-2)));
  }
}

TEST_SUITE("nu and couplings") {
  TEST_CASE("nu values") {
    CHECK(nu(h(1), h(1)) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(nu(h(4), h(3)) == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("nu vanishes exactly at j_min") {
    for (int tk = -21; tk <= 21; ++tk) {
      if (tk == 0) continue;
      CHECK(nu(h(std::abs(tk) - 1), h(tk)) == 0.0);
    }
  }

  TEST_CASE("lambda is -delta nu and zero at j_min") {
    const auto qn = make_quantum_numbers(1.0, 1.0, h(1), h(2), h(0), Delta::Plus);
    CHECK(lambda(qn) == doctest::Approx(-std::sqrt(2.0)));
    const auto qm = make_quantum_numbers(1.0, 1.0, h(1), h(2), h(0), Delta::Minus);
    CHECK(lambda(qm) == doctest::Approx(std::sqrt(2.0)));
    const auto q0 = make_quantum_numbers(1.0, 1.0, h(3), h(2), h(0), Delta::Minus);
    CHECK(lambda(q0) == 0.0);
  }

  TEST_CASE("coefficient examples") {
    const CouplingCoeffs c = coupling_coeffs(h(1), h(1));
    CHECK(c.a_ang == doctest::Approx(std::sqrt(3.0) / 4));
    CHECK(c.b_ang == 0.0);
    CHECK(c.b_absent);
    CHECK(c.c_ang == doctest::Approx(std::sqrt(3.0) / 4));
    CHECK(coupling_coeffs(h(3), h(1)).a_ang == doctest::Approx(std::sqrt(15.0) / 4));
    CHECK(coupling_coeffs(h(2), h(3)).a_ang == 0.0);
  }

  TEST_CASE("a_ang is half of nu") {
    for (int tk = 1; tk <= 7; ++tk) {
      for (int tj = tk - 1; tj <= 11; tj += 2) {
        CHECK(coupling_coeffs(h(tj), h(tk)).a_ang == doctest::Approx(nu(h(tj), h(tk)) / 2));
      }
    }
  }
}

TEST_SUITE("wigner_d") {
  TEST_CASE("spin one half") {
    for (double t : {0.0, 0.4, 1.3, kPi / 2, 2.9, kPi}) {
      CHECK(wigner_d(h(1), h(1), h(1), t) == doctest::Approx(std::cos(t / 2)).epsilon(1e-14));
    }
  }

  TEST_CASE("identity rotation") {
    for (int tj = 0; tj <= 9; ++tj) {
      for (int a = -tj; a <= tj; a += 2) {
        for (int b = -tj; b <= tj; b += 2) {
          CHECK(wigner_d(h(tj), h(a), h(b), 0.0) == (a == b ? 1.0 : 0.0));
        }
      }
    }
  }

  TEST_CASE("agrees with the Jacobi-polynomial formula") {
    for (int tj = 0; tj <= 9; ++tj) {
      for (int a = -tj; a <= tj; a += 2) {
        for (int b = -tj; b <= tj; b += 2) {
          for (double t : {0.1, 0.9, 1.7, 2.6, 3.1}) {
            CAPTURE(tj);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(std::abs(wigner_d(h(tj), h(a), h(b), t) - oracle::wigner_d_jacobi(tj, a, b, t)) < 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("rows are unit vectors") {
    for (int tj = 0; tj <= 9; ++tj) {
      for (int a = -tj; a <= tj; a += 2) {
        for (double t = 0.0; t <= kPi; t += kPi / 12) {
          double s = 0.0;
          for (int b = -tj; b <= tj; b += 2) s += std::pow(wigner_d(h(tj), h(a), h(b), t), 2);
          CHECK(std::abs(s - 1.0) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("lattice violations and the zero-padded variant") {
    CHECK_THROWS_AS(wigner_d(h(1), h(3), h(1), 0.5), LatticeError);
    CHECK_THROWS_AS(wigner_d(h(2), h(1), h(0), 0.5), LatticeError);
    CHECK(wigner_d_or_zero(h(1), h(3), h(1), 0.5) == 0.0);
  }

  TEST_CASE("separation function carries the phi phase") {
    const auto d = separation_D(h(3), h(1), h(-1), 0.7, 0.3);
    CHECK(std::abs(d - std::polar(1.0, 0.15) * wigner_d(h(3), h(-1), h(-1), 0.7)) < 1e-15);
    CHECK(separation_D(h(1), h(1), h(3), 0.7, 0.3) == std::complex<double>(0.0));
  }
}

TEST_SUITE("recursions") {
  TEST_CASE("examples") {
    CHECK(check_recursions(h(2), h(1), h(2), 1.0) < 1e-6);  // k = 1/2, j = 1
    CHECK(check_recursions(h(3), h(2), h(1), 2.0) < 1e-6);
    CHECK(check_recursions(h(4), h(-1), h(-2), kPi / 2) < 1e-6);
  }

  TEST_CASE("sweep over j <= 9/2") {
    double worst = 0.0;
    for (int tk = -6; tk <= 6; ++tk) {
      if (tk == 0) continue;
      for (int tj = std::abs(tk) - 1; tj <= 9; tj += 2) {
        for (int tm = -tj; tm <= tj; tm += 2) {
          for (double t = 0.15; t < kPi; t += 0.35) worst = std::max(worst, check_recursions(h(tj), h(tk), h(tm), t));
        }
      }
    }
    CHECK(worst < 1e-6);
  }

  TEST_CASE("poles are rejected") {
    CHECK_THROWS_AS(check_recursions(h(2), h(1), h(0), 0.0), DomainError);
    CHECK_THROWS_AS(check_recursions(h(2), h(1), h(0), kPi), DomainError);
  }
}

TEST_SUITE("sigma operator") {
  TEST_CASE("j_min sector is annihilated in closed form") {
    const auto sec = make_sector(make_quantum_numbers(1.0, 1.0, h(3), h(2), h(0)));
    CHECK(sec.nu == 0.0);
    CHECK(max_abs(sigma_action(sec, {1.0, 2.0, 3.0, 4.0}, 1.1)) == 0.0);
  }

  TEST_CASE("structure for f = (1, 0, 0, 0)") {
    const auto sec = make_sector(make_quantum_numbers(0.5, 1.0, h(1), h(4), h(2)));
    const Spinor s = sigma_action(sec, {1.0, 0.0, 0.0, 0.0}, 0.8);
    CHECK(s[0] == std::complex<double>(0.0));
    CHECK(s[1] == std::complex<double>(0.0));
    CHECK(s[2] == std::complex<double>(0.0));
    const auto dp = separation_D(h(4), h(2), h(2), 0.8, 0.0);
    CHECK(std::abs(s[3] - std::complex<double>(0.0, -sec.nu) * dp) < 1e-15);
  }

  TEST_CASE("closed form matches the differential operator") {
    oracle::Draws draws(7);
    double worst = 0.0;
    for (int tk = -5; tk <= 5; ++tk) {
      if (tk == 0) continue;
      for (int tj = std::abs(tk) - 1; tj <= 7; tj += 2) {
        for (int tm = -tj; tm <= tj; tm += 2) {
          const auto sec = make_sector(make_quantum_numbers(1.0, 1.0, h(tk), h(tj), h(tm)));
          const Spinor f{draws.complex_in_disk(1.0), draws.complex_in_disk(1.0), draws.complex_in_disk(1.0),
                         draws.complex_in_disk(1.0)};
          const double theta = draws.uniform(0.2, 2.9), phi = draws.uniform(0.0, 6.0);
          const Spinor a = sigma_action(sec, f, theta, phi);
          const Spinor b = sigma_action_direct(sec, f, theta, phi);
          worst = std::max(worst, max_abs(a - b));
        }
      }
    }
    CHECK(worst < 1e-6);
  }

  TEST_CASE("closed form versus direct for j = 3/2, k = 1, m = 1/2") {
    const auto sec = make_sector(make_quantum_numbers(1.0, 1.0, h(2), h(3), h(1)));
    const Spinor f{1.0, std::complex<double>(0.0, 1.0), 0.5, -2.0};
    CHECK(max_abs(sigma_action(sec, f, 1.3) - sigma_action_direct(sec, f, 1.3)) < 1e-6);
  }

  TEST_CASE("j_min annihilation identity") {
    CHECK(jmin_annihilation(h(1), 0.4) < 1e-12);
    CHECK(jmin_annihilation(h(2), 1.0) < 1e-6);
    CHECK(jmin_annihilation(h(-3), 0.7) < 1e-6);
    for (int tk = -8; tk <= 8; ++tk) {
      if (tk == 0) continue;
      for (double t : {0.3, 1.2, 2.5}) CHECK(jmin_annihilation(h(tk), t) < 1e-6);
    }
  }

  TEST_CASE("annihilation fails away from j_min") {
    const auto sec = make_sector(make_quantum_numbers(1.0, 1.0, h(1), h(2), h(0)));
    CHECK(max_abs(sigma_action_direct(sec, {1.0, 0.0, 0.0, 0.0}, 1.0)) > 0.1);
  }
}

TEST_SUITE("monopole") {
  TEST_CASE("potential and field") {
    const MonopolePotential p{2.0};
    CHECK(p.a_phi(0.0) == doctest::Approx(2.0));
    CHECK(p.f_phi_theta(kPi / 2) == doctest::Approx(2.0));
  }

  TEST_CASE("Maxwell equations hold") {
    CHECK(maxwell_residual(1.0, 0.5, kPi / 2) < 1e-10);
    CHECK(maxwell_residual(3.0, 0.9, 0.3) < 1e-10);
    CHECK(maxwell_residual(0.0, 0.2, 1.0) == 0.0);
    CHECK_THROWS_AS(maxwell_residual(1.0, 1.0, 1.0), DomainError);
  }
}
