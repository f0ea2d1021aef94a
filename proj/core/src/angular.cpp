#include "dsdirac/angular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dsdirac/errors.hpp"
#include "finite_difference.hpp"

namespace dsdirac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 1.0;
    for (int n = 1; n <= kMaxFactorial; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

double fact(int n) { return factorials().at(static_cast<std::size_t>(n)); }

void require_open_theta(double theta, const char* who) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DomainError(std::string(who) + ": theta must lie in (0, pi)");
  }
}

double theta_step(double theta, double h) { return std::min({h, theta / 4.0, (kPi - theta) / 4.0}); }

constexpr double kAngularStep = 1e-4;

}  // namespace

std::optional<std::string> lattice_violation(HalfInt k, HalfInt j, HalfInt m) {
  if (k.twice() == 0) return "k = 0 is excluded; the monopole charge must be a nonzero half-integer";
  const HalfInt jmin = k.abs() - kHalf;
  if (j < jmin) return "j = " + j.str() + " lies below j_min = |k| - 1/2 = " + jmin.str();
  if (!(j - jmin).is_integer()) {
    return "j = " + j.str() + " is off the lattice j_min + n with j_min = " + jmin.str();
  }
  if (m.abs() > j) return "|m| = " + m.abs().str() + " exceeds j = " + j.str();
  if (!(m - j).is_integer()) return "m - j = " + (m - j).str() + " is not an integer";
  return std::nullopt;
}

AngularLabels validate(HalfInt k, HalfInt j, HalfInt m) {
  if (auto why = lattice_violation(k, j, m)) throw LatticeError(*why);
  return {k, j, m};
}

QuantumNumbers make_quantum_numbers(double epsilon, double mass, HalfInt k, HalfInt j, HalfInt m,
                                    Delta delta) {
  if (!std::isfinite(epsilon) || !std::isfinite(mass)) throw DomainError("epsilon and mass must be finite");
  if (mass < 0.0) throw DomainError("mass must be nonnegative");
  return {epsilon, mass, validate(k, j, m), delta};
}

double nu(HalfInt j, HalfInt k) {
  const double jp = j.value() + 0.5;
  const double rad = jp * jp - k.value() * k.value();
  if (rad < 0.0) throw DomainError("nu: (j + 1/2)^2 - k^2 is negative for j = " + j.str() + ", k = " + k.str());
  return std::sqrt(rad);
}

double lambda(const QuantumNumbers& qn) {
  const double n = nu(qn.labels.j, qn.labels.k);
  return n == 0.0 ? 0.0 : -sign(qn.delta) * n;
}

CouplingCoeffs coupling_coeffs(HalfInt j, HalfInt k) {
  const double jv = j.value(), kv = k.value();
  CouplingCoeffs out;
  out.a_ang = 0.5 * nu(j, k);
  const double rb = (jv - kv - 0.5) * (jv + kv + 1.5);
  const double rc = (jv + kv - 0.5) * (jv - kv + 1.5);
  out.b_absent = rb <= 0.0;
  out.c_absent = rc <= 0.0;
  out.b_ang = out.b_absent ? 0.0 : 0.5 * std::sqrt(rb);
  out.c_ang = out.c_absent ? 0.0 : 0.5 * std::sqrt(rc);
  return out;
}

AngularSector make_sector(const QuantumNumbers& qn) {
  return {qn, nu(qn.labels.j, qn.labels.k), coupling_coeffs(qn.labels.j, qn.labels.k)};
}

double wigner_d(HalfInt j, HalfInt mp, HalfInt sig, double theta) {
  if (j.twice() < 0) throw LatticeError("wigner_d: j must be nonnegative");
  if (mp.abs() > j || sig.abs() > j) throw LatticeError("wigner_d: projection exceeds j = " + j.str());
  if (!(j - mp).is_integer() || !(j - sig).is_integer()) {
    throw LatticeError("wigner_d: projections must differ from j = " + j.str() + " by integers");
  }
  if (2 * j.twice() > 2 * kMaxFactorial) throw DomainError("wigner_d: j too large for the factorial table");

  const int jpmp = (j + mp).twice() / 2, jmmp = (j - mp).twice() / 2;
  const int jpm = (j + sig).twice() / 2, jmm = (j - sig).twice() / 2;
  const int dm = (mp - sig).twice() / 2;  // m' - m
  const double pre = std::sqrt(fact(jpmp) * fact(jmmp) * fact(jpm) * fact(jmm));
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);

  double sum = 0.0;
  const int s_lo = std::max(0, -dm), s_hi = std::min(jpm, jmmp);
  for (int k = s_lo; k <= s_hi; ++k) {
    const double denom = fact(jpm - k) * fact(k) * fact(dm + k) * fact(jmmp - k);
    const double sgn = ((dm + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sgn * pre / denom * std::pow(c, jpm + jmmp - 2 * k) * std::pow(s, dm + 2 * k);
  }
  return sum;
}

double wigner_d_or_zero(HalfInt j, HalfInt mp, HalfInt sig, double theta) {
  if (mp.abs() > j || sig.abs() > j) return 0.0;
  return wigner_d(j, mp, sig, theta);
}

std::complex<double> separation_D(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  const double d = wigner_d_or_zero(j, -m, sigma, theta);
  if (d == 0.0) return 0.0;
  return std::polar(1.0, m.value() * phi) * d;
}

double check_recursions(HalfInt j, HalfInt k, HalfInt m, double theta) {
  validate(k, j, m);
  require_open_theta(theta, "check_recursions");
  const CouplingCoeffs cc = coupling_coeffs(j, k);
  const double a = cc.a_ang, b = cc.b_ang, c = cc.c_ang;
  const auto D = [&](HalfInt sigma) {
    return [=](double t) { return wigner_d_or_zero(j, -m, sigma, t); };
  };
  const HalfInt km3 = k - HalfInt::from_twice(3), km1 = k - kHalf, kp1 = k + kHalf,
                kp3 = k + HalfInt::from_twice(3);
  const double h = theta_step(theta, kAngularStep);
  const double dp = detail::central_difference(D(kp1), theta, h);
  const double dm = detail::central_difference(D(km1), theta, h);
  const double st = std::sin(theta), ct = std::cos(theta);
  const double Dm3 = D(km3)(theta), Dm1 = D(km1)(theta), Dp1 = D(kp1)(theta), Dp3 = D(kp3)(theta);
  const double mv = m.value(), kv = k.value();

  const double r1 = dp - (a * Dm1 - b * Dp3);
  const double r2 = dm - (c * Dm3 - a * Dp1);
  const double r3 = (-mv - (kv + 0.5) * ct) / st * Dp1 - (-a * Dm1 - b * Dp3);
  const double r4 = (-mv - (kv - 0.5) * ct) / st * Dm1 - (-c * Dm3 - a * Dp1);
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
}

Spinor apply_sigma(HalfInt k, const AngularField& psi, double theta, double phi) {
  require_open_theta(theta, "apply_sigma");
  const std::complex<double> i(0.0, 1.0);
  const double ht = theta_step(theta, kAngularStep);
  const Spinor d_theta = detail::central_difference([&](double t) { return psi(t, phi); }, theta, ht);
  const Spinor d_phi = detail::central_difference([&](double p) { return psi(theta, p); }, phi, kAngularStep);
  const Spinor p0 = psi(theta, phi);
  const Spinor inner = i * d_phi + std::cos(theta) * (gamma_matrix::i_sigma12(p0) - k.value() * p0);
  return i * gamma_matrix::g1(d_theta) + (1.0 / std::sin(theta)) * gamma_matrix::g2(inner);
}

Spinor sigma_action(const AngularSector& sector, const Spinor& f, double theta, double phi) {
  const AngularLabels& l = sector.qn.labels;
  const std::complex<double> dm = separation_D(l.j, l.m, l.k - kHalf, theta, phi);
  const std::complex<double> dp = separation_D(l.j, l.m, l.k + kHalf, theta, phi);
  const std::complex<double> inu(0.0, sector.nu);
  return {-inu * f[3] * dm, inu * f[2] * dp, inu * f[1] * dm, -inu * f[0] * dp};
}

Spinor sigma_action_direct(const AngularSector& sector, const Spinor& f, double theta, double phi) {
  const AngularLabels l = sector.qn.labels;
  const AngularField field = [l, f](double t, double p) {
    const std::complex<double> dm = separation_D(l.j, l.m, l.k - kHalf, t, p);
    const std::complex<double> dp = separation_D(l.j, l.m, l.k + kHalf, t, p);
    return Spinor{f[0] * dm, f[1] * dp, f[2] * dm, f[3] * dp};
  };
  return apply_sigma(l.k, field, theta, phi);
}

double jmin_annihilation(HalfInt k, double theta) {
  if (k.twice() == 0) throw LatticeError("k = 0 is excluded");
  require_open_theta(theta, "jmin_annihilation");
  const HalfInt j = k.abs() - kHalf;
  const double phi = 0.4;
  const std::complex<double> upper(1.0, 0.0), lower(0.6, -0.8);
  double worst = 0.0;
  for (HalfInt m = -j; m <= j; m = m + HalfInt::from_int(1)) {
    const AngularField field = [=](double t, double p) -> Spinor {
      if (k.twice() > 0) {
        const std::complex<double> d = separation_D(j, m, k - kHalf, t, p);
        return {upper * d, 0.0, lower * d, 0.0};
      }
      const std::complex<double> d = separation_D(j, m, k + kHalf, t, p);
      return {0.0, upper * d, 0.0, lower * d};
    };
    worst = std::max(worst, max_abs(apply_sigma(k, field, theta, phi)));
  }
  return worst;
}

double MonopolePotential::a_phi(double theta) const { return g * std::cos(theta); }

double MonopolePotential::f_phi_theta(double theta) const { return g * std::sin(theta); }

double maxwell_residual(double g, double r, double theta) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("maxwell_residual: r must lie in (0, 1)");
  require_open_theta(theta, "maxwell_residual");
  const MonopolePotential pot{g};
  // sqrt(-g) F^{theta phi} with g^{theta theta} = -1/r^2, g^{phi phi} = -1/(r^2 sin^2 theta)
  const auto flux = [&](double t) {
    const double sqrt_g = r * r * std::sin(t);
    const double f_theta_phi = -pot.f_phi_theta(t);
    return sqrt_g * (1.0 / (r * r)) * (1.0 / (r * r * std::sin(t) * std::sin(t))) * f_theta_phi;
  };
  const double h = theta_step(theta, 0.05);
  const double div_phi = detail::central_difference(flux, theta, h) / (r * r * std::sin(theta));
  // the theta component involves only d/dphi of phi-independent data
  const double div_theta =
      detail::central_difference([&](double) { return -flux(theta); }, 0.0, 0.05) / (r * r * std::sin(theta));
  return std::max(std::abs(div_phi), std::abs(div_theta));
}

}  // namespace dsdirac
