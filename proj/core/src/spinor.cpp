#include "dsdirac/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dsdirac/errors.hpp"
#include "finite_difference.hpp"

namespace dsdirac {

namespace {

const std::complex<double> I(0.0, 1.0);

constexpr double kParamTol = 1e-12;

void require_theta(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw DomainError("spinor: theta must lie in (0, pi)");
}

double clamp_r(double r, bool& clamped) {
  if (!std::isfinite(r)) throw DomainError("spinor: r must be finite");
  const double c = std::clamp(r, kRadialClamp, 1.0 - kRadialClamp);
  clamped = c != r;
  return c;
}

Spinor angular_factors(const AngularLabels& l, double theta, double phi) {
  const auto dm = separation_D(l.j, l.m, l.k - kHalf, theta, phi);
  const auto dp = separation_D(l.j, l.m, l.k + kHalf, theta, phi);
  return {dm, dp, dm, dp};
}

Spinor product(const Spinor& a, const Spinor& b) { return {a[0] * b[0], a[1] * b[1], a[2] * b[2], a[3] * b[3]}; }

}  // namespace

SpinorSample assemble_profile(const QuantumNumbers& qn, const RadialProfile& profile, const SpacetimePoint& p,
                              bool full_prefactor) {
  require_theta(p.theta);
  SpinorSample s{p.t, 0.0, p.theta, p.phi, {}, false};
  s.r = clamp_r(p.r, s.clamped);
  std::complex<double> scale = std::exp(-I * qn.epsilon * p.t);
  if (full_prefactor) scale *= 1.0 / (s.r * std::pow(1.0 - s.r * s.r, 0.25));
  s.components = scale * product(profile(s.r), angular_factors(qn.labels, p.theta, p.phi));
  return s;
}

namespace {

double radial_step(double r) { return std::min({1e-4, r / 4.0, (1.0 - r) / 4.0}); }

}  // namespace

RadialProfile radial_profile(const QuantumNumbers& qn, const RadialPair& pair) {
  if (qn.labels.is_jmin()) throw DomainError("radial_profile: j = j_min needs the j_min pair");
  const double n = nu(qn.labels.j, qn.labels.k);
  const double m_eff = sign(qn.delta) * qn.mass;
  if (std::abs(pair.sys.nu - n) > kParamTol || std::abs(pair.sys.epsilon - qn.epsilon) > kParamTol ||
      std::abs(pair.sys.mass_eff - m_eff) > kParamTol || pair.delta != qn.delta) {
    throw DomainError("radial_profile: radial pair does not match the quantum numbers");
  }
  return [pair, delta = qn.delta](double r) {
    const double z = r * r;
    const auto v = pair.values(z);
    const auto [f, g] = fg_from_FG(v[0], v[1], z);
    return f1234_from_fg(f, g, delta);
  };
}

RadialProfile radial_profile_jmin(const QuantumNumbers& qn, const JminPair& pair) {
  if (!qn.labels.is_jmin()) throw DomainError("radial_profile_jmin: j must equal |k| - 1/2");
  const KSign ks = ksign_of(qn.labels.k);
  if (std::abs(pair.epsilon - qn.epsilon) > kParamTol ||
      std::abs(pair.mass_eff - mass_sign(ks) * qn.mass) > kParamTol) {
    throw DomainError("radial_profile_jmin: j_min pair does not match the quantum numbers");
  }
  return [pair, ks](double r) {
    const double z = r * r;
    const auto v = pair.values(z);
    return hg_reconstruct(v[0], v[1], z, ks);
  };
}

SpinorSample assemble(const QuantumNumbers& qn, const RadialPair& pair, const SpacetimePoint& point,
                      bool full_prefactor) {
  return assemble_profile(qn, radial_profile(qn, pair), point, full_prefactor);
}

SpinorSample assemble_jmin(const QuantumNumbers& qn, const JminPair& pair, const SpacetimePoint& point,
                           bool full_prefactor) {
  return assemble_profile(qn, radial_profile_jmin(qn, pair), point, full_prefactor);
}

RadialPair pair_for(const QuantumNumbers& qn, Kind kind) {
  return make_radial_pair(kind, qn.epsilon, qn.mass, nu(qn.labels.j, qn.labels.k), qn.delta);
}

JminPair jmin_pair_for(const QuantumNumbers& qn, JminPairing pairing) {
  return make_jmin_pair(pairing, qn.epsilon, qn.mass, ksign_of(qn.labels.k));
}

double dirac_residual(const QuantumNumbers& qn, const RadialProfile& profile, const SpacetimePoint& point) {
  require_theta(point.theta);
  bool clamped = false;
  const double r = clamp_r(point.r, clamped);
  const double sq = std::sqrt(1.0 - r * r);
  const AngularLabels& l = qn.labels;
  const std::complex<double> phase = std::exp(-I * qn.epsilon * point.t);

  const Spinor ang = angular_factors(l, point.theta, point.phi);
  const Spinor psi = phase * product(profile(r), ang);
  const Spinor d_r = phase * product(detail::central_difference(profile, r, radial_step(r)), ang);
  const Spinor radial = profile(r);
  const AngularField field = [&](double t, double p) {
    return phase * product(radial, angular_factors(l, t, p));
  };
  const Spinor sigma = apply_sigma(l.k, field, point.theta, point.phi);

  const Spinor t_time = (I * (-I * qn.epsilon) / sq) * gamma_matrix::g0(psi);
  const Spinor t_rad = (I * sq) * gamma_matrix::g3(d_r);
  const Spinor t_ang = (1.0 / r) * sigma;
  const Spinor t_mass = std::complex<double>(-qn.mass) * psi;
  const double scale = std::max({max_abs(t_time), max_abs(t_rad), max_abs(t_ang), max_abs(t_mass)});
  const double res = max_abs(t_time + t_rad + t_ang + t_mass);
  return scale > 0.0 ? res / scale : res;
}

KhatEstimate khat_eigenvalue(const QuantumNumbers& qn, const RadialProfile& profile, const SpacetimePoint& point) {
  require_theta(point.theta);
  bool clamped = false;
  const double r = clamp_r(point.r, clamped);
  const AngularLabels& l = qn.labels;
  const Spinor radial = profile(r);
  const AngularField field = [&](double t, double p) { return product(radial, angular_factors(l, t, p)); };
  const Spinor psi = field(point.theta, point.phi);
  const Spinor k_psi = -I * gamma_matrix::g0(gamma_matrix::g3(apply_sigma(l.k, field, point.theta, point.phi)));

  std::complex<double> num = 0.0;
  double den = 0.0;
  for (int i = 0; i < 4; ++i) {
    num += std::conj(psi[i]) * k_psi[i];
    den += std::norm(psi[i]);
  }
  if (!(den > 0.0)) throw DomainError("khat_eigenvalue: spinor vanishes at the sample point");
  const std::complex<double> lam = num / den;
  return {lam, max_abs(k_psi - lam * psi) / max_abs(psi)};
}

}  // namespace dsdirac
