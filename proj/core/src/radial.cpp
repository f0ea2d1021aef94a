#include "dsdirac/radial.hpp"

#include <cmath>
#include <numbers>

#include "dsdirac/errors.hpp"

namespace dsdirac {

namespace {

const cplx I(0.0, 1.0);

void require_open_z(double z, const char* who) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError(std::string(who) + ": z must lie in (0, 1)");
}

void require_nu(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("nu must be a finite nonnegative number");
}

cplx half_shift(const SystemParams& sys) { return (I * sys.mass_eff + 0.5) / 2.0; }

// Coupling factors of the first-order z-system.
cplx coupling_fg(const SystemParams& s) { return s.epsilon + s.mass_eff - I * s.nu - I / 2.0; }
cplx coupling_gf(const SystemParams& s) { return -s.epsilon + s.mass_eff + I * s.nu - I / 2.0; }

}  // namespace

const char* to_string(Channel c) { return c == Channel::F ? "F" : "G"; }

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Regular: return "reg";
    case Kind::Singular: return "sing";
    case Kind::In: return "in";
    case Kind::Out: return "out";
  }
  return "?";
}

CoordinateChart CoordinateChart::from_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("chart: r must lie in [0, 1)");
  return {r, std::asin(r), r * r, 1.0 - r * r};
}

CoordinateChart CoordinateChart::from_z(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("chart: z must lie in [0, 1)");
  const double r = std::sqrt(z);
  return {r, std::asin(r), z, 1.0 - z};
}

CoordinateChart CoordinateChart::from_rho(double rho) {
  if (!(rho >= 0.0 && rho < std::numbers::pi / 2)) throw DomainError("chart: rho must lie in [0, pi/2)");
  const double r = std::sin(rho);
  const double c = std::cos(rho);
  return {r, rho, r * r, c * c};
}

SystemParams system_params(double eps, double mass, double nu, Delta delta) {
  require_nu(nu);
  return {eps, sign(delta) * mass, nu};
}

HypParams f_channel_params(const SystemParams& sys) {
  const cplx base = (1.0 + sys.nu - I * sys.epsilon) / 2.0;
  const cplx s = half_shift(sys);
  return HypParams(base + s, base - s, sys.nu + 1.5);
}

HypParams g_channel_params(const SystemParams& sys) {
  const cplx base = (sys.nu + I * sys.epsilon) / 2.0;
  const cplx s = half_shift(sys);
  return HypParams(base + s, base - s, sys.nu + 0.5);
}

SolutionFamily family_params(const SystemParams& sys, Channel channel, Kind kind) {
  require_nu(sys.nu);
  const bool f = channel == Channel::F;
  const HypParams p = f ? f_channel_params(sys) : g_channel_params(sys);
  const cplx a = p.a(), b = p.b(), c = p.c();
  const cplx exp_a = f ? (1.0 + sys.nu) / 2.0 : sys.nu / 2.0;
  const cplx exp_b = f ? -I * sys.epsilon / 2.0 : I * sys.epsilon / 2.0;
  const HypParams origin_u2(a, b, a + b - c + 1.0);
  const auto origin_u6 = [&] { return HypParams(c - a, c - b, c - a - b + 1.0); };

  switch (kind) {
    case Kind::Regular:
      return {channel, kind, exp_a, exp_b, p, HypArgument::Z, sys};
    case Kind::Singular:
      return {channel, kind, exp_a + 1.0 - c, exp_b, HypParams(a + 1.0 - c, b + 1.0 - c, 2.0 - c),
              HypArgument::Z, sys};
    case Kind::Out:
      // F_out carries U2, G_out carries the (1-z)^(c-a-b) partner
      if (f) return {channel, kind, exp_a, exp_b, origin_u2, HypArgument::OneMinusZ, sys};
      return {channel, kind, exp_a, exp_b + c - a - b, origin_u6(), HypArgument::OneMinusZ, sys};
    case Kind::In:
      if (f) return {channel, kind, exp_a, exp_b + c - a - b, origin_u6(), HypArgument::OneMinusZ, sys};
      return {channel, kind, exp_a, exp_b, origin_u2, HypArgument::OneMinusZ, sys};
  }
  throw DomainError("family_params: unknown kind");
}

SolutionFamily family_params(double eps, double mass, double nu, Channel channel, Kind kind, Delta delta) {
  return family_params(system_params(eps, mass, nu, delta), channel, kind);
}

cplx eval_solution(const SolutionFamily& fam, double z) {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("eval_solution: z must lie in [0, 1)");
  return fam.form().value(z);
}

Jet eval_jet(const SolutionFamily& fam, double z) {
  require_open_z(z, "eval_jet");
  return fam.form().jet(z);
}

Amplitudes pair_amplitudes(Kind kind, const SystemParams& sys) {
  require_nu(sys.nu);
  const double eps = sys.epsilon, m = sys.mass_eff, nu = sys.nu;
  switch (kind) {
    case Kind::Regular: {
      const HypParams g = g_channel_params(sys);
      const cplx den = coupling_gf(sys);
      if (std::abs(den) < 1e-14) {
        throw DegenerateParameterError("regular coupling: factor (-eps + M + i nu - i/2) vanishes");
      }
      return {-2.0 * g.a() * g.b() / g.c() / den, 1.0};
    }
    case Kind::Singular: {
      const cplx den = I * (1.0 - 2.0 * nu);
      if (std::abs(den) < 1e-12) {
        throw DegenerateParameterError("singular coupling: factor i(1 - 2 nu) vanishes at nu = 1/2");
      }
      return {1.0, -(-I * eps - nu + I * m + 0.5) / den};
    }
    case Kind::Out: {
      const HypParams f = f_channel_params(sys);
      const cplx a = f.a(), b = f.b(), c = f.c();
      const cplx kk = -(a - c + 1.0) * (b - c + 1.0) / (a + b - c + 1.0);
      return {1.0, -2.0 * kk / coupling_fg(sys)};
    }
    case Kind::In: {
      const HypParams g = g_channel_params(sys);
      const cplx den = coupling_gf(sys);
      if (std::abs(den) < 1e-14) {
        throw DegenerateParameterError("in-wave coupling: factor (-eps + M + i nu - i/2) vanishes");
      }
      const cplx ap = g.a(), bp = g.b(), cp = g.c();
      return {2.0 * ap * bp / (ap + bp - cp + 1.0) / den, 1.0};
    }
  }
  throw DomainError("pair_amplitudes: unknown kind");
}

Amplitudes pair_amplitudes(Kind kind, double eps, double mass, double nu, Delta delta) {
  return pair_amplitudes(kind, system_params(eps, mass, nu, delta));
}

std::array<cplx, 2> RadialPair::values(double z) const {
  return {f0 * eval_solution(f_family, z), g0 * eval_solution(g_family, z)};
}

RadialPair make_radial_pair(Kind kind, double eps, double mass, double nu, Delta delta) {
  return make_radial_pair(kind, system_params(eps, mass, nu, delta), delta);
}

RadialPair make_radial_pair(Kind kind, const SystemParams& sys, Delta delta) {
  const Amplitudes amp = pair_amplitudes(kind, sys);
  return {family_params(sys, Channel::F, kind), family_params(sys, Channel::G, kind), amp.f0, amp.g0, sys, delta};
}

FirstOrderResidual first_order_residual(const RadialPair& pair, double z) {
  require_open_z(z, "first_order_residual");
  const SystemParams& s = pair.sys;
  const Jet fj = eval_jet(pair.f_family, z);
  const Jet gj = eval_jet(pair.g_family, z);
  const cplx F = pair.f0 * fj.value, dF = pair.f0 * fj.d1;
  const cplx G = pair.g0 * gj.value, dG = pair.g0 * gj.d1;
  const double sq = std::sqrt(z * (1.0 - z));
  const double in_ratio = std::sqrt((1.0 - z) / z);
  const double out_ratio = std::sqrt(z / (1.0 - z));

  const std::array<cplx, 4> t = {2.0 * sq * dF, s.nu * in_ratio * F, -I * s.epsilon * out_ratio * F,
                                 coupling_fg(s) * G};
  const std::array<cplx, 4> u = {2.0 * sq * dG, -s.nu * in_ratio * G, I * s.epsilon * out_ratio * G,
                                 coupling_gf(s) * F};
  const auto finish = [](const std::array<cplx, 4>& terms, cplx& res, double& rel) {
    double scale = 0.0;
    res = 0.0;
    for (const cplx& x : terms) {
      res += x;
      scale += std::abs(x);
    }
    rel = scale > 0.0 ? std::abs(res) / scale : std::abs(res);
  };
  FirstOrderResidual out{};
  finish(t, out.res1, out.rel1);
  finish(u, out.res2, out.rel2);
  return out;
}

SecondOrderCoeffs second_order_coeffs(Channel channel, const SystemParams& sys, double z) {
  const double e = sys.epsilon, n = sys.nu;
  const cplx mass_term = -0.25 * (sys.mass_eff - I / 2.0) * (sys.mass_eff - I / 2.0);
  const cplx p2 = z * (1.0 - z);
  const cplx p1 = 0.5 - z;
  if (channel == Channel::F) {
    return {p2, p1, mass_term + e * (e - I) / (4.0 * (1.0 - z)) - n * (n + 1.0) / (4.0 * z)};
  }
  return {p2, p1, mass_term + e * (e + I) / (4.0 * (1.0 - z)) - n * (n - 1.0) / (4.0 * z)};
}

SecondOrderResidual second_order_residual(const SolutionFamily& fam, double z) {
  require_open_z(z, "second_order_residual");
  const Jet j = eval_jet(fam, z);
  const SecondOrderCoeffs c = second_order_coeffs(fam.channel, fam.sys, z);
  const cplx t2 = c.p2 * j.d2, t1 = c.p1 * j.d1, t0 = c.p0 * j.value;
  const cplx res = t2 + t1 + t0;
  const double scale = std::abs(t2) + std::abs(t1) + std::abs(t0);
  return {res, scale > 0.0 ? std::abs(res) / scale : std::abs(res)};
}

Matrix2 rotation_matrix(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("rotation_matrix: z must lie in [0, 1)");
  const double w = std::sqrt(1.0 - z);
  const double c = std::sqrt((1.0 + w) / 2.0);
  const double s = std::sqrt(z / (2.0 * (1.0 + w)));  // sqrt((1 - w)/2) without cancellation
  return {{{c, -I * s}, {-I * s, c}}};
}

std::pair<cplx, cplx> fg_from_FG(cplx F, cplx G, double z) {
  const Matrix2 m = rotation_matrix(z);
  return {m[0][0] * F + m[0][1] * G, m[1][0] * F + m[1][1] * G};
}

Spinor f1234_from_fg(cplx f, cplx g, Delta delta) {
  const double r2 = std::numbers::sqrt2;
  const cplx f1 = (f + I * g) / r2;
  const cplx f2 = (f - I * g) / r2;
  const double d = sign(delta);
  return {f1, f2, d * f2, d * f1};
}

std::pair<cplx, cplx> fg_from_f1234(const Spinor& f) {
  const double r2 = std::numbers::sqrt2;
  return {(f[0] + f[1]) / r2, (f[0] - f[1]) / (I * r2)};
}

}  // namespace dsdirac
