#include "dsdirac/jmin.hpp"

#include <cmath>
#include <numbers>

#include "dsdirac/errors.hpp"

namespace dsdirac {

namespace {

const cplx I(0.0, 1.0);

void require_open_z(double z, const char* who) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError(std::string(who) + ": z must lie in (0, 1)");
}

}  // namespace

KSign ksign_of(HalfInt k) {
  if (k.twice() == 0) throw LatticeError("k = 0 is excluded");
  return k.twice() > 0 ? KSign::Positive : KSign::Negative;
}

const char* to_string(JminKind k) { return k == JminKind::NonZero ? "nonzero" : "zero"; }

const char* to_string(JminPairing p) {
  return p == JminPairing::FNonZeroGZero ? "F-nonzero/G-zero" : "G-nonzero/F-zero";
}

HypParams jmin_f_params(double eps, double mass_eff) {
  const cplx s = (I * mass_eff + 0.5) / 2.0;
  return HypParams(-I * eps / 2.0 + s, -I * eps / 2.0 - s, 0.5);
}

HypParams jmin_g_params(double eps, double mass_eff) {
  const cplx s = (I * mass_eff + 0.5) / 2.0;
  return HypParams(I * eps / 2.0 + s, I * eps / 2.0 - s, 0.5);
}

JminFamily jmin_params(double eps, double mass, KSign sign_k, Channel channel, JminKind kind) {
  const double m = mass_sign(sign_k) * mass;
  const bool f = channel == Channel::F;
  const HypParams p = f ? jmin_f_params(eps, m) : jmin_g_params(eps, m);
  const cplx exp_b = f ? -I * eps / 2.0 : I * eps / 2.0;
  if (kind == JminKind::NonZero) return {channel, kind, 0.0, exp_b, p, eps, m};
  return {channel, kind, 0.5, exp_b, p.shifted(0.5, 0.5, 1.0), eps, m};
}

cplx jmin_eval(const JminFamily& fam, double z) {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("jmin_eval: z must lie in [0, 1)");
  return fam.form().value(z);
}

Jet jmin_jet(const JminFamily& fam, double z) {
  require_open_z(z, "jmin_jet");
  return fam.form().jet(z);
}

std::array<cplx, 2> JminPair::values(double z) const {
  return {f_amp * jmin_eval(f_family, z), g_amp * jmin_eval(g_family, z)};
}

JminPair make_jmin_pair(JminPairing pairing, double eps, double mass, KSign sign_k, JminAmplitudes amps) {
  const double m = mass_sign(sign_k) * mass;
  if (pairing == JminPairing::FNonZeroGZero) {
    return {pairing,
            jmin_params(eps, mass, sign_k, Channel::F, JminKind::NonZero),
            jmin_params(eps, mass, sign_k, Channel::G, JminKind::Zero),
            amps.amp_nonzero,
            amps.amp_zero,
            eps,
            m};
  }
  return {pairing,
          jmin_params(eps, mass, sign_k, Channel::F, JminKind::Zero),
          jmin_params(eps, mass, sign_k, Channel::G, JminKind::NonZero),
          amps.amp_zero,
          amps.amp_nonzero,
          eps,
          m};
}

JminAmplitudes jmin_amplitudes(JminPairing pairing, double eps, double mass, KSign sign_k) {
  const double m = mass_sign(sign_k) * mass;
  const HypParams p = pairing == JminPairing::FNonZeroGZero ? jmin_f_params(eps, m) : jmin_g_params(eps, m);
  if (std::abs(p.a()) < 1e-14) {
    throw DegenerateParameterError("j_min coupling: parameter a vanishes, the zero-type amplitude is undefined");
  }
  const cplx base = I * p.a() / p.c();
  // Probe point well inside (0, 1); the wrong sign leaves an O(1) residual.
  constexpr double probe = 0.3;
  JminAmplitudes best{1.0, base};
  double best_res = jmin_first_order_residual(make_jmin_pair(pairing, eps, mass, sign_k, best), probe).max_relative();
  const JminAmplitudes flipped{1.0, -base};
  const double flipped_res =
      jmin_first_order_residual(make_jmin_pair(pairing, eps, mass, sign_k, flipped), probe).max_relative();
  if (flipped_res < best_res) best = flipped;
  return best;
}

JminPair make_jmin_pair(JminPairing pairing, double eps, double mass, KSign sign_k) {
  return make_jmin_pair(pairing, eps, mass, sign_k, jmin_amplitudes(pairing, eps, mass, sign_k));
}

FirstOrderResidual jmin_first_order_residual(const JminPair& pair, double z) {
  require_open_z(z, "jmin_first_order_residual");
  const Jet fj = jmin_jet(pair.f_family, z);
  const Jet gj = jmin_jet(pair.g_family, z);
  const cplx F = pair.f_amp * fj.value, dF = pair.f_amp * fj.d1;
  const cplx G = pair.g_amp * gj.value, dG = pair.g_amp * gj.d1;
  const double e = pair.epsilon, m = pair.mass_eff;
  const double sq = std::sqrt(z * (1.0 - z));

  const std::array<cplx, 3> t = {sq * dF, -sq * (I * e / 2.0) / (1.0 - z) * F, (m + e - I / 2.0) / 2.0 * G};
  const std::array<cplx, 3> u = {sq * dG, sq * (I * e / 2.0) / (1.0 - z) * G, (m - e - I / 2.0) / 2.0 * F};
  FirstOrderResidual out{};
  const auto finish = [](const std::array<cplx, 3>& terms, cplx& res, double& rel) {
    double scale = 0.0;
    res = 0.0;
    for (const cplx& x : terms) {
      res += x;
      scale += std::abs(x);
    }
    rel = scale > 0.0 ? std::abs(res) / scale : std::abs(res);
  };
  finish(t, out.res1, out.rel1);
  finish(u, out.res2, out.rel2);
  return out;
}

SecondOrderCoeffs jmin_second_order_coeffs(Channel channel, double eps, double mass_eff, double z) {
  const cplx mass_term = -0.25 * (mass_eff - I / 2.0) * (mass_eff - I / 2.0);
  const cplx e_term = channel == Channel::F ? eps * (eps - I) : eps * (eps + I);
  return {z * (1.0 - z), 0.5 - z, mass_term + e_term / (4.0 * (1.0 - z))};
}

SecondOrderResidual jmin_second_order_residual(const JminFamily& fam, double z) {
  require_open_z(z, "jmin_second_order_residual");
  const Jet j = jmin_jet(fam, z);
  const SecondOrderCoeffs c = jmin_second_order_coeffs(fam.channel, fam.epsilon, fam.mass_eff, z);
  const cplx t2 = c.p2 * j.d2, t1 = c.p1 * j.d1, t0 = c.p0 * j.value;
  const double scale = std::abs(t2) + std::abs(t1) + std::abs(t0);
  const cplx res = t2 + t1 + t0;
  return {res, scale > 0.0 ? std::abs(res) / scale : std::abs(res)};
}

Spinor hg_reconstruct(cplx F, cplx G, double z, KSign sign_k) {
  const auto [h, g] = fg_from_FG(F, G, z);
  const double r2 = std::numbers::sqrt2;
  if (sign_k == KSign::Positive) return {(h + I * g) / r2, 0.0, (h - I * g) / r2, 0.0};
  return {0.0, (g + I * h) / r2, 0.0, (g - I * h) / r2};
}

}  // namespace dsdirac
