#include "dsdirac/horizon.hpp"

#include <cmath>

#include "dsdirac/errors.hpp"

namespace dsdirac {

namespace {

const cplx I(0.0, 1.0);

void require_direction(Kind direction) {
  if (direction != Kind::In && direction != Kind::Out) {
    throw DomainError("horizon: direction must be In or Out");
  }
}

void require_source(Kind source) {
  if (source != Kind::Regular && source != Kind::Singular) {
    throw DomainError("horizon: source must be Regular or Singular");
  }
}

// F: out = U2, in = U6. G: in = U2, out = U6.
bool u2_is_out(Channel channel) { return channel == Channel::F; }

struct OutIn {
  cplx out;
  cplx in;
};

OutIn decompose_hyp(const HypParams& p, Channel channel, bool from_u5) {
  const ConnectionCoeffs cc =
      kummer_connection(p, from_u5 ? KummerDirection::U5ToU2U6 : KummerDirection::U1ToU2U6);
  if (u2_is_out(channel)) return {cc.c_first, cc.c_second};
  return {cc.c_second, cc.c_first};
}

OriginCoefficients compose_hyp(const HypParams& p, Channel channel, Kind direction) {
  const bool wants_u2 = (direction == Kind::Out) == u2_is_out(channel);
  const ConnectionCoeffs cc =
      kummer_connection(p, wants_u2 ? KummerDirection::U2ToU1U5 : KummerDirection::U6ToU1U5);
  return {cc.c_first, cc.c_second};
}

}  // namespace

double tortoise(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("tortoise: z must lie in [0, 1)");
  return -0.5 * std::log1p(-z);
}

SolutionFamily wave_family(Channel channel, Kind direction, double eps, double mass, double nu, Delta delta) {
  require_direction(direction);
  return family_params(eps, mass, nu, channel, direction, delta);
}

SolutionFamily jmin_wave_family(Channel channel, Kind direction, double eps, double mass, KSign sign_k) {
  require_direction(direction);
  const double m = mass_sign(sign_k) * mass;
  const bool f = channel == Channel::F;
  const HypParams p = f ? jmin_f_params(eps, m) : jmin_g_params(eps, m);
  const cplx a = p.a(), b = p.b(), c = p.c();
  const cplx exp_b = f ? -I * eps / 2.0 : I * eps / 2.0;
  const SystemParams sys{eps, m, 0.0};
  const bool use_u2 = (direction == Kind::Out) == u2_is_out(channel);
  if (use_u2) return {channel, direction, 0.0, exp_b, HypParams(a, b, a + b - c + 1.0), HypArgument::OneMinusZ, sys};
  return {channel, direction, 0.0, exp_b + c - a - b, HypParams(c - a, c - b, c - a - b + 1.0),
          HypArgument::OneMinusZ, sys};
}

RadialPair wave_pair(Kind direction, double eps, double mass, double nu, Delta delta) {
  require_direction(direction);
  return make_radial_pair(direction, eps, mass, nu, delta);
}

HorizonDecomposition decompose(Channel channel, Kind source, double eps, double mass, double nu, Delta delta) {
  require_source(source);
  const SystemParams sys = system_params(eps, mass, nu, delta);
  const HypParams p = channel == Channel::F ? f_channel_params(sys) : g_channel_params(sys);
  const OutIn c = decompose_hyp(p, channel, source == Kind::Singular);
  return {source, channel, c.out, c.in};
}

JminHorizonDecomposition decompose_jmin(Channel channel, JminKind source, double eps, double mass, KSign sign_k) {
  const double m = mass_sign(sign_k) * mass;
  const HypParams p = channel == Channel::F ? jmin_f_params(eps, m) : jmin_g_params(eps, m);
  const OutIn c = decompose_hyp(p, channel, source == JminKind::Zero);
  return {source, channel, c.out, c.in};
}

OriginCoefficients compose(Channel channel, Kind direction, double eps, double mass, double nu, Delta delta) {
  require_direction(direction);
  const SystemParams sys = system_params(eps, mass, nu, delta);
  const HypParams p = channel == Channel::F ? f_channel_params(sys) : g_channel_params(sys);
  return compose_hyp(p, channel, direction);
}

OriginCoefficients compose_jmin(Channel channel, Kind direction, double eps, double mass, KSign sign_k) {
  require_direction(direction);
  const double m = mass_sign(sign_k) * mass;
  const HypParams p = channel == Channel::F ? jmin_f_params(eps, m) : jmin_g_params(eps, m);
  return compose_hyp(p, channel, direction);
}

}  // namespace dsdirac
