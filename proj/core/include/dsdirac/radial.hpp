#pragma once

#include <array>
#include <utility>

#include "dsdirac/angular.hpp"
#include "dsdirac/special_functions.hpp"

namespace dsdirac {

enum class Channel { F, G };
enum class Kind { Regular, Singular, In, Out };

const char* to_string(Channel c);
const char* to_string(Kind k);

// r = sin(rho), z = r^2, Phi = 1 - r^2.
struct CoordinateChart {
  double r = 0.0;
  double rho = 0.0;
  double z = 0.0;
  double Phi = 1.0;

  static CoordinateChart from_r(double r);
  static CoordinateChart from_z(double z);
  static CoordinateChart from_rho(double rho);
};

// The radial system only sees delta through the sign of the mass.
struct SystemParams {
  double epsilon = 0.0;
  double mass_eff = 0.0;
  double nu = 0.0;
};

SystemParams system_params(double eps, double mass, double nu, Delta delta = Delta::Plus);

struct SolutionFamily {
  Channel channel;
  Kind kind;
  cplx exp_a;  // power of z
  cplx exp_b;  // power of (1 - z)
  HypParams hyp;
  HypArgument arg;
  SystemParams sys;

  PowerHypForm form() const { return {exp_a, exp_b, hyp, arg}; }
};

// Origin parameters (a, b; c) of the F and G channels before any shift.
HypParams f_channel_params(const SystemParams& sys);
HypParams g_channel_params(const SystemParams& sys);

// All four kinds: Regular/Singular at the origin, In/Out at the horizon.
SolutionFamily family_params(double eps, double mass, double nu, Channel channel, Kind kind,
                             Delta delta = Delta::Plus);
SolutionFamily family_params(const SystemParams& sys, Channel channel, Kind kind);

cplx eval_solution(const SolutionFamily& fam, double z);
Jet eval_jet(const SolutionFamily& fam, double z);

struct Amplitudes {
  cplx f0;
  cplx g0;
};

// Regular: G0 = 1. Singular: F0 = 1. Out: F0 = 1. In: G0 = 1.
Amplitudes pair_amplitudes(Kind kind, double eps, double mass, double nu, Delta delta = Delta::Plus);
Amplitudes pair_amplitudes(Kind kind, const SystemParams& sys);

struct RadialPair {
  SolutionFamily f_family;
  SolutionFamily g_family;
  cplx f0;
  cplx g0;
  SystemParams sys;
  Delta delta = Delta::Plus;

  // (F0 F(z), G0 G(z))
  std::array<cplx, 2> values(double z) const;
};

RadialPair make_radial_pair(Kind kind, double eps, double mass, double nu, Delta delta = Delta::Plus);
// sys already carries the signed mass; delta is only recorded.
RadialPair make_radial_pair(Kind kind, const SystemParams& sys, Delta delta = Delta::Plus);

struct FirstOrderResidual {
  cplx res1;
  cplx res2;
  double rel1;  // |res| over the sum of magnitudes of the equation's terms
  double rel2;

  double max_relative() const { return rel1 > rel2 ? rel1 : rel2; }
};

FirstOrderResidual first_order_residual(const RadialPair& pair, double z);

// z(1-z) y'' + p1 y' + p0 y = 0
struct SecondOrderCoeffs {
  cplx p2;
  cplx p1;
  cplx p0;
};

SecondOrderCoeffs second_order_coeffs(Channel channel, const SystemParams& sys, double z);

struct SecondOrderResidual {
  cplx value;
  double relative;
};

SecondOrderResidual second_order_residual(const SolutionFamily& fam, double z);

using Matrix2 = std::array<std::array<cplx, 2>, 2>;

// [[cos(rho/2), -i sin(rho/2)], [-i sin(rho/2), cos(rho/2)]] with z = sin^2 rho.
Matrix2 rotation_matrix(double z);

std::pair<cplx, cplx> fg_from_FG(cplx F, cplx G, double z);

// f1 = (f + i g)/sqrt2, f2 = (f - i g)/sqrt2, f3 = delta f2, f4 = delta f1.
Spinor f1234_from_fg(cplx f, cplx g, Delta delta);
std::pair<cplx, cplx> fg_from_f1234(const Spinor& f);

}  // namespace dsdirac
