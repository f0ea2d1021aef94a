#pragma once

#include "dsdirac/jmin.hpp"
#include "dsdirac/radial.hpp"

namespace dsdirac {

// x = -ln(1 - z)/2, so (1-z)^(-i eps/2) = e^{i eps x}.
double tortoise(double z);

// In/Out families of the generic sector (direction must be In or Out).
SolutionFamily wave_family(Channel channel, Kind direction, double eps, double mass, double nu,
                           Delta delta = Delta::Plus);

// In/Out families of the j_min sector: c = 1/2 parameters and no power of z.
SolutionFamily jmin_wave_family(Channel channel, Kind direction, double eps, double mass,
                                KSign sign_k = KSign::Positive);

// Coupled in (or out) pair for the generic sector.
RadialPair wave_pair(Kind direction, double eps, double mass, double nu, Delta delta = Delta::Plus);

struct HorizonDecomposition {
  Kind source;  // Regular or Singular
  Channel channel;
  cplx coeff_out;
  cplx coeff_in;
};

struct JminHorizonDecomposition {
  JminKind source;
  Channel channel;
  cplx coeff_out;
  cplx coeff_in;
};

// source = coeff_out * out + coeff_in * in
HorizonDecomposition decompose(Channel channel, Kind source, double eps, double mass, double nu,
                               Delta delta = Delta::Plus);
JminHorizonDecomposition decompose_jmin(Channel channel, JminKind source, double eps, double mass,
                                        KSign sign_k = KSign::Positive);

// wave = regular * (Regular | NonZero) + singular * (Singular | Zero)
struct OriginCoefficients {
  cplx regular;
  cplx singular;
};

OriginCoefficients compose(Channel channel, Kind direction, double eps, double mass, double nu,
                           Delta delta = Delta::Plus);
OriginCoefficients compose_jmin(Channel channel, Kind direction, double eps, double mass,
                                KSign sign_k = KSign::Positive);

}  // namespace dsdirac
