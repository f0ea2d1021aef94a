#pragma once

#include <functional>

#include "dsdirac/angular.hpp"
#include "dsdirac/jmin.hpp"
#include "dsdirac/radial.hpp"

namespace dsdirac {

struct SpacetimePoint {
  double t = 0.0;
  double r = 0.5;
  double theta = 1.0;
  double phi = 0.0;
};

// Radial samples closer than this to r = 0 or r = 1 are moved onto the boundary of the window.
inline constexpr double kRadialClamp = 1e-6;

struct SpinorSample {
  double t = 0.0;
  double r = 0.0;  // after clamping
  double theta = 0.0;
  double phi = 0.0;
  Spinor components{};
  bool clamped = false;
};

// r -> (f1, f2, f3, f4)
using RadialProfile = std::function<Spinor(double r)>;

RadialProfile radial_profile(const QuantumNumbers& qn, const RadialPair& pair);
RadialProfile radial_profile_jmin(const QuantumNumbers& qn, const JminPair& pair);

// e^{-i eps t} [r^-1 Phi^-1/4] (f1 D_{k-1/2}, f2 D_{k+1/2}, f3 D_{k-1/2}, f4 D_{k+1/2})
SpinorSample assemble(const QuantumNumbers& qn, const RadialPair& pair, const SpacetimePoint& point,
                      bool full_prefactor = false);
SpinorSample assemble_jmin(const QuantumNumbers& qn, const JminPair& pair, const SpacetimePoint& point,
                           bool full_prefactor = false);

// Shared path of assemble and assemble_jmin.
SpinorSample assemble_profile(const QuantumNumbers& qn, const RadialProfile& profile, const SpacetimePoint& point,
                              bool full_prefactor = false);

// The pair the labels call for; kind selects Regular/Singular (generic) or NonZero/Zero pairing (j_min).
RadialPair pair_for(const QuantumNumbers& qn, Kind kind);
JminPair jmin_pair_for(const QuantumNumbers& qn, JminPairing pairing);

// max |(i g0/sqrt(Phi) d_t + i sqrt(Phi) g3 d_r + Sigma^k/r - M) psi| over the largest term, psi without prefactor.
double dirac_residual(const QuantumNumbers& qn, const RadialProfile& profile, const SpacetimePoint& point);

struct KhatEstimate {
  std::complex<double> lambda;  // <psi, K psi> / <psi, psi>
  double residual;              // max |K psi - lambda psi| / max |psi|
};

// K = -i g0 g3 Sigma^k applied through finite differences in the angles.
KhatEstimate khat_eigenvalue(const QuantumNumbers& qn, const RadialProfile& profile, const SpacetimePoint& point);

}  // namespace dsdirac
