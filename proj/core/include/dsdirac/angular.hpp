#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "dsdirac/dirac_basis.hpp"
#include "dsdirac/half_int.hpp"

namespace dsdirac {

enum class Delta { Plus = 1, Minus = -1 };

constexpr int sign(Delta d) { return d == Delta::Plus ? 1 : -1; }

struct AngularLabels {
  HalfInt k;
  HalfInt j;
  HalfInt m;

  HalfInt j_min() const { return k.abs() - kHalf; }
  bool is_jmin() const { return j == j_min(); }
};

// Reason the triple is off the lattice, or nullopt when it is valid.
std::optional<std::string> lattice_violation(HalfInt k, HalfInt j, HalfInt m);

// Throws LatticeError carrying the reason.
AngularLabels validate(HalfInt k, HalfInt j, HalfInt m);

struct QuantumNumbers {
  double epsilon = 0.0;
  double mass = 0.0;
  AngularLabels labels;
  Delta delta = Delta::Plus;
};

QuantumNumbers make_quantum_numbers(double epsilon, double mass, HalfInt k, HalfInt j, HalfInt m,
                                    Delta delta = Delta::Plus);

// sqrt((j + 1/2)^2 - k^2). Pure arithmetic, DomainError if the radicand is negative.
double nu(HalfInt j, HalfInt k);

// Dirac-operator eigenvalue -delta*nu; zero at j_min.
double lambda(const QuantumNumbers& qn);

struct CouplingCoeffs {
  double a_ang = 0.0;
  double b_ang = 0.0;
  double c_ang = 0.0;
  bool b_absent = false;  // D_{k+3/2} does not exist for this j
  bool c_absent = false;  // D_{k-3/2} does not exist for this j
};

CouplingCoeffs coupling_coeffs(HalfInt j, HalfInt k);

struct AngularSector {
  QuantumNumbers qn;
  double nu = 0.0;
  CouplingCoeffs coeffs;
};

AngularSector make_sector(const QuantumNumbers& qn);

// Small Wigner d^j_{mp,sig}(theta), explicit factorial sum.
double wigner_d(HalfInt j, HalfInt mp, HalfInt sig, double theta);

// As wigner_d, but zero when |mp| > j or |sig| > j.
double wigner_d_or_zero(HalfInt j, HalfInt mp, HalfInt sig, double theta);

// D_sigma = D^j_{-m,sigma}(phi, theta, 0) = e^{i m phi} d^j_{-m,sigma}(theta); zero when absent.
std::complex<double> separation_D(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);

// Largest residual of the four theta-recursions of D_{k +- 1/2}.
double check_recursions(HalfInt j, HalfInt k, HalfInt m, double theta);

using AngularField = std::function<Spinor(double theta, double phi)>;

// Sigma^k = i g1 d_theta + g2 (i d_phi + (i sigma12 - k) cos theta) / sin theta, by finite differences.
Spinor apply_sigma(HalfInt k, const AngularField& psi, double theta, double phi);

// i nu (-f4 D_-, f3 D_+, f2 D_-, -f1 D_+)
Spinor sigma_action(const AngularSector& sector, const Spinor& f, double theta, double phi = 0.0);

// Sigma applied to (f1 D_-, f2 D_+, f3 D_-, f4 D_+) through apply_sigma.
Spinor sigma_action_direct(const AngularSector& sector, const Spinor& f, double theta, double phi = 0.0);

// max |Sigma psi| over all m of the j_min spinor of charge k.
double jmin_annihilation(HalfInt k, double theta);

struct MonopolePotential {
  double g = 0.0;

  double a_phi(double theta) const;
  // F_{phi theta} = g sin theta
  double f_phi_theta(double theta) const;
};

// Divergence of the monopole field strength in the static patch; analytically zero.
double maxwell_residual(double g, double r, double theta);

}  // namespace dsdirac
