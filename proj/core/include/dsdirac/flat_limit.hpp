#pragma once

#include <vector>

#include "dsdirac/special_functions.hpp"

namespace dsdirac {

enum class Regime { Oscillatory, Evanescent, Threshold };

const char* to_string(Regime r);

struct FlatRegime {
  Regime regime;
  double p_or_q;  // p = sqrt(eps^2 - M^2) or q = sqrt(M^2 - eps^2); 0 at threshold
};

FlatRegime classify(double eps, double mass);

enum class Combo { First, Second };

struct FlatHG {
  double h;
  double g;
};

// First: (cos pr, (eps-M)/p sin pr), Second: (sin pr, -(eps-M)/p cos pr); hyperbolic analogues below threshold.
// DomainError at threshold.
FlatHG minkowski_jmin(double eps, double mass, double r, Combo combo);
FlatHG minkowski_jmin_derivative(double eps, double mass, double r, Combo combo);

// eps^2 = M^2. First: (1, (eps-M) r). Second, scaled by 1/p: (r, -1/(eps+M)).
FlatHG minkowski_threshold(double eps, double mass, double r, Combo combo);
FlatHG minkowski_threshold_derivative(double eps, double mass, double r, Combo combo);

// Relative residual of h' + (eps+M) g = 0, g' - (eps-M) h = 0.
double minkowski_residual(double eps, double mass, FlatHG hg, FlatHG dhg);

// exp(-sqrt(M^2 - eps^2) r), requires M > eps >= 0.
double flat_bound_profile(double eps, double mass, double r);

struct PhysicalUnits {
  double E = 0.0;
  double m = 0.0;
  double c_light = 1.0;
  double hbar = 1.0;
  double rho_curv = 1.0;

  double epsilon() const { return E * rho_curv / (c_light * hbar); }
  double mass() const { return m * c_light * rho_curv / hbar; }
};

struct JminParamPair {
  HypParams f;  // (a, b; 1/2)
  HypParams g;  // (a', b'; 1/2)
};

JminParamPair physical_params(const PhysicalUnits& u);

struct LimitPoint {
  double rho;
  double cos_error;       // |F_nonzero(R) - cos pR|
  double sin_error;       // |pR F(a+1/2, b+1/2; 3/2; R^2/rho^2) - sin pR|
  double cos_error_real;  // same with the real part only
  double sin_error_real;
};

struct LimitStudy {
  double p;
  std::vector<LimitPoint> points;
  // Least-squares slopes of -log(error) against log(rho).
  double order_cos = 0.0;
  double order_sin = 0.0;
  double order_cos_real = 0.0;
  double order_sin_real = 0.0;
};

// Natural units (c = hbar = 1). Requires E^2 > m^2 and R < rho.
LimitStudy limit_check(double E, double m, double R, const std::vector<double>& rho_list);

// Slope of -log(err) versus log(x); needs at least two points with err > 0.
double fitted_order(const std::vector<double>& x, const std::vector<double>& err);

}  // namespace dsdirac
