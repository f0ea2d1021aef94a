#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dsdirac/angular.hpp"
#include "dsdirac/special_functions.hpp"

namespace dsdirac {

// RhoForm: (f, g) in rho = asin(r). ZForm: (F, G) in z. JminZForm: j_min (F, G) in z.
// MinkowskiForm: flat j_min (h, g) in r.
enum class SystemId { RhoForm, ZForm, JminZForm, MinkowskiForm };

const char* to_string(SystemId id);

using State = std::array<cplx, 2>;

struct SystemSpec {
  SystemId id;
  double epsilon = 0.0;
  double mass_eff = 0.0;  // delta M (or sign(k) M for j_min); the plain mass for MinkowskiForm
  double nu = 0.0;

  State rhs(double x, const State& y) const;
};

SystemSpec make_system(SystemId id, double eps, double mass, double nu = 0.0, Delta delta = Delta::Plus);

struct Trajectory {
  std::vector<double> grid;
  std::vector<State> values;
  double est_error = 0.0;  // largest accepted local error estimate, in units of the tolerance times tol
  bool complete = false;
  std::string diagnostic;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

inline constexpr double kMinTolerance = 1e-12;
inline constexpr double kMaxTolerance = 1e-6;

// Dormand-Prince 5(4) with PI step control, atol = rtol = tol. The grid is start, the output points
// strictly between start and end, and end; with no output points every accepted step is recorded.
Trajectory integrate(const SystemSpec& sys, double start, double end, const State& initial, double tol,
                     const std::vector<double>& output_points = {});

// Closed-form regular solution at x0 (z0 for the z-forms, rho0 for RhoForm, r0 for MinkowskiForm).
State seed_regular(const SystemSpec& sys, double x0);

struct OracleReport {
  double max_relative = 0.0;  // max over the grid of |numeric - exact| / (|exact_1| + |exact_2|)
  Trajectory trajectory;
};

// Seeds at x0 from exact, integrates to x1 and compares at n evenly spaced points.
OracleReport compare_with_closed_form(const SystemSpec& sys, const std::function<State(double)>& exact, double x0,
                                      double x1, std::size_t n, double tol);

}  // namespace dsdirac
