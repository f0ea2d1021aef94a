#include "dsdirac/ode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dsdirac/errors.hpp"
#include "dsdirac/flat_limit.hpp"
#include "dsdirac/jmin.hpp"
#include "dsdirac/radial.hpp"

namespace dsdirac {

namespace {

const cplx I(0.0, 1.0);

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [coef, k] : terms) {
    out[0] += h * coef * (*k)[0];
    out[1] += h * coef * (*k)[1];
  }
  return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;
constexpr double kAlpha = 0.2 - 0.75 * kBeta;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 10.0;
constexpr std::size_t kMaxSteps = 2'000'000;

double scaled_norm(const State& err, const State& y0, const State& y1, double tol) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double sc = tol + tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    m = std::max(m, std::abs(err[i]) / sc);
  }
  return m;
}

std::string where(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

const char* to_string(SystemId id) {
  switch (id) {
    case SystemId::RhoForm: return "rho";
    case SystemId::ZForm: return "z";
    case SystemId::JminZForm: return "jmin-z";
    case SystemId::MinkowskiForm: return "minkowski";
  }
  return "?";
}

SystemSpec make_system(SystemId id, double eps, double mass, double nu, Delta delta) {
  if (!(nu >= 0.0)) throw DomainError("make_system: nu must be nonnegative");
  if (id == SystemId::MinkowskiForm) return {id, eps, mass, 0.0};
  if (id == SystemId::JminZForm) return {id, eps, sign(delta) * mass, 0.0};
  return {id, eps, sign(delta) * mass, nu};
}

State SystemSpec::rhs(double x, const State& y) const {
  const double e = epsilon, m = mass_eff, n = nu;
  switch (id) {
    case SystemId::ZForm: {
      const double z = x;
      const double sq = std::sqrt(z * (1.0 - z));
      const cplx diag = -n / (2.0 * z) + I * e / (2.0 * (1.0 - z));
      const cplx kfg = e + m - I * n - I / 2.0;
      const cplx kgf = -e + m + I * n - I / 2.0;
      return {diag * y[0] - kfg * y[1] / (2.0 * sq), -diag * y[1] - kgf * y[0] / (2.0 * sq)};
    }
    case SystemId::JminZForm: {
      const double z = x;
      const double sq = std::sqrt(z * (1.0 - z));
      const cplx diag = I * e / (2.0 * (1.0 - z));
      return {diag * y[0] - (m + e - I / 2.0) / 2.0 * y[1] / sq, -diag * y[1] - (m - e - I / 2.0) / 2.0 * y[0] / sq};
    }
    case SystemId::RhoForm: {
      // (f, g) system before the rotation to (F, G)
      const double s = std::sin(x), c = std::cos(x);
      return {-n / s * y[0] - (e / c + m) * y[1], n / s * y[1] + (e / c - m) * y[0]};
    }
    case SystemId::MinkowskiForm:
      return {-(e + m) * y[1], (e - m) * y[0]};
  }
  throw DomainError("rhs: unknown system");
}

Trajectory integrate(const SystemSpec& sys, double start, double end, const State& initial, double tol,
                     const std::vector<double>& output_points) {
  if (!(tol >= kMinTolerance && tol <= kMaxTolerance)) {
    throw DomainError("integrate: tol must lie in [1e-12, 1e-6]");
  }
  if (!(start != end) || !std::isfinite(start) || !std::isfinite(end)) {
    throw DomainError("integrate: start and end must be distinct finite numbers");
  }
  const double dir = end > start ? 1.0 : -1.0;
  std::vector<double> targets;
  for (double p : output_points) {
    if (dir * (p - start) > 0.0 && dir * (end - p) > 0.0) targets.push_back(p);
  }
  std::sort(targets.begin(), targets.end(), [dir](double a, double b) { return dir * a < dir * b; });
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  targets.push_back(end);
  const bool record_all = output_points.empty();

  Trajectory tr;
  tr.grid.push_back(start);
  tr.values.push_back(initial);

  double x = start;
  State y = initial;
  State k1 = sys.rhs(x, y);

  const double span = std::abs(end - start);
  double h;
  {
    const double d0 = std::max(std::abs(y[0]), std::abs(y[1]));
    const double d1 = std::max(std::abs(k1[0]), std::abs(k1[1]));
    h = (d0 > 1e-5 && d1 > 1e-5) ? 0.01 * d0 / d1 : 1e-6 * span;
    h = std::min({h, span, 1e-2 * span + 1e-6});
  }
  double err_old = 1e-4;
  std::size_t next = 0;
  bool last_rejected = false;

  for (std::size_t step = 0; step < kMaxSteps; ++step) {
    const double target = targets[next];
    const double remaining = std::abs(target - x);
    bool hits_target = false;
    if (h >= remaining) {
      h = remaining;
      hits_target = true;
    }
    if (h < 1e-14 * std::max(1.0, std::abs(x))) {
      tr.diagnostic = "step size underflow at x = " + where(x);
      return tr;
    }
    const double hs = dir * h;
    const State k2 = sys.rhs(x + c2 * hs, axpy(y, hs, {{a21, &k1}}));
    const State k3 = sys.rhs(x + c3 * hs, axpy(y, hs, {{a31, &k1}, {a32, &k2}}));
    const State k4 = sys.rhs(x + c4 * hs, axpy(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = sys.rhs(x + c5 * hs, axpy(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = sys.rhs(x + hs, axpy(y, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = axpy(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double x_new = hits_target ? target : x + hs;
    const State k7 = sys.rhs(x_new, y_new);
    const State err_vec = axpy(State{0.0, 0.0}, hs, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
    const double err = scaled_norm(err_vec, y, y_new, tol);
    if (!std::isfinite(err)) {
      tr.diagnostic = "non-finite state near x = " + where(x);
      return tr;
    }

    if (err <= 1.0) {
      ++tr.accepted;
      tr.est_error = std::max(tr.est_error, err * tol);
      x = x_new;
      y = y_new;
      k1 = k7;
      if (hits_target) {
        tr.grid.push_back(x);
        tr.values.push_back(y);
        if (++next == targets.size()) {
          tr.complete = true;
          return tr;
        }
      } else if (record_all) {
        tr.grid.push_back(x);
        tr.values.push_back(y);
      }
      const double fac11 = err > 0.0 ? std::pow(err, kAlpha) : 0.0;
      double fac = err > 0.0 ? fac11 / std::pow(err_old, kBeta) / kSafety : 1.0 / kFacMax;
      fac = std::clamp(fac, 1.0 / kFacMax, 1.0 / kFacMin);
      double h_new = h / fac;
      if (last_rejected) h_new = std::min(h_new, h);
      err_old = std::max(err, 1e-4);
      last_rejected = false;
      // a step shortened to land on an output point should not shrink the next one
      if (!hits_target || h_new > h) h = h_new;
    } else {
      ++tr.rejected;
      const double fac11 = std::pow(err, kAlpha);
      h = h / std::min(1.0 / kFacMin, fac11 / kSafety);
      last_rejected = true;
    }
  }
  tr.diagnostic = "step limit reached at x = " + where(x);
  return tr;
}

State seed_regular(const SystemSpec& sys, double x0) {
  switch (sys.id) {
    case SystemId::ZForm: {
      const RadialPair pair = make_radial_pair(Kind::Regular, SystemParams{sys.epsilon, sys.mass_eff, sys.nu});
      return pair.values(x0);
    }
    case SystemId::RhoForm: {
      const double z = std::sin(x0) * std::sin(x0);
      const RadialPair pair = make_radial_pair(Kind::Regular, SystemParams{sys.epsilon, sys.mass_eff, sys.nu});
      const auto v = pair.values(z);
      const auto [f, g] = fg_from_FG(v[0], v[1], z);
      return {f, g};
    }
    case SystemId::JminZForm: {
      const JminPair pair = make_jmin_pair(JminPairing::FNonZeroGZero, sys.epsilon, sys.mass_eff, KSign::Positive);
      return pair.values(x0);
    }
    case SystemId::MinkowskiForm: {
      const FlatHG hg = classify(sys.epsilon, sys.mass_eff).regime == Regime::Threshold
                            ? minkowski_threshold(sys.epsilon, sys.mass_eff, x0, Combo::First)
                            : minkowski_jmin(sys.epsilon, sys.mass_eff, x0, Combo::First);
      return {hg.h, hg.g};
    }
  }
  throw DomainError("seed_regular: unknown system");
}

OracleReport compare_with_closed_form(const SystemSpec& sys, const std::function<State(double)>& exact, double x0,
                                      double x1, std::size_t n, double tol) {
  if (n < 2) throw DomainError("compare_with_closed_form: need at least two points");
  std::vector<double> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(n - 1);
  OracleReport rep;
  rep.trajectory = integrate(sys, x0, x1, exact(x0), tol, pts);
  for (std::size_t i = 0; i < rep.trajectory.grid.size(); ++i) {
    const State ex = exact(rep.trajectory.grid[i]);
    const State& nu = rep.trajectory.values[i];
    const double scale = std::abs(ex[0]) + std::abs(ex[1]);
    const double dev = std::abs(nu[0] - ex[0]) + std::abs(nu[1] - ex[1]);
    rep.max_relative = std::max(rep.max_relative, scale > 0.0 ? dev / scale : dev);
  }
  if (!rep.trajectory.complete) rep.max_relative = std::max(rep.max_relative, 1.0);
  return rep;
}

}  // namespace dsdirac
