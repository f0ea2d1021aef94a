#include "dsdirac/flat_limit.hpp"

#include <cmath>

#include "dsdirac/errors.hpp"
#include "dsdirac/jmin.hpp"

namespace dsdirac {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Oscillatory: return "oscillatory";
    case Regime::Evanescent: return "evanescent";
    case Regime::Threshold: return "threshold";
  }
  return "?";
}

FlatRegime classify(double eps, double mass) {
  const double d = eps * eps - mass * mass;
  if (d > 0.0) return {Regime::Oscillatory, std::sqrt(d)};
  if (d < 0.0) return {Regime::Evanescent, std::sqrt(-d)};
  return {Regime::Threshold, 0.0};
}

FlatHG minkowski_jmin(double eps, double mass, double r, Combo combo) {
  const FlatRegime reg = classify(eps, mass);
  const double k = reg.p_or_q, em = eps - mass;
  switch (reg.regime) {
    case Regime::Oscillatory:
      if (combo == Combo::First) return {std::cos(k * r), em / k * std::sin(k * r)};
      return {std::sin(k * r), -em / k * std::cos(k * r)};
    case Regime::Evanescent:
      if (combo == Combo::First) return {std::cosh(k * r), em / k * std::sinh(k * r)};
      return {std::sinh(k * r), em / k * std::cosh(k * r)};
    case Regime::Threshold:
      break;
  }
  throw DomainError("minkowski_jmin: eps^2 = M^2 is the threshold case; use minkowski_threshold");
}

FlatHG minkowski_jmin_derivative(double eps, double mass, double r, Combo combo) {
  const FlatRegime reg = classify(eps, mass);
  const double k = reg.p_or_q, em = eps - mass;
  switch (reg.regime) {
    case Regime::Oscillatory:
      if (combo == Combo::First) return {-k * std::sin(k * r), em * std::cos(k * r)};
      return {k * std::cos(k * r), em * std::sin(k * r)};
    case Regime::Evanescent:
      if (combo == Combo::First) return {k * std::sinh(k * r), em * std::cosh(k * r)};
      return {k * std::cosh(k * r), em * std::sinh(k * r)};
    case Regime::Threshold:
      break;
  }
  throw DomainError("minkowski_jmin_derivative: threshold case");
}

FlatHG minkowski_threshold(double eps, double mass, double r, Combo combo) {
  if (classify(eps, mass).regime != Regime::Threshold) throw DomainError("minkowski_threshold: eps^2 != M^2");
  if (combo == Combo::First) return {1.0, (eps - mass) * r};
  if (eps + mass == 0.0) throw DomainError("minkowski_threshold: second combination undefined for eps = -M");
  return {r, -1.0 / (eps + mass)};
}

FlatHG minkowski_threshold_derivative(double eps, double mass, double r, Combo combo) {
  (void)r;
  if (classify(eps, mass).regime != Regime::Threshold) throw DomainError("minkowski_threshold: eps^2 != M^2");
  if (combo == Combo::First) return {0.0, eps - mass};
  if (eps + mass == 0.0) throw DomainError("minkowski_threshold: second combination undefined for eps = -M");
  return {1.0, 0.0};
}

double minkowski_residual(double eps, double mass, FlatHG hg, FlatHG dhg) {
  const double t1 = dhg.h, t2 = (eps + mass) * hg.g;
  const double u1 = dhg.g, u2 = -(eps - mass) * hg.h;
  const auto rel = [](double a, double b) {
    const double scale = std::abs(a) + std::abs(b);
    return scale > 0.0 ? std::abs(a + b) / scale : 0.0;
  };
  return std::max(rel(t1, t2), rel(u1, u2));
}

double flat_bound_profile(double eps, double mass, double r) {
  if (!(mass > eps && eps >= 0.0)) throw DomainError("flat_bound_profile: requires M > eps >= 0");
  if (r < 0.0) throw DomainError("flat_bound_profile: r must be nonnegative");
  return std::exp(-std::sqrt(mass * mass - eps * eps) * r);
}

JminParamPair physical_params(const PhysicalUnits& u) {
  if (!(u.c_light > 0.0 && u.hbar > 0.0 && u.rho_curv > 0.0)) {
    throw DomainError("physical_params: c, hbar and rho must be positive");
  }
  if (u.m < 0.0) throw DomainError("physical_params: mass must be nonnegative");
  const cplx i(0.0, 1.0);
  const double mr = u.m * u.c_light * u.rho_curv / u.hbar;
  const double er = u.E * u.rho_curv / (u.c_light * u.hbar);
  return {HypParams(0.5 * (0.5 + i * (mr - er)), 0.5 * (-i * (mr + er) - 0.5), 0.5),
          HypParams(0.5 * (0.5 + i * (mr + er)), 0.5 * (-i * (mr - er) - 0.5), 0.5)};
}

double fitted_order(const std::vector<double>& x, const std::vector<double>& err) {
  if (x.size() != err.size() || x.size() < 2) throw DomainError("fitted_order: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && err[i] > 0.0)) throw DomainError("fitted_order: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(err[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw DomainError("fitted_order: abscissae coincide");
  return -(n * sxy - sx * sy) / den;
}

LimitStudy limit_check(double E, double m, double R, const std::vector<double>& rho_list) {
  if (!(E * E > m * m)) throw DomainError("limit_check: requires E^2 > m^2 (oscillatory regime)");
  if (!(R > 0.0)) throw DomainError("limit_check: R must be positive");
  LimitStudy out;
  out.p = std::sqrt(E * E - m * m);
  const double pr = out.p * R;
  std::vector<double> rhos, ec, es, ecr, esr;
  for (double rho : rho_list) {
    if (!(rho > R)) throw DomainError("limit_check: every rho must exceed R");
    const double z = (R / rho) * (R / rho);
    const double eps = E * rho, mass = m * rho;
    const cplx nonzero = jmin_eval(jmin_params(eps, mass, KSign::Positive, Channel::F, JminKind::NonZero), z);
    const HypParams core = jmin_f_params(eps, mass).shifted(0.5, 0.5, 1.0);
    const cplx sin_like = pr * hyp2f1(core, z);
    const LimitPoint pt{rho, std::abs(nonzero - std::cos(pr)), std::abs(sin_like - std::sin(pr)),
                        std::abs(nonzero.real() - std::cos(pr)), std::abs(sin_like.real() - std::sin(pr))};
    out.points.push_back(pt);
    rhos.push_back(rho);
    ec.push_back(pt.cos_error);
    es.push_back(pt.sin_error);
    ecr.push_back(pt.cos_error_real);
    esr.push_back(pt.sin_error_real);
  }
  if (rhos.size() >= 2) {
    const auto safe = [&](const std::vector<double>& e) {
      for (double v : e) {
        if (!(v > 0.0)) return 0.0;
      }
      return fitted_order(rhos, e);
    };
    out.order_cos = safe(ec);
    out.order_sin = safe(es);
    out.order_cos_real = safe(ecr);
    out.order_sin_real = safe(esr);
  }
  return out;
}

}  // namespace dsdirac
