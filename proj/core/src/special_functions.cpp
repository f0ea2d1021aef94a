#include "dsdirac/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dsdirac/errors.hpp"

namespace dsdirac {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLnPi = std::log(kPi);
const double kHalfLn2Pi = 0.5 * std::log(2.0 * kPi);

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kStirlingRadius = 15.0;

std::string format_complex(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

bool exact_pole(cplx z) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  const double r = std::round(z.real());
  return std::abs(z.real() - r) <= 1e-14 * std::max(1.0, std::abs(r));
}

cplx ln_gamma_right(cplx z) {
  cplx shift_sum = 0.0;
  cplx w = z;
  while (std::abs(w) < kStirlingRadius) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kHalfLn2Pi + series - shift_sum;
}

// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  const cplx i(0.0, 1.0);
  const double y = z.imag();
  if (std::abs(y) < 10.0) return std::log(std::sin(kPi * z));
  if (y > 0.0) return -i * kPi * z + std::log((1.0 - std::exp(2.0 * i * kPi * z)) * (i / 2.0));
  return i * kPi * z + std::log((1.0 - std::exp(-2.0 * i * kPi * z)) / (2.0 * i));
}

}  // namespace

bool near_integer(cplx z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

bool near_nonpositive_integer(cplx z, double tol) {
  return near_integer(z, tol) && std::round(z.real()) <= 0.0;
}

HypParams::HypParams(cplx a, cplx b, cplx c) : a_(a), b_(b), c_(c) {
  if (near_nonpositive_integer(c)) {
    throw DegenerateParameterError("hypergeometric parameter c = " + format_complex(c) +
                                   " is zero or a negative integer");
  }
}

HypParams HypParams::shifted(double da, double db, double dc) const {
  return HypParams(a_ + da, b_ + db, c_ + dc);
}

cplx ln_gamma(cplx z) {
  if (exact_pole(z)) {
    throw PoleError("z", z, "Gamma pole at z = " + format_complex(z));
  }
  if (z.real() < 0.5) {
    return kLnPi - log_sin_pi(z) - ln_gamma_right(1.0 - z);
  }
  return ln_gamma_right(z);
}

cplx gamma(cplx z) { return std::exp(ln_gamma(z)); }

cplx rgamma(cplx z) {
  if (exact_pole(z)) return 0.0;
  return std::exp(-ln_gamma(z));
}

cplx hyp2f1_series(const HypParams& p, double z, const SeriesOptions& opts) {
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("hyp2f1: argument z = " + std::to_string(z) + " outside [0, 1)");
  }
  cplx sum = 1.0;
  cplx term = 1.0;
  if (z == 0.0) return sum;
  int small_run = 0;
  for (std::size_t n = 0; n < opts.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (p.a() + dn) * (p.b() + dn) / ((p.c() + dn) * (dn + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= opts.rel_tol * std::abs(sum)) {
      if (++small_run >= opts.consecutive) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series not converged after " + std::to_string(opts.max_terms) +
                             " terms at z = " + std::to_string(z),
                         sum, opts.max_terms);
}

cplx hyp2f1(const HypParams& p, double z) {
  if (z <= kHyp2f1Crossover) return hyp2f1_series(p, z);
  const cplx a = p.a(), b = p.b(), c = p.c();
  const cplx s = c - a - b;
  // Close to an integer the two connection terms cancel badly; the series is slow but accurate.
  if (near_integer(s, 1e-3)) return hyp2f1_series(p, z);
  if (!(z < 1.0)) {
    throw DomainError("hyp2f1: argument z = " + std::to_string(z) + " outside [0, 1)");
  }
  const ConnectionCoeffs cc = kummer_connection(p, KummerDirection::U1ToU2U6);
  const double w = 1.0 - z;
  const cplx u2 = hyp2f1_series(HypParams(a, b, 1.0 - s), w);
  const cplx u6 = real_pow(w, s) * hyp2f1_series(HypParams(c - a, c - b, 1.0 + s), w);
  return cc.c_first * u2 + cc.c_second * u6;
}

cplx hyp2f1_deriv(const HypParams& p, double z, int order) {
  switch (order) {
    case 0:
      return hyp2f1(p, z);
    case 1:
      return p.a() * p.b() / p.c() * hyp2f1(p.shifted(1, 1, 1), z);
    case 2:
      return p.a() * (p.a() + 1.0) * p.b() * (p.b() + 1.0) / (p.c() * (p.c() + 1.0)) *
             hyp2f1(p.shifted(2, 2, 2), z);
    default:
      throw DomainError("hyp2f1_deriv: order must be 0, 1 or 2");
  }
}

HypParams euler_transform(const HypParams& p) {
  return HypParams(p.c() - p.a(), p.c() - p.b(), p.c());
}

cplx kummer_u(KummerIndex index, const HypParams& p, double z) {
  if (!(z > 0.0 && z < 1.0)) {
    throw DomainError("kummer_u: argument z = " + std::to_string(z) + " outside (0, 1)");
  }
  const cplx a = p.a(), b = p.b(), c = p.c();
  switch (index) {
    case KummerIndex::U1:
      return hyp2f1(p, z);
    case KummerIndex::U5:
      return real_pow(z, 1.0 - c) * hyp2f1(HypParams(a + 1.0 - c, b + 1.0 - c, 2.0 - c), z);
    case KummerIndex::U2:
      return hyp2f1(HypParams(a, b, a + b - c + 1.0), 1.0 - z);
    case KummerIndex::U6:
      return one_minus_pow(z, c - a - b) * hyp2f1(HypParams(c - a, c - b, c - a - b + 1.0), 1.0 - z);
  }
  throw DomainError("kummer_u: unknown index");
}

namespace {

struct GammaArg {
  const char* name;
  cplx value;
};

cplx gamma_ratio(GammaArg n1, GammaArg n2, cplx d1, cplx d2) {
  for (const GammaArg& g : {n1, n2}) {
    if (near_nonpositive_integer(g.value)) {
      throw PoleError(g.name, g.value,
                      std::string("Gamma pole in connection coefficient: Gamma(") + g.name + ") at " +
                          format_complex(g.value));
    }
  }
  return std::exp(ln_gamma(n1.value) + ln_gamma(n2.value)) * rgamma(d1) * rgamma(d2);
}

}  // namespace

ConnectionCoeffs kummer_connection(const HypParams& p, KummerDirection direction) {
  const cplx a = p.a(), b = p.b(), c = p.c();
  switch (direction) {
    case KummerDirection::U1ToU2U6:
      return {gamma_ratio({"c", c}, {"c-a-b", c - a - b}, c - a, c - b),
              gamma_ratio({"c", c}, {"a+b-c", a + b - c}, a, b)};
    case KummerDirection::U5ToU2U6:
      return {gamma_ratio({"2-c", 2.0 - c}, {"c-a-b", c - a - b}, 1.0 - a, 1.0 - b),
              gamma_ratio({"2-c", 2.0 - c}, {"a+b-c", a + b - c}, a + 1.0 - c, b + 1.0 - c)};
    case KummerDirection::U2ToU1U5:
      return {gamma_ratio({"a+b+1-c", a + b + 1.0 - c}, {"1-c", 1.0 - c}, a + 1.0 - c, b + 1.0 - c),
              gamma_ratio({"a+b+1-c", a + b + 1.0 - c}, {"c-1", c - 1.0}, a, b)};
    case KummerDirection::U6ToU1U5:
      return {gamma_ratio({"c+1-a-b", c + 1.0 - a - b}, {"1-c", 1.0 - c}, 1.0 - a, 1.0 - b),
              gamma_ratio({"c+1-a-b", c + 1.0 - a - b}, {"c-1", c - 1.0}, c - a, c - b)};
  }
  throw DomainError("kummer_connection: unknown direction");
}

std::string to_string(KummerDirection d) {
  switch (d) {
    case KummerDirection::U1ToU2U6: return "U1->(U2,U6)";
    case KummerDirection::U5ToU2U6: return "U5->(U2,U6)";
    case KummerDirection::U2ToU1U5: return "U2->(U1,U5)";
    case KummerDirection::U6ToU1U5: return "U6->(U1,U5)";
  }
  return "?";
}

cplx real_pow(double x, cplx s) {
  if (x > 0.0) return std::exp(s * std::log(x));
  if (x == 0.0) {
    if (s == cplx(0.0)) return 1.0;
    if (s.real() > 0.0) return 0.0;
    throw DomainError("real_pow: 0 raised to exponent with nonpositive real part");
  }
  throw DomainError("real_pow: negative base");
}

cplx one_minus_pow(double z, cplx s) {
  if (z < 1.0) {
    if (s == cplx(0.0)) return 1.0;
    return std::exp(s * std::log1p(-z));
  }
  return real_pow(1.0 - z, s);
}

cplx PowerHypForm::value(double z) const {
  const double x = arg == HypArgument::Z ? z : 1.0 - z;
  return real_pow(z, exp_z) * one_minus_pow(z, exp_1mz) * hyp2f1(hyp, x);
}

Jet PowerHypForm::jet(double z) const {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("jet: z outside [0, 1)");
  if (z == 0.0 && exp_z != cplx(0.0)) throw DomainError("jet: z = 0 with nonzero power of z");
  const double x = arg == HypArgument::Z ? z : 1.0 - z;
  const double sign = arg == HypArgument::Z ? 1.0 : -1.0;
  const cplx h0 = hyp2f1(hyp, x);
  const cplx h1 = sign * hyp2f1_deriv(hyp, x, 1);
  const cplx h2 = hyp2f1_deriv(hyp, x, 2);

  cplx l = 0.0, dl = 0.0;
  if (exp_z != cplx(0.0)) {
    l += exp_z / z;
    dl -= exp_z / (z * z);
  }
  if (exp_1mz != cplx(0.0)) {
    const double w = 1.0 - z;
    l -= exp_1mz / w;
    dl -= exp_1mz / (w * w);
  }
  const cplx pre = real_pow(z, exp_z) * one_minus_pow(z, exp_1mz);
  return {pre * h0, pre * (h1 + l * h0), pre * (h2 + 2.0 * l * h1 + (l * l + dl) * h0)};
}

}  // namespace dsdirac
