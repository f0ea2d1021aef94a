#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace dsdirac {

using cplx = std::complex<double>;

// Distance below which a parameter is treated as sitting on an integer.
inline constexpr double kIntegerTolerance = 1e-8;

bool near_integer(cplx z, double tol = kIntegerTolerance);
bool near_nonpositive_integer(cplx z, double tol = kIntegerTolerance);

// Gauss hypergeometric parameters (a, b; c). c must avoid 0, -1, -2, ...
class HypParams {
 public:
  HypParams(cplx a, cplx b, cplx c);

  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }
  cplx c() const noexcept { return c_; }

  // (a + da, b + db; c + dc), used by the contiguous derivative relations.
  HypParams shifted(double da, double db, double dc) const;

  friend bool operator==(const HypParams&, const HypParams&) = default;

 private:
  cplx a_, b_, c_;
};

struct ConnectionCoeffs {
  cplx c_first;
  cplx c_second;
};

struct SeriesOptions {
  std::size_t max_terms = 10000;
  double rel_tol = 1e-17;
  int consecutive = 3;
};

// Principal log-Gamma. Throws PoleError at nonpositive integers.
cplx ln_gamma(cplx z);
cplx gamma(cplx z);
// 1/Gamma(z); exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

// Plain Gauss series on z in [0, 1).
cplx hyp2f1_series(const HypParams& p, double z, const SeriesOptions& opts = {});

// Series below the crossover, connection to argument 1 - z above it when c - a - b is not integral.
cplx hyp2f1(const HypParams& p, double z);
inline constexpr double kHyp2f1Crossover = 0.9;

// d^order/dz^order of 2F1 via the contiguous relation; order in {0, 1, 2}.
cplx hyp2f1_deriv(const HypParams& p, double z, int order = 1);

// (c - a, c - b; c)
HypParams euler_transform(const HypParams& p);

enum class KummerIndex { U1 = 1, U2 = 2, U5 = 5, U6 = 6 };

// U1 = F(a,b;c;z), U5 = z^(1-c) F(a+1-c,b+1-c;2-c;z),
// U2 = F(a,b;a+b-c+1;1-z), U6 = (1-z)^(c-a-b) F(c-a,c-b;c-a-b+1;1-z).
cplx kummer_u(KummerIndex index, const HypParams& p, double z);

enum class KummerDirection { U1ToU2U6, U5ToU2U6, U2ToU1U5, U6ToU1U5 };

ConnectionCoeffs kummer_connection(const HypParams& p, KummerDirection direction);

std::string to_string(KummerDirection d);

// x^s for real x >= 0 on the principal branch. 0^s is 1 for s = 0, 0 for Re s > 0.
cplx real_pow(double x, cplx s);

// (1-z)^s through log1p, accurate for small z.
cplx one_minus_pow(double z, cplx s);

// Value and first two derivatives with respect to z.
struct Jet {
  cplx value;
  cplx d1;
  cplx d2;
};

enum class HypArgument { Z, OneMinusZ };

// z^p (1-z)^q 2F1(hyp; x) with x = z or 1 - z.
struct PowerHypForm {
  cplx exp_z;
  cplx exp_1mz;
  HypParams hyp;
  HypArgument arg = HypArgument::Z;

  cplx value(double z) const;
  Jet jet(double z) const;
};

}  // namespace dsdirac
