#pragma once

#include <array>

#include "dsdirac/radial.hpp"

namespace dsdirac {

enum class JminKind { NonZero, Zero };
enum class KSign { Positive, Negative };

// The negative-k sector differs from the positive one by M -> -M.
constexpr double mass_sign(KSign s) { return s == KSign::Positive ? 1.0 : -1.0; }
KSign ksign_of(HalfInt k);

const char* to_string(JminKind k);

// (1-z)^expB [1 | z^(1/2)] 2F1(hyp; z)
struct JminFamily {
  Channel channel;
  JminKind kind;
  cplx exp_a;  // 0 for NonZero, 1/2 for Zero
  cplx exp_b;
  HypParams hyp;
  double epsilon;
  double mass_eff;

  PowerHypForm form() const { return {exp_a, exp_b, hyp, HypArgument::Z}; }
};

// (a, b; 1/2) of the F channel and (a', b'; 1/2) of the G channel.
HypParams jmin_f_params(double eps, double mass_eff);
HypParams jmin_g_params(double eps, double mass_eff);

JminFamily jmin_params(double eps, double mass, KSign sign_k, Channel channel, JminKind kind);

cplx jmin_eval(const JminFamily& fam, double z);
Jet jmin_jet(const JminFamily& fam, double z);

enum class JminPairing { FNonZeroGZero, GNonZeroFZero };

const char* to_string(JminPairing p);

struct JminAmplitudes {
  cplx amp_nonzero;
  cplx amp_zero;
};

struct JminPair {
  JminPairing pairing;
  JminFamily f_family;
  JminFamily g_family;
  cplx f_amp;
  cplx g_amp;
  double epsilon;
  double mass_eff;

  std::array<cplx, 2> values(double z) const;
};

// amp_nonzero = 1; amp_zero = +-i a/c (resp. +-i a'/c') with the sign chosen by the smaller residual.
JminAmplitudes jmin_amplitudes(JminPairing pairing, double eps, double mass, KSign sign_k = KSign::Positive);

JminPair make_jmin_pair(JminPairing pairing, double eps, double mass, KSign sign_k = KSign::Positive);

// Same pair with explicitly chosen amplitudes (no sign selection).
JminPair make_jmin_pair(JminPairing pairing, double eps, double mass, KSign sign_k, JminAmplitudes amps);

FirstOrderResidual jmin_first_order_residual(const JminPair& pair, double z);

SecondOrderCoeffs jmin_second_order_coeffs(Channel channel, double eps, double mass_eff, double z);
SecondOrderResidual jmin_second_order_residual(const JminFamily& fam, double z);

// (h, g) = rotation_matrix(z) (F, G); k > 0 gives (f1, 0, f3, 0), k < 0 gives (0, f2, 0, f4).
Spinor hg_reconstruct(cplx F, cplx G, double z, KSign sign_k);

}  // namespace dsdirac
