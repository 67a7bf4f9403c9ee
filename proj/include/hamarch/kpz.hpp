#pragma once

#include <string>
#include <vector>

#include "hamarch/real.hpp"

namespace hamarch {

/// Magnetic charge M = phi1 A + phi2 b2 with half-integer coordinates,
/// stored doubled so they stay exact. phi1 + phi2 must be an integer.
struct MagneticCharge {
  int phi1_x2 = 0;
  int phi2_x2 = 0;

  Real phi1() const { return Real(phi1_x2) / 2; }
  Real phi2() const { return Real(phi2_x2) / 2; }
  bool operator==(const MagneticCharge&) const = default;
};

MagneticCharge make_charge(int phi1_x2, int phi2_x2);  // validates the integer constraint

/// M = (3/2)(j+k) A + (1/2)(k-j) b2.
MagneticCharge charge_from_jk(int j, int k);

struct LoopModelParams {
  Real n;
  Real g;      // 1 - arccos(n/2)/pi
  Real e0;     // 1 - g
  Real alpha;  // normalization of the phi1 (A-direction) term
};

LoopModelParams params_for(const Real& n, const Real& alpha = Real(1));

enum class Packing { Fully, Dense };

/// 2 - 6(1-g)^2/g for fully packed loops, 1 - 6(1-g)^2/g for the dense phase.
Real central_charge(const Real& n, Packing packing);

/// String susceptibility gamma(c) = (c - 1 - sqrt((1-c)(25-c))) / 12.
Real gamma_string(const Real& c);

/// Liouville parameter gamma_L(c) = (sqrt(25-c) - sqrt(1-c)) / sqrt(6);
/// satisfies gamma(c) = 1 - 4 / gamma_L(c)^2.
Real gamma_liouville(const Real& c);

/// Gravitationally dressed dimension
/// Delta(h, c) = (sqrt(1-c+24h) - sqrt(1-c)) / (sqrt(25-c) - sqrt(1-c)).
Real delta_dressed(const Real& h, const Real& c);

/// Classical vortex dimension with the alpha-scaled A-direction term:
/// h = alpha (g/12) phi1^2 + (g/4) (1 - delta_{phi2,0}) (phi2^2 - (1-1/g)^2).
Real h_magnetic(const MagneticCharge& m, const LoopModelParams& p);

struct BetaPredictions {
  Real beta_z, beta_y, beta_x, beta_w, beta_v, beta_u;
  Real gamma;
  std::vector<std::pair<MagneticCharge, Real>> deltas;
};

/// The six configuration-exponent predictions at c = -1 (the n = 0 bicubic
/// point), for a given alpha. alpha = 1 is the naive application.
BetaPredictions predicted_betas(const Real& n, const Real& alpha);

/// Delta(alpha l^2 / 72, c=1) = l sqrt(alpha) / (6 sqrt(2)); equals l/8 at
/// alpha = 9/8 for every l.
Real watermelon_delta(int l, const Real& alpha);

struct SleDuality {
  Real kappa;           // 4 pi / arccos(-n/2)
  Real g_tilde;         // 2 - g (dilute partner)
  Real g_prime;         // 1 / (2 - g) (dual dense coupling)
  Real n_prime;         // -2 cos(pi g')
  Real alpha_ansatz;    // 1 / (1 - e0^2)
  Real gammaL_bicubic;  // Liouville parameter in terms of kappa
};

SleDuality sle_and_duality(const Real& n);

/// Exact surd annotations for the printed naive / (4/3)-corrected columns.
struct BetaClosedForms {
  std::string beta_z, beta_y, beta_x, beta_w, beta_v, beta_u;
};
BetaClosedForms beta_closed_forms(bool corrected);

}  // namespace hamarch
