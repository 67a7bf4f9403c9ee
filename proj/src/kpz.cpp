#include "hamarch/kpz.hpp"

#include "hamarch/errors.hpp"

namespace hamarch {

namespace {

Real pi_val() { return acos(Real(-1)); }

void check_matter_range(const Real& n) {
  if (n < 0 || n > 2) throw Error("loop fugacity n must lie in [0, 2]");
}

}  // namespace

MagneticCharge make_charge(int phi1_x2, int phi2_x2) {
  if ((phi1_x2 + phi2_x2) % 2 != 0)
    throw Error("magnetic charge: phi1 + phi2 must be an integer");
  return MagneticCharge{phi1_x2, phi2_x2};
}

MagneticCharge charge_from_jk(int j, int k) {
  return make_charge(3 * (j + k), k - j);
}

LoopModelParams params_for(const Real& n, const Real& alpha) {
  check_matter_range(n);
  if (alpha <= 0) throw Error("alpha must be positive");
  LoopModelParams p;
  p.n = n;
  p.e0 = acos(n / 2) / pi_val();
  p.g = 1 - p.e0;
  p.alpha = alpha;
  return p;
}

Real central_charge(const Real& n, Packing packing) {
  LoopModelParams p = params_for(n, 1);
  Real dense = 1 - 6 * (1 - p.g) * (1 - p.g) / p.g;
  return packing == Packing::Fully ? dense + 1 : dense;
}

Real gamma_string(const Real& c) {
  if (c > 1) throw Error("gamma(c) needs c <= 1");
  return (c - 1 - sqrt((1 - c) * (25 - c))) / 12;
}

Real gamma_liouville(const Real& c) {
  if (c > 1) throw Error("gamma_L(c) needs c <= 1");
  return (sqrt(25 - c) - sqrt(1 - c)) / sqrt(Real(6));
}

Real delta_dressed(const Real& h, const Real& c) {
  if (c > 1) throw Error("Delta(h, c) needs c <= 1");
  Real disc = 1 - c + 24 * h;
  if (disc < 0) throw Error("Delta(h, c): 1 - c + 24h is negative");
  return (sqrt(disc) - sqrt(1 - c)) / (sqrt(25 - c) - sqrt(1 - c));
}

Real h_magnetic(const MagneticCharge& m, const LoopModelParams& p) {
  Real f1 = p.alpha * p.g / 12 * m.phi1() * m.phi1();
  if (m.phi2_x2 == 0) return f1;
  Real gap = 1 - 1 / p.g;
  return f1 + p.g / 4 * (m.phi2() * m.phi2() - gap * gap);
}

BetaPredictions predicted_betas(const Real& n, const Real& alpha) {
  if (n != 0) throw Unsupported("predicted_betas: only the n = 0 (c = -1) point is exposed");
  LoopModelParams p = params_for(n, alpha);
  const Real c = -1;
  BetaPredictions out;
  out.gamma = gamma_string(c);

  auto delta_of = [&](MagneticCharge m) {
    Real d = delta_dressed(h_magnetic(m, p), c);
    out.deltas.emplace_back(m, d);
    return d;
  };
  Real d_y = delta_of(make_charge(3, 1));    // (3/2) A + (1/2) b2
  Real d_x = delta_of(make_charge(-1, 1));   // -(1/2) A + (1/2) b2
  Real d_w = delta_of(make_charge(2, 0));    // A
  Real d_v = delta_of(make_charge(4, 0));    // 2A

  out.beta_z = 2 - out.gamma;
  out.beta_y = 1 + 2 * d_y - out.gamma;
  out.beta_x = 1 + 2 * d_x - out.gamma;
  out.beta_w = 1 + 2 * d_w - out.gamma;
  out.beta_v = 1 + 2 * d_v - out.gamma;
  out.beta_u = d_v + 2 * d_w - out.gamma;
  return out;
}

Real watermelon_delta(int l, const Real& alpha) {
  if (l < 1) throw Error("watermelon: l must be positive");
  if (alpha <= 0) throw Error("alpha must be positive");
  Real h = alpha * l * l / 72;
  return delta_dressed(h, Real(1));
}

SleDuality sle_and_duality(const Real& n) {
  check_matter_range(n);
  if (n == 2) throw Unsupported("sle_and_duality: kappa degenerates at n = 2");
  LoopModelParams p = params_for(n, 1);
  SleDuality out;
  out.kappa = 4 * pi_val() / acos(-n / 2);
  out.g_tilde = 2 - p.g;
  out.g_prime = 1 / out.g_tilde;
  out.n_prime = -2 * cos(pi_val() * out.g_prime);
  out.alpha_ansatz = 1 / (1 - p.e0 * p.e0);
  Real s = out.kappa + 16 / out.kappa;
  out.gammaL_bicubic = (sqrt(3 * s + 22) - sqrt(3 * s - 26)) / sqrt(Real(12));
  return out;
}

BetaClosedForms beta_closed_forms(bool corrected) {
  if (!corrected)
    return {"(13+sqrt(13))/6", "(7+sqrt(13))/6", "1", "1+sqrt(6)/(sqrt(13)-1)",
            "1+2*sqrt(3)/(sqrt(13)-1)", "(sqrt(3)+sqrt(6)-1)/(sqrt(13)-1)"};
  return {"(13+sqrt(13))/6",
          "1+sqrt(22)/(2*(sqrt(13)-1))",
          "1+sqrt(6)/(6*(sqrt(13)-1))",
          "1+2*sqrt(15)/(3*(sqrt(13)-1))",
          "1+2*sqrt(33)/(3*(sqrt(13)-1))",
          "(2*sqrt(15)+sqrt(33)-3)/(3*(sqrt(13)-1))"};
}

}  // namespace hamarch
