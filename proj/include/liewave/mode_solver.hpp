#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "liewave/coefficients.hpp"
#include "liewave/speeds.hpp"

namespace liewave {

using Vec2c = Eigen::Vector2cd;
using Mat2c = Eigen::Matrix2cd;

/// One scalar mode v'' + a(t) nu^2 v = 0 in first-order form V = (i nu v, v'),
/// dV/dt = i nu A(t) V with A = [[0, 1], [a, 0]].
struct ModeTrajectory {
  double nu = 0.0;
  std::vector<double> times;
  std::vector<Vec2c> V;
  std::vector<Complex> v;  // the scalar solution itself

  /// |V(T)| / |V(0)|, 1 for zero data.
  double amplification() const;
};

/// Largest admissible step for the explicit guard dt nu sqrt(sup a) <= 0.5.
double max_stable_dt(const SpeedProfile& p, double nu);

/// Fourth-order Runge-Kutta with a fixed step; the step is shrunk so that it
/// divides T. `store_every` thins the stored samples (the last is always kept).
ModeTrajectory integrate_mode(const SpeedProfile& p, double nu, Complex v0, Complex v1, double T, double dt,
                              int store_every = 1);

/// Fundamental matrix Phi(t) with V(t) = Phi(t) V(0), sampled at `times`
/// (ascending, starting at or after 0). Steps of at most dt between samples.
std::vector<Mat2c> mode_propagators(const SpeedProfile& p, double nu, const std::vector<double>& times, double dt);

/// sup over [0, T] of the operator norm of Phi, from steps of size <= dt.
double sup_propagator_norm(const SpeedProfile& p, double nu, double T, double dt);

Eigen::Matrix2d symmetriser(double a);
Eigen::Matrix2d system_matrix(double a);

struct SymmetriserEnergyReport {
  std::vector<double> energy;   // E(t) = (S V, V)
  double c0 = 0.0, c1 = 0.0;    // sandwich constants 2 min(a0,1), 2 max(a1,1)
  bool sandwich_holds = true;
  double c_prime = 0.0;         // sup|a'| / min(a0, 1)
  double max_log_derivative = 0.0;
  bool log_derivative_ok = true;
  double max_growth = 1.0;      // max_t E(t) / E(0)
  double gronwall_bound = 1.0;  // exp(c' T)
  double max_relative_drift = 0.0;  // max_t |E(t) - E(0)| / E(0)
};

SymmetriserEnergyReport symmetriser_energy(const ModeTrajectory& traj, const SpeedProfile& p);

/// max over trajectories and samples of |V(t)| / |V(0)|.
double case1_constant(const std::vector<ModeTrajectory>& trajectories);

/// Upper bound exp(c' T / 2) (c1 / c0)^{1/2} from the symmetriser chain.
double case1_constant_bound(const SpeedProfile& p);

struct QuasiEnergyReport {
  double epsilon = 0.0;
  double C2 = 0.0;
  bool sandwich_holds = true;
  std::vector<double> energy;      // E_eps(t)
  double log_growth = 0.0;         // log max_t E_eps(t)/E_eps(0)
  double exponent = 0.0;           // eps^{-2/ell} + eps nu
  double fitted_c = 0.0;           // log_growth / exponent
  double sigma = 0.0;              // 1 + ell/2
};

/// Q_eps = diag(2a + 2 eps^2, 2); C2 = 2 max(sup a + 1, 1) + 1.
double quasi_symmetriser_constant(const SpeedProfile& p);
/// eps with eps^{-2/ell} = eps nu, i.e. eps = nu^{-ell/(ell+2)}.
double case3_epsilon(const SpeedProfile& p, double nu);
QuasiEnergyReport quasi_energy_bound(const SpeedProfile& p, double nu, double epsilon, const ModeTrajectory& traj);

/// eps(nu) for the transformed evolution: 1/nu (Case 2) or nu^{-1/(1+alpha)} (Case 4).
double transformed_epsilon(const SpeedProfile& p, double nu);

struct TransformedReport {
  double nu = 0.0, s = 1.0, kappa = 0.0, epsilon = 0.0;
  std::vector<double> times;
  std::vector<Vec2c> W;
  std::vector<double> dnorm;  // 2 Re(dW/dt, W) at each sample
  double b1 = 0.0;            // sup |(det H)'/det H|
  double b2 = 0.0;            // sup ||H^{-1} H'||
  double b3 = 0.0;            // sup ||H^{-1} A H - (H^{-1} A H)^*||
  double min_det = 0.0;
  bool monotone = true;       // 2 Re(dW/dt, W) <= 0 at every sample
  double max_dnorm_ratio = 0.0;  // max 2 Re(dW, W) / |W|^2
  // W is renormalised every step; log_scale[i] = log |W(t_i)|.
  std::vector<double> log_scale;
  double max_log_v_ratio = 0.0;       // log max_t |V(t)| / |V(0)|
  double max_log_damped_ratio = 0.0;  // log max_t e^{-kappa t nu^{1/s}} |V(t)| / |V(0)|
};

/// Evolves W with V = e^{kappa t nu^{1/s}} (det H)^{-1} H W, rho(0) = 0:
/// W' = (-kappa nu^{1/s} + (det H)'/det H) W - H^{-1} H' W + i nu H^{-1} A H W.
TransformedReport transformed_evolution(const SpeedProfile& p, const MollifiedRoots& roots, double nu, double s,
                                        double kappa, const Vec2c& V0, double dt, int store_every = 1);

struct BoundConstants {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double rate = 0.0;  // common nu-exponent of all three terms
};

/// Fits c_i = sup b_i / eps^{e_i} over reports. Exponents: Case 2 (alpha-1,
/// alpha-1, alpha); Case 4 (-1, -1, alpha) with alpha the internal exponent.
BoundConstants fit_bound_constants(const SpeedProfile& p, const std::vector<TransformedReport>& reports);

/// nu0 = max(1, ((2c1 + 2c2 + c3) / (2 kappa))^{1/(1/s - rate)}); infinite
/// when 1/s <= rate.
double monotonicity_threshold(const BoundConstants& c, double s, double kappa);

/// CSV: t, Re V1, Im V1, Re V2, Im V2, E with E the symmetriser energy.
void write_trajectory_csv(std::ostream& out, const ModeTrajectory& traj, const SpeedProfile& p);

}  // namespace liewave
