#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liewave/coefficients.hpp"
#include "liewave/mode_solver.hpp"
#include "liewave/spaces.hpp"
#include "liewave/speeds.hpp"
#include "liewave/symbols.hpp"

namespace liewave {

/// d_t^2 u - a(t) L u = 0 with u(0) = u0, d_t u(0) = u1, on the band of `op`.
struct CauchyProblem {
  DiagonalSymbol op;
  SpeedProfile speed;
  FourierCoefficients u0, u1;
  double T = 1.0;
};

struct SolutionField {
  std::vector<double> times;
  std::vector<FourierCoefficients> u, ut;
  /// Per distinct nu^2 > 0: Phi(t_k) acting on V = (i nu u, d_t u).
  std::map<double, std::vector<Mat2c>> propagators;
};

struct SolveOptions {
  double dt = 1e-3;
  int snapshots = 16;  // uniform times from 0 to T inclusive
  int workers = 1;
};

/// Every entry (j, k) evolves as a scalar mode with nu = nu_j(xi).
SolutionField solve(const CauchyProblem& problem, const SolveOptions& opt);

/// Largest nu over the rows of a symbol.
double max_nu(const DiagonalSymbol& sym);

struct RegularityReport {
  double s = 0.0;
  int r = 1;
  std::vector<double> times;
  std::vector<double> lhs_theorem, lhs_energy, lhs_sob;
  double rhs_theorem = 0.0, rhs_energy = 0.0, rhs_sob = 0.0;
  // max over snapshots of lhs / rhs for the given data
  double C_theorem = 0.0, C_energy = 0.0, C_sob = 0.0;
  // worst case over all data in the band (per-mode weighted propagator norms)
  double C_sup_theorem = 0.0, C_sup_energy = 0.0, C_sup_sob = 0.0;
};

/// Theorem form: ||u||^2_{H^{1+s}_L} + ||u_t||^2_{H^s_L} against the same norms
/// of the data. Energy form: sum d (1+nu^2)^s (nu^2 |u|^2 + |u_t|^2). Sobolev
/// form: ||u||^2_{H^{(1+s)/r}} + ||u_t||^2_{H^{s/r}} against ||u0||^2_{H^{1+s}} +
/// ||u1||^2_{H^s}. Rows with nu = 0 (constants) are left out.
RegularityReport regularity_report(const SolutionField& sol, const CauchyProblem& problem, double s, int r = 0);

/// Admissible Gevrey interval [1, hi) for a case; hi = inf for Case 1.
std::pair<double, double> gevrey_interval(const SpeedProfile& p);

struct GevreyExperimentOptions {
  double s = 1.5;
  double data_A = 3.0;
  int two_lmax = 64;
  std::string op = "sublaplacian";
  std::uint64_t seed = 0;
  double dt = 0.0;  // 0 picks 0.02 / (nu_max sqrt(sup a))
  int workers = 1;
};

struct GevreyExperimentReport {
  int case_tag = 0;
  double s = 0.0;
  double interval_hi = 0.0;
  GevreyFit fit_data;
  GevreyFit fit_final;
  bool pass = false;
};

/// Data u0_jk = e^{-A nu_j^{1/s}} e^{i theta}, u1_jk = (1 + nu_j) e^{-A nu_j^{1/s}} e^{i theta'}
/// with random phases; solves to T and fits u(T). Pass when s_hat <= 1.1 s
/// and A_hat > 0. Throws ErrorCode::domain for s outside the case interval.
GevreyExperimentReport gevrey_experiment(const SpeedProfile& p, const GevreyExperimentOptions& opt);

/// Deterministic random coefficients: Gaussian entries times `decay(rep)`.
FourierCoefficients random_coefficients(const Band& band, std::uint64_t seed,
                                        const std::function<double(const RepIndex&)>& decay);

}  // namespace liewave
