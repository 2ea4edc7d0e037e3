#pragma once

#include <string>
#include <vector>

#include "liewave/coefficients.hpp"
#include "liewave/symbols.hpp"

namespace liewave {

/// (sum d_xi sum_j (1 + nu_j^2)^s sum_m |f_jm|^2)^{1/2}
double sobolev_L_norm(const FourierCoefficients& f, double s, const DiagonalSymbol& sym);

/// Same with the Laplacian weight <xi>^{2s}.
double classical_sobolev_norm(const FourierCoefficients& f, double s);

struct GevreyParams {
  double s = 1.0;
  double A = 1.0;
};

/// log of (sum d_xi sum_j e^{A nu_j^{1/s}} sum_m |f_jm|^2)^{1/2}, by log-sum-exp.
double log_gevrey_L_norm(const FourierCoefficients& f, const GevreyParams& g, const DiagonalSymbol& sym);
/// exp of the above; +inf when it overflows a double.
double gevrey_L_norm(const FourierCoefficients& f, const GevreyParams& g, const DiagonalSymbol& sym);

struct GevreyFitOptions {
  double s_max = 20.0;               // fit searches p = 1/s in [1/s_max, 2]
  double drift_threshold = 0.15;     // max |s_hat / s_hat_half - 1| for a Gevrey verdict
  double bucket = 1e-6;
  int min_shells = 8;
};

struct GevreyFit {
  double s_hat = 0.0;
  double A_hat = 0.0;
  double log_C = 0.0;
  double residual = 0.0;      // rms log-residual
  double s_hat_half = 0.0;    // order fitted on shells with nu <= nu_max / 2
  double drift = 0.0;         // |s_hat / s_hat_half - 1|, 0 when the half band is too small
  int shells_used = 0;
  bool gevrey = false;
  std::string diagnostic;
};

/// Least-squares fit of log max|f| per nu-shell against log C - A nu^{1/s}.
/// Flagged non-Gevrey when A_hat <= 0, when s_hat sits at s_max, or when the
/// order refitted on the lower half of the shells differs by more than
/// drift_threshold (polynomial decay fits a larger s on a wider band).
/// Throws ErrorCode::verification when fewer than min_shells nonzero shells exist.
GevreyFit fit_gevrey_decay(const FourierCoefficients& f, const DiagonalSymbol& sym, const GevreyFitOptions& opt = {});

struct EmbeddingReport {
  double s = 0.0;
  int r = 1;
  double C1_emp = 0.0;       // min ||f||_{H^s_L} / ||f||_{H^{s/r}} over the batch
  double C2_emp = 0.0;       // max ||f||_{H^s_L} / ||f||_{H^s}
  double C1_half = 0.0;      // same over the batch truncated to the lower half band
  double C2_half = 0.0;
  bool pass = false;
};

/// Ratios on the full batch and on its half-band truncation; pass when all
/// are finite and positive and the full-band values move by at most 5%.
EmbeddingReport embedding_verify(const std::vector<FourierCoefficients>& batch, const DiagonalSymbol& sym, double s,
                                 int r);

/// Lower embedding ratio for data concentrated on the rows of smallest nu in
/// each SU(2) shell (mu = +-ell, nu^2 = ell), indexed by 2*ell.
std::vector<std::pair<int, double>> extreme_row_ratios(const DiagonalSymbol& sym, double s, int r);

/// Keeps the blocks of `f` inside `band`.
FourierCoefficients truncate(const FourierCoefficients& f, const Band& band);

}  // namespace liewave
