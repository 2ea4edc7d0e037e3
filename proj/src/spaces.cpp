#include "liewave/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "liewave/error.hpp"
#include "liewave/numeric.hpp"

namespace liewave {

namespace {

// sum_m |f_jm|^2 for every row j.
Eigen::VectorXd row_mass(const CMatrix& block) { return block.cwiseAbs2().rowwise().sum(); }

double weighted_norm(const FourierCoefficients& f, const std::function<double(const RepIndex&, int)>& weight) {
  CompensatedSum acc;
  for (const auto& [rep, block] : f.blocks()) {
    const Eigen::VectorXd mass = row_mass(block);
    for (int j = 0; j < rep.dim(); ++j) acc.add(rep.dim() * weight(rep, j) * mass(j));
  }
  return std::sqrt(acc.value());
}

struct LineFit {
  double c = 0, A = 0, rms = INFINITY;
};

// log y = c - A x with x = nu^p.
LineFit fit_for_power(const std::vector<double>& nu, const std::vector<double>& logy, double p) {
  std::vector<double> x(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) x[i] = std::pow(nu[i], p);
  const LinearFit lf = fit_line(x, logy);
  return {lf.intercept, -lf.slope, lf.rms_residual};
}


struct PowerFit {
  double p = 0;
  LineFit line;
};

// Coarse scan of p = 1/s over [1/s_max, 2], then golden-section refinement
// around the best bracket.
PowerFit best_power(const std::vector<double>& nu, const std::vector<double>& logy, double s_max) {
  const double p_lo = 1.0 / s_max, p_hi = 2.0;
  const int n = 200;
  PowerFit best{p_lo, fit_for_power(nu, logy, p_lo)};
  for (int i = 1; i <= n; ++i) {
    const double p = p_lo + (p_hi - p_lo) * i / n;
    const LineFit lf = fit_for_power(nu, logy, p);
    if (lf.rms < best.line.rms) best = {p, lf};
  }
  const double step = (p_hi - p_lo) / n;
  double a = std::max(p_lo, best.p - step), b = std::min(p_hi, best.p + step);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = fit_for_power(nu, logy, x1).rms, f2 = fit_for_power(nu, logy, x2).rms;
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = fit_for_power(nu, logy, x1).rms;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = fit_for_power(nu, logy, x2).rms;
    }
  }
  const double p_ref = 0.5 * (a + b);
  const LineFit ref = fit_for_power(nu, logy, p_ref);
  if (ref.rms < best.line.rms) best = {p_ref, ref};
  return best;
}

}  // namespace

double sobolev_L_norm(const FourierCoefficients& f, double s, const DiagonalSymbol& sym) {
  return weighted_norm(f, [&](const RepIndex& rep, int j) {
    return std::pow(1.0 + sym.nu2(rep)[static_cast<std::size_t>(j)], s);
  });
}

double classical_sobolev_norm(const FourierCoefficients& f, double s) {
  return weighted_norm(f, [&](const RepIndex& rep, int) { return std::pow(rep.jap(), 2.0 * s); });
}

double log_gevrey_L_norm(const FourierCoefficients& f, const GevreyParams& g, const DiagonalSymbol& sym) {
  if (!(g.s >= 1.0) || !(g.A >= 0.0)) fail(ErrorCode::invalid_argument, "Gevrey norm needs s >= 1 and A >= 0");
  std::vector<double> logs;
  for (const auto& [rep, block] : f.blocks()) {
    const Eigen::VectorXd mass = row_mass(block);
    for (int j = 0; j < rep.dim(); ++j) {
      if (mass(j) == 0.0) continue;
      logs.push_back(std::log(static_cast<double>(rep.dim())) + g.A * std::pow(sym.nu(rep, j), 1.0 / g.s) +
                     std::log(mass(j)));
    }
  }
  if (logs.empty()) return -INFINITY;
  const double top = *std::max_element(logs.begin(), logs.end());
  CompensatedSum acc;
  for (double l : logs) acc.add(std::exp(l - top));
  return 0.5 * (top + std::log(acc.value()));
}

double gevrey_L_norm(const FourierCoefficients& f, const GevreyParams& g, const DiagonalSymbol& sym) {
  return std::exp(log_gevrey_L_norm(f, g, sym));
}

GevreyFit fit_gevrey_decay(const FourierCoefficients& f, const DiagonalSymbol& sym, const GevreyFitOptions& opt) {
  std::map<long long, std::pair<double, double>> shells;  // bucket -> (nu, max |f_jm|)
  for (const auto& [rep, block] : f.blocks()) {
    const Eigen::MatrixXd mag = block.cwiseAbs();
    for (int j = 0; j < rep.dim(); ++j) {
      const double nu = sym.nu(rep, j);
      const double m = mag.row(j).maxCoeff();
      const long long key = std::llround(nu / opt.bucket);
      auto& slot = shells[key];
      slot.first = nu;
      slot.second = std::max(slot.second, m);
    }
  }
  std::vector<double> nu, logy;
  for (const auto& [key, shell] : shells) {
    if (shell.second > 0.0 && std::isfinite(shell.second)) {
      nu.push_back(shell.first);
      logy.push_back(std::log(shell.second));
    }
  }
  GevreyFit out;
  out.shells_used = static_cast<int>(nu.size());
  if (out.shells_used < opt.min_shells)
    fail(ErrorCode::verification, "Gevrey fit needs at least " + std::to_string(opt.min_shells) +
                                      " nonzero shells, found " + std::to_string(out.shells_used));
  const PowerFit full = best_power(nu, logy, opt.s_max);
  out.s_hat = 1.0 / full.p;
  out.A_hat = full.line.A;
  out.log_C = full.line.c;
  out.residual = full.line.rms;
  // Refit on the shells with nu <= nu_max / 2: a Gevrey order is a property of
  // the tail, so it must not move with the bandwidth.
  std::vector<double> nu_half, logy_half;
  const double cut = 0.5 * *std::max_element(nu.begin(), nu.end());
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] <= cut) {
      nu_half.push_back(nu[i]);
      logy_half.push_back(logy[i]);
    }
  if (static_cast<int>(nu_half.size()) >= opt.min_shells) {
    out.s_hat_half = 1.0 / best_power(nu_half, logy_half, opt.s_max).p;
    out.drift = std::abs(out.s_hat / out.s_hat_half - 1.0);
  }
  if (full.line.A <= 0.0)
    out.diagnostic = "coefficients do not decay";
  else if (full.p <= (1.0 / opt.s_max) * (1.0 + 1e-3))
    out.diagnostic = "decay slower than any Gevrey order up to s_max";
  else if (out.drift > opt.drift_threshold) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "fitted order drifts with the bandwidth (%.3g on the lower half, %.3g in full)",
                  out.s_hat_half, out.s_hat);
    out.diagnostic = msg;
  }
  out.gevrey = out.diagnostic.empty();
  return out;
}

FourierCoefficients truncate(const FourierCoefficients& f, const Band& band) {
  FourierCoefficients out(band);
  for (const auto& [rep, block] : f.blocks())
    if (band.contains(rep)) out.set(rep, block);
  return out;
}

EmbeddingReport embedding_verify(const std::vector<FourierCoefficients>& batch, const DiagonalSymbol& sym, double s,
                                 int r) {
  if (r != sym.hormander_order)
    fail(ErrorCode::invalid_argument, "r must match the Hormander order stored with the symbol");
  EmbeddingReport rep;
  rep.s = s;
  rep.r = r;
  Band half = sym.band;
  half.limit = sym.band.limit / 2;
  auto ratios = [&](const FourierCoefficients& f, double& c1, double& c2) {
    const double l = sobolev_L_norm(f, s, sym);
    const double lo = classical_sobolev_norm(f, s / r);
    const double hi = classical_sobolev_norm(f, s);
    if (lo > 0.0) c1 = std::min(c1, l / lo);
    if (hi > 0.0) c2 = std::max(c2, l / hi);
  };
  rep.C1_emp = rep.C1_half = INFINITY;
  for (const auto& f : batch) {
    ratios(f, rep.C1_emp, rep.C2_emp);
    ratios(truncate(f, half), rep.C1_half, rep.C2_half);
  }
  auto stable = [](double full, double h) {
    return std::isfinite(full) && std::isfinite(h) && full > 0.0 && h > 0.0 && std::abs(full / h - 1.0) <= 0.05;
  };
  rep.pass = !batch.empty() && stable(rep.C1_emp, rep.C1_half) && stable(rep.C2_emp, rep.C2_half);
  return rep;
}

std::vector<std::pair<int, double>> extreme_row_ratios(const DiagonalSymbol& sym, double s, int r) {
  if (sym.band.group != GroupKind::su2) fail(ErrorCode::invalid_argument, "extreme rows are defined on SU(2)");
  std::vector<std::pair<int, double>> out;
  for (const auto& [rep, nu2] : sym.nu_squared) {
    if (rep.two_ell == 0) continue;
    FourierCoefficients f(sym.band);
    CMatrix block = CMatrix::Zero(rep.dim(), rep.dim());
    block(0, 0) = 1.0;
    f.set(rep, block);
    out.emplace_back(rep.two_ell, sobolev_L_norm(f, s, sym) / classical_sobolev_norm(f, s / r));
  }
  return out;
}

}  // namespace liewave
