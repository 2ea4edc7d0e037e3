#include "liewave/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "liewave/error.hpp"

namespace liewave {

const std::vector<double>& DiagonalSymbol::nu2(const RepIndex& rep) const {
  auto it = nu_squared.find(rep);
  if (it == nu_squared.end())
    fail(ErrorCode::invalid_argument, "symbol '" + name + "' has no entry for " + rep.label());
  return it->second;
}

double DiagonalSymbol::nu(const RepIndex& rep, int j) const {
  return std::sqrt(std::max(0.0, nu2(rep)[static_cast<std::size_t>(j)]));
}

DiagonalSymbol laplacian_symbol(const Band& band) {
  DiagonalSymbol s{band, "laplacian", 1, {}};
  for (const auto& rep : band.reps())
    s.nu_squared[rep] = std::vector<double>(static_cast<std::size_t>(rep.dim()), rep.laplacian_eigenvalue());
  return s;
}

DiagonalSymbol sublaplacian_symbol(const Band& band, bool verify) {
  if (band.group != GroupKind::su2)
    fail(ErrorCode::invalid_argument, "the sub-Laplacian symbol is tabulated for SU(2) only");
  if (verify) {
    const OracleCheck check = verify_sublaplacian_symbol(band, 1);
    if (check.max_deviation > 1e-6 || check.max_off_diagonal > 1e-6)
      fail(ErrorCode::verification, "sub-Laplacian oracle disagrees with the table: deviation " +
                                        std::to_string(check.max_deviation) + ", off-diagonal " +
                                        std::to_string(check.max_off_diagonal));
  }
  DiagonalSymbol s{band, "sublaplacian", 2, {}};
  for (const auto& rep : band.reps()) {
    std::vector<double> v(static_cast<std::size_t>(rep.dim()));
    const double ll = rep.ell() * (rep.ell() + 1.0);
    for (int j = 0; j < rep.dim(); ++j) v[static_cast<std::size_t>(j)] = ll - rep.m(j) * rep.m(j);
    s.nu_squared[rep] = std::move(v);
  }
  return s;
}

CMatrix extract_symbol(const EulerOperatorField& op, const RepIndex& rep, const EulerAngles& g) {
  const su2::WignerJet jet = su2::wigner_jet(rep, g);
  return jet.value.adjoint() * op(g).apply(jet);
}

OracleCheck verify_sublaplacian_symbol(const Band& band, int points_per_rep, std::uint64_t seed) {
  if (band.group != GroupKind::su2) fail(ErrorCode::invalid_argument, "oracle check needs an SU(2) band");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> theta(0.2, std::numbers::pi - 0.2);
  std::uniform_real_distribution<double> psi(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  OracleCheck out;
  for (const auto& rep : band.reps()) {
    const double ll = rep.ell() * (rep.ell() + 1.0);
    CMatrix first;
    for (int p = 0; p < std::max(1, points_per_rep); ++p) {
      const EulerAngles g{phi(rng), theta(rng), psi(rng)};
      const CMatrix sigma = extract_symbol(sublaplacian_euler, rep, g);
      for (int i = 0; i < rep.dim(); ++i)
        for (int j = 0; j < rep.dim(); ++j) {
          if (i == j)
            out.max_deviation = std::max(out.max_deviation, std::abs(sigma(i, i) + (ll - rep.m(i) * rep.m(i))));
          else
            out.max_off_diagonal = std::max(out.max_off_diagonal, std::abs(sigma(i, j)));
        }
      if (p == 0)
        first = sigma;
      else
        out.max_variation = std::max(out.max_variation, (sigma - first).cwiseAbs().maxCoeff());
    }
    ++out.reps_checked;
  }
  out.pass = out.max_deviation <= 1e-8 && out.max_off_diagonal <= 1e-8 && out.max_variation <= 1e-8;
  return out;
}

HormanderReport check_hormander_bounds(const DiagonalSymbol& sym, int r) {
  HormanderReport rep;
  rep.r = r > 0 ? r : sym.hormander_order;
  if (rep.r < 1) fail(ErrorCode::invalid_argument, "Hormander order must be a positive integer");
  const int half = sym.band.limit / 2;
  double lower = INFINITY, lower_half = INFINITY, upper = 0.0;
  for (const auto& [xi, nu2] : sym.nu_squared) {
    const double jap = sym.jap(xi);
    const bool in_half = xi.group == GroupKind::su2
                             ? xi.two_ell <= half
                             : std::all_of(xi.k.begin(), xi.k.end(), [&](int k) { return std::abs(k) <= half; });
    for (double v : nu2) {
      const double n1 = std::sqrt(std::max(0.0, v)) + 1.0;
      const double lo = n1 / std::pow(jap, 1.0 / rep.r);
      lower = std::min(lower, lo);
      if (in_half) lower_half = std::min(lower_half, lo);
      upper = std::max(upper, n1 / jap);
    }
  }
  rep.c_lower = lower;
  rep.c_upper = upper;
  rep.c_lower_half_band = lower_half;
  const bool trend_ok = sym.band.limit < 4 || lower >= 0.95 * lower_half;
  rep.pass = lower > 0.0 && upper <= std::numbers::sqrt2 + 1e-12 && trend_ok;
  return rep;
}

}  // namespace liewave
