#include <doctest.h>

#include <cmath>
#include <random>

#include "liewave/cauchy.hpp"
#include "liewave/error.hpp"
#include "liewave/fourier.hpp"
#include "liewave/spaces.hpp"

using namespace liewave;

namespace {

FourierCoefficients by_nu(const DiagonalSymbol& sym, const std::function<double(double)>& g) {
  FourierCoefficients f(sym.band);
  for (const auto& [rep, nu2] : sym.nu_squared) {
    CMatrix b(rep.dim(), rep.dim());
    for (int j = 0; j < rep.dim(); ++j)
      for (int k = 0; k < rep.dim(); ++k) b(j, k) = g(std::sqrt(nu2[static_cast<std::size_t>(j)]));
    f.set(rep, b);
  }
  return f;
}

}  // namespace

TEST_CASE("s = 0 Sobolev norm is the Plancherel norm") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(12));
  const FourierCoefficients f = random_coefficients(sym.band, 4, [](const RepIndex&) { return 1.0; });
  CHECK(sobolev_L_norm(f, 0.0, sym) == doctest::Approx(plancherel_norm(f)).epsilon(1e-14));
  CHECK(classical_sobolev_norm(f, 0.0) == doctest::Approx(plancherel_norm(f)).epsilon(1e-14));
}

TEST_CASE("single entry closed form") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(6));
  FourierCoefficients f(sym.band);
  CMatrix b = CMatrix::Zero(5, 5);
  b(2, 3) = 1.0;  // row m = 0 of spin 2: nu^2 = 6
  f.set(RepIndex::su2(4), b);
  for (double s : {0.0, 0.5, 1.0, 2.5})
    CHECK(sobolev_L_norm(f, s, sym) == doctest::Approx(std::sqrt(5.0) * std::pow(7.0, s / 2)).epsilon(1e-14));
}

TEST_CASE("Laplacian symbol gives the classical norm") {
  const Band band = Band::su2(10);
  const FourierCoefficients f = random_coefficients(band, 8, [](const RepIndex&) { return 1.0; });
  for (double s : {0.5, 1.0, 3.0})
    CHECK(sobolev_L_norm(f, s, laplacian_symbol(band)) == doctest::Approx(classical_sobolev_norm(f, s)).epsilon(1e-13));
}

TEST_CASE("norm axioms") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(8));
  const FourierCoefficients f = random_coefficients(sym.band, 1, [](const RepIndex&) { return 1.0; });
  const FourierCoefficients g = random_coefficients(sym.band, 2, [](const RepIndex&) { return 1.0; });
  const Complex c(-2.0, 1.5);
  CHECK(sobolev_L_norm(c * f, 1.5, sym) == doctest::Approx(std::abs(c) * sobolev_L_norm(f, 1.5, sym)));
  CHECK(sobolev_L_norm(f + g, 1.5, sym) <= sobolev_L_norm(f, 1.5, sym) + sobolev_L_norm(g, 1.5, sym));
  CHECK(sobolev_L_norm(FourierCoefficients(sym.band), 1.5, sym) == 0.0);
}

TEST_CASE("Gevrey norms") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(8));
  const FourierCoefficients f = random_coefficients(sym.band, 3, [](const RepIndex&) { return 1.0; });
  CHECK(gevrey_L_norm(f, {2.0, 0.0}, sym) == doctest::Approx(plancherel_norm(f)).epsilon(1e-13));
  CHECK(gevrey_L_norm(f, {2.0, 1.0}, sym) > gevrey_L_norm(f, {2.0, 0.5}, sym));
  CHECK(log_gevrey_L_norm(f, {1.0, 2000.0}, sym) > 700.0);
  CHECK(std::isinf(gevrey_L_norm(f, {1.0, 2000.0}, sym)));
  CHECK_THROWS_AS(gevrey_L_norm(f, {0.5, 1.0}, sym), Error);
}

TEST_CASE("Gevrey fit recovers order and rate") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(64));
  const GevreyFit g = fit_gevrey_decay(by_nu(sym, [](double nu) { return std::exp(-3.0 * std::sqrt(nu)); }), sym);
  CHECK(g.gevrey);
  CHECK(g.s_hat == doctest::Approx(2.0).epsilon(0.025));
  CHECK(g.A_hat == doctest::Approx(3.0).epsilon(0.034));
  CHECK(g.residual < 1e-6);
  CHECK(g.drift < 1e-6);
}

TEST_CASE("polynomial decay is not reported as Gevrey") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(64));
  const GevreyFit g = fit_gevrey_decay(by_nu(sym, [](double nu) { return std::pow(1.0 + nu, -4.0); }), sym);
  CHECK_FALSE(g.gevrey);
  CHECK_FALSE(g.diagnostic.empty());
  CHECK(g.s_hat > g.s_hat_half);
  // A rough prefactor on Gevrey decay keeps the order.
  const GevreyFit r = fit_gevrey_decay(
      by_nu(sym, [](double nu) { return std::exp(-3.0 * std::pow(nu, 1 / 1.5)) * (0.1 + 2.6 * std::abs(std::cos(nu))); }),
      sym);
  CHECK(r.gevrey);
  CHECK(r.s_hat == doctest::Approx(1.5).epsilon(0.05));
}

TEST_CASE("Gevrey fit needs enough shells") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(4));
  FourierCoefficients f(sym.band);
  f.at(RepIndex::su2(2))(0, 0) = 1.0;
  CHECK_THROWS_AS(fit_gevrey_decay(f, sym), Error);
}

TEST_CASE("Laplacian embedding ratios are one") {
  const DiagonalSymbol sym = laplacian_symbol(Band::su2(16));
  std::vector<FourierCoefficients> batch;
  for (std::uint64_t k = 0; k < 10; ++k)
    batch.push_back(random_coefficients(sym.band, k, [](const RepIndex& r) { return std::pow(r.jap(), -3.0); }));
  const EmbeddingReport e = embedding_verify(batch, sym, 2.0, 1);
  CHECK(e.pass);
  CHECK(e.C1_emp == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(e.C2_emp == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(embedding_verify(batch, sym, 2.0, 2), Error);
}

TEST_CASE("extreme rows match the closed form") {
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(20));
  const double s = 2.0;
  for (const auto& [two, ratio] : extreme_row_ratios(sym, s, 2)) {
    const double l = 0.5 * two;
    CHECK(ratio == doctest::Approx(std::pow(1.0 + l, s / 2) / std::pow(1.0 + l * (l + 1), s / 4)).epsilon(1e-13));
  }
}

TEST_CASE("truncation keeps the lower band") {
  const Band band = Band::su2(8);
  const FourierCoefficients f = random_coefficients(band, 5, [](const RepIndex&) { return 1.0; });
  const FourierCoefficients t = truncate(f, Band::su2(3));
  CHECK(t.blocks().size() == 4);
  CHECK(max_abs_difference(t, truncate(t, Band::su2(3))) == 0.0);
}
