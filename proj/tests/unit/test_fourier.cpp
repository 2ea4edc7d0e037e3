#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "liewave/error.hpp"
#include "liewave/fourier.hpp"

using namespace liewave;

namespace {

FourierCoefficients random_band(const Band& band, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  FourierCoefficients f(band);
  for (const auto& rep : band.reps()) {
    CMatrix m(rep.dim(), rep.dim());
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j) m(i, j) = Complex(nd(rng), nd(rng));
    f.set(rep, m);
  }
  return f;
}

std::shared_ptr<const QuadratureGrid> grid_for(const Band& b) {
  return std::make_shared<const QuadratureGrid>(haar_quadrature(b));
}

}  // namespace

TEST_CASE("transform of the constant function") {
  const Band band = Band::su2(6);
  auto g = grid_for(band);
  FunctionSamples one{g, std::vector<Complex>(g->size(), 1.0)};
  const FourierCoefficients c = forward_transform(one, band);
  for (const auto& [rep, block] : c.blocks()) {
    if (rep.two_ell == 0)
      CHECK(std::abs(block(0, 0) - 1.0) < 1e-13);
    else
      CHECK(block.cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("single mode d Tr(xi A) recovers A") {
  const Band band = Band::su2(4);
  auto g = grid_for(band);
  const RepIndex rep = RepIndex::su2(2);
  CMatrix A(3, 3);
  A << 1.0, Complex(0, 2), 0.5, -1.0, 0.25, Complex(3, -1), 0.0, 2.0, Complex(-1, 1);
  FunctionSamples f{g, {}};
  for (const auto& x : g->nodes) f.values.push_back(3.0 * (su2::wigner_matrix(rep, x) * A).trace());
  const FourierCoefficients c = forward_transform(f, band);
  for (const auto& [r, block] : c.blocks()) {
    if (r == rep)
      CHECK((block - A).norm() < 1e-12);
    else
      CHECK(block.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("inverse transform evaluates Wigner entries and constants") {
  const EulerAngles x = canonical_euler(0.3, 1.2, 2.5);
  FourierCoefficients c(Band::su2(1));
  c.at(RepIndex::su2(1))(0, 0) = 0.5;  // 2 Tr(xi F) = xi_00 for F = E_00 / 2
  CHECK(std::abs(inverse_transform(c, std::vector<EulerAngles>{x})[0] -
                 su2::wigner_matrix(RepIndex::su2(1), x)(0, 0)) < 1e-12);
  FourierCoefficients k(Band::su2(1));
  k.at(RepIndex::su2(0))(0, 0) = Complex(2.0, -1.0);
  CHECK(std::abs(inverse_transform(k, std::vector<EulerAngles>{x})[0] - Complex(2.0, -1.0)) < 1e-14);
  const FourierCoefficients zero(Band::su2(1));
  CHECK(std::abs(inverse_transform(zero, std::vector<EulerAngles>{x})[0]) == 0.0);
}

TEST_CASE("round trip and Plancherel on random band-limited functions") {
  const Band band = Band::su2(16);
  auto g = grid_for(band);
  for (int t = 0; t < 50; ++t) {
    const FourierCoefficients f = random_band(band, static_cast<std::uint64_t>(t));
    const FunctionSamples x = synthesize(f, g);
    CHECK(max_abs_difference(f, forward_transform(x, band)) <= 1e-10);
    const double pn = plancherel_norm(f);
    CHECK(std::abs(quadrature_l2_norm(x) - pn) <= 1e-8 * pn);
  }
}

TEST_CASE("synthesis matches pointwise inverse transform") {
  const Band band = Band::su2(5);
  auto g = grid_for(band);
  const FourierCoefficients f = random_band(band, 99);
  const FunctionSamples x = synthesize(f, g);
  const auto direct = inverse_transform(f, g->nodes);
  double worst = 0.0;
  for (std::size_t n = 0; n < direct.size(); ++n) worst = std::max(worst, std::abs(direct[n] - x.values[n]));
  CHECK(worst < 1e-11);
}

TEST_CASE("Plancherel norm examples") {
  FourierCoefficients one(Band::su2(2));
  one.at(RepIndex::su2(0))(0, 0) = 1.0;
  CHECK(plancherel_norm(one) == doctest::Approx(1.0).epsilon(1e-15));
  FourierCoefficients id(Band::su2(2));
  id.set(RepIndex::su2(2), CMatrix::Identity(3, 3));
  CHECK(plancherel_norm(id) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("transforms are linear") {
  const Band band = Band::su2(6);
  auto g = grid_for(band);
  const FourierCoefficients a = random_band(band, 1), b = random_band(band, 2);
  const Complex c(0.7, -1.3);
  const FunctionSamples xa = synthesize(a, g), xb = synthesize(b, g);
  const FunctionSamples xs = synthesize(a + c * b, g);
  double worst = 0.0;
  for (std::size_t n = 0; n < xs.values.size(); ++n)
    worst = std::max(worst, std::abs(xs.values[n] - xa.values[n] - c * xb.values[n]));
  CHECK(worst < 1e-11);
  FunctionSamples sum{g, {}};
  for (std::size_t n = 0; n < xa.values.size(); ++n) sum.values.push_back(xa.values[n] + c * xb.values[n]);
  CHECK(max_abs_difference(forward_transform(sum, band), forward_transform(xa, band) + c * forward_transform(xb, band)) <
        1e-11);
}

TEST_CASE("parallel forward transform is bit-identical to the serial one") {
  const Band band = Band::su2(10);
  auto g = grid_for(band);
  const FunctionSamples x = synthesize(random_band(band, 5), g);
  CHECK(max_abs_difference(forward_transform(x, band, 1), forward_transform(x, band, 3)) == 0.0);
}

TEST_CASE("torus round trip and character evaluation") {
  const Band band = Band::torus(4, 2);
  auto g = grid_for(band);
  const FourierCoefficients f = random_band(band, 3);
  const FunctionSamples x = synthesize(f, g);
  CHECK(max_abs_difference(f, forward_transform(x, band)) < 1e-12);
  FourierCoefficients e(band);
  e.at(RepIndex::torus({2, -1}))(0, 0) = 1.0;
  const std::vector<double> p{0.4, 1.9};
  CHECK(std::abs(inverse_transform(e, std::vector<std::vector<double>>{p})[0] -
                 std::polar(1.0, 2 * 0.4 - 1.9)) < 1e-14);
}

TEST_CASE("grid that is too coarse is rejected") {
  auto g = grid_for(Band::su2(4));
  FunctionSamples x{g, std::vector<Complex>(g->size(), 1.0)};
  CHECK_THROWS_AS(forward_transform(x, Band::su2(8)), Error);
  CHECK_THROWS_AS(forward_transform(x, Band::torus(2)), Error);
}
