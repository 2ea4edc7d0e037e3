#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "liewave/error.hpp"
#include "liewave/fourier.hpp"
#include "liewave/group_harmonics.hpp"

using namespace liewave;

namespace {

constexpr double kPi = std::numbers::pi;

// Angular momentum matrices in the basis m = -ell, ..., ell, built from the
// ladder operators J+|m> = sqrt(j(j+1) - m(m+1)) |m+1>.
void spin_matrices(int two_ell, CMatrix& jy, CMatrix& jz) {
  const int d = two_ell + 1;
  const double j = 0.5 * two_ell;
  CMatrix jp = CMatrix::Zero(d, d);
  jz = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = -j + i;
    jz(i, i) = m;
    if (i + 1 < d) jp(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const CMatrix jm = jp.adjoint();
  jy = (jp - jm) / Complex(0.0, 2.0);
}

CMatrix exponential_product(int two_ell, const EulerAngles& g) {
  CMatrix jy, jz;
  spin_matrices(two_ell, jy, jz);
  const Complex mi(0.0, -1.0);
  const CMatrix a = (mi * g.phi * jz).exp();
  const CMatrix b = (mi * g.theta * jy).exp();
  const CMatrix c = (mi * g.psi * jz).exp();
  return a * b * c;
}

EulerAngles random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi), v(0.1, kPi - 0.1);
  return canonical_euler(u(rng), v(rng), u(rng));
}

}  // namespace

TEST_CASE("wigner matrix at the identity is the identity") {
  for (int two = 0; two <= 8; ++two) {
    const CMatrix m = su2::wigner_matrix(RepIndex::su2(two), EulerAngles{0.0, 0.0, 0.0});
    CHECK((m - CMatrix::Identity(two + 1, two + 1)).norm() < 1e-13);
  }
}

TEST_CASE("wigner matrix equals the z-y-z product of matrix exponentials") {
  std::mt19937_64 rng(7);
  for (int two : {1, 2, 3, 6}) {
    for (int n = 0; n < 10; ++n) {
      const EulerAngles g = random_angles(rng);
      const CMatrix want = exponential_product(two, g);
      CHECK((su2::wigner_matrix(RepIndex::su2(two), g) - want).norm() < 1e-12);
    }
  }
}

TEST_CASE("spin 1/2 wigner matrix is special unitary") {
  std::mt19937_64 rng(3);
  const EulerAngles g = random_angles(rng);
  const CMatrix m = su2::wigner_matrix(RepIndex::su2(1), g);
  CHECK(std::abs(m.determinant() - Complex(1.0)) < 1e-13);
}

TEST_CASE("unitarity and homomorphism over random samples") {
  std::mt19937_64 rng(11);
  for (int two = 0; two <= 10; ++two) {
    const RepIndex rep = RepIndex::su2(two);
    const CMatrix I = CMatrix::Identity(rep.dim(), rep.dim());
    for (int n = 0; n < 100; ++n) {
      const EulerAngles g1 = random_angles(rng), g2 = random_angles(rng);
      const CMatrix a = su2::wigner_matrix(rep, g1), b = su2::wigner_matrix(rep, g2);
      CHECK((a * a.adjoint() - I).norm() <= 1e-10);
      CHECK((su2::wigner_matrix(rep, su2::multiply(g1, g2)) - a * b).norm() <= 1e-9);
    }
  }
}

TEST_CASE("torus reps are rejected by wigner_matrix") {
  CHECK_THROWS_AS(su2::wigner_matrix(RepIndex::torus({1}), EulerAngles{0.1, 0.2, 0.3}), Error);
}

TEST_CASE("exact jet derivatives agree with finite differences") {
  std::mt19937_64 rng(5);
  const RepIndex rep = RepIndex::su2(5);
  const EulerAngles g = random_angles(rng);
  const su2::WignerJet jet = su2::wigner_jet(rep, g);
  const double h = 1e-5;
  auto at = [&](double a, double b, double c) {
    return su2::wigner_matrix(rep, EulerAngles{g.phi + a, g.theta + b, g.psi + c});
  };
  CHECK(((at(h, 0, 0) - at(-h, 0, 0)) / (2 * h) - jet.d_phi).norm() < 1e-8);
  CHECK(((at(0, h, 0) - at(0, -h, 0)) / (2 * h) - jet.d_theta).norm() < 1e-8);
  CHECK(((at(0, 0, h) - at(0, 0, -h)) / (2 * h) - jet.d_psi).norm() < 1e-8);
  const double k = 1e-4;
  CHECK(((at(0, k, 0) - 2.0 * at(0, 0, 0) + at(0, -k, 0)) / (k * k) - jet.d_thetatheta).norm() < 1e-5);
}

TEST_CASE("haar quadrature weights sum to one") {
  for (int two : {0, 3, 10, 16}) {
    const QuadratureGrid q = haar_quadrature(Band::su2(two));
    double sum = 0.0;
    for (double w : q.weights) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("Schur orthogonality on the quadrature grid") {
  const Band band = Band::su2(6);
  const QuadratureGrid q = haar_quadrature(band);
  const auto reps = band.reps();
  std::vector<std::vector<CMatrix>> values(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (const auto& g : q.nodes) values[r].push_back(su2::wigner_matrix(reps[r], g));
  double worst = 0.0;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const int da = reps[a].dim(), db = reps[b].dim();
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
          for (int k = 0; k < db; ++k)
            for (int l = 0; l < db; ++l) {
              Complex s = 0.0;
              for (std::size_t n = 0; n < q.size(); ++n)
                s += q.weights[n] * values[a][n](i, j) * std::conj(values[b][n](k, l));
              const double want = (a == b && i == k && j == l) ? 1.0 / da : 0.0;
              worst = std::max(worst, std::abs(s - want));
            }
    }
  }
  CHECK(worst <= 1e-10);
  // The two named examples at ell = 1 (0-based indices).
  const auto i1 = static_cast<std::size_t>(2);
  Complex s11 = 0.0, s12 = 0.0;
  for (std::size_t n = 0; n < q.size(); ++n) {
    s11 += q.weights[n] * values[i1][n](0, 0) * std::conj(values[i1][n](0, 0));
    s12 += q.weights[n] * values[i1][n](0, 1) * std::conj(values[i1][n](1, 0));
  }
  CHECK(std::abs(s11 - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(s12) < 1e-12);
}

TEST_CASE("X^2 + Y^2 assembled from the vector fields matches the closed form") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 20; ++n) {
    const EulerAngles g = random_angles(rng);
    const EulerOperator xx = compose(field_x(g), field_x(g));
    const EulerOperator yy = compose(field_y(g), field_y(g));
    const EulerOperator sub = sublaplacian_euler(g);
    CHECK(std::abs(xx.phiphi + yy.phiphi - sub.phiphi) < 1e-12);
    CHECK(std::abs(xx.phipsi + yy.phipsi - sub.phipsi) < 1e-12);
    CHECK(std::abs(xx.psipsi + yy.psipsi - sub.psipsi) < 1e-12);
    CHECK(std::abs(xx.thetatheta + yy.thetatheta - sub.thetatheta) < 1e-12);
    CHECK(std::abs(xx.theta + yy.theta - sub.theta) < 1e-12);
    CHECK(std::abs(xx.phi + yy.phi - sub.phi) < 1e-12);
    CHECK(std::abs(xx.psi + yy.psi - sub.psi) < 1e-12);
  }
}

TEST_CASE("sub-Laplacian in Euler angles matches the displayed formula") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 20; ++n) {
    const EulerAngles g = random_angles(rng);
    const double s = std::sin(g.theta), c = std::cos(g.theta);
    const EulerOperator sub = sublaplacian_euler(g);
    CHECK(std::abs(sub.phiphi - 1.0 / (s * s)) < 1e-10);
    CHECK(std::abs(sub.phipsi + 2.0 * c / (s * s)) < 1e-10);
    CHECK(std::abs(sub.psipsi - c * c / (s * s)) < 1e-10);
    CHECK(std::abs(sub.thetatheta - 1.0) < 1e-12);
    CHECK(std::abs(sub.theta - c / s) < 1e-10);
  }
}

TEST_CASE("[X, Y] is the third field up to sign") {
  std::mt19937_64 rng(19);
  const EulerAngles g = random_angles(rng);
  const EulerOperator b = bracket(field_x(g), field_y(g));
  const VectorFieldAt z = field_z(g);
  CHECK(std::abs(b.phiphi) + std::abs(b.thetatheta) + std::abs(b.psipsi) < 1e-12);
  const double sign = std::abs(b.psi - z.a[2]) < 1e-9 ? 1.0 : -1.0;
  CHECK(std::abs(b.phi - sign * z.a[0]) < 1e-9);
  CHECK(std::abs(b.theta - sign * z.a[1]) < 1e-9);
  CHECK(std::abs(b.psi - sign * z.a[2]) < 1e-9);
}

TEST_CASE("pointwise sub-Laplacian on constants and Wigner entries") {
  std::mt19937_64 rng(23);
  std::vector<EulerAngles> pts;
  for (int n = 0; n < 5; ++n) pts.push_back(random_angles(rng));
  FourierCoefficients one(Band::su2(2));
  one.at(RepIndex::su2(0))(0, 0) = 1.0;
  for (Complex v : apply_sublaplacian_pointwise(one, pts)) CHECK(std::abs(v) < 1e-12);

  // f = xi_ij at ell = 1 through f = 3 Tr(xi F) with F = E_ji / 3. The
  // eigenvalue is read off and frozen: it depends on the column j only.
  const double frozen[3] = {1.0, 2.0, 1.0};
  const RepIndex rep = RepIndex::su2(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FourierCoefficients f(Band::su2(2));
      f.at(rep)(j, i) = 1.0 / 3.0;
      const auto lf = apply_sublaplacian_pointwise(f, pts);
      for (std::size_t n = 0; n < pts.size(); ++n) {
        const Complex xi = su2::wigner_matrix(rep, pts[n])(i, j);
        CHECK(std::abs(lf[n] + frozen[j] * xi) < 1e-10);
      }
      const auto full = apply_operator_pointwise(laplacian_euler, f, pts);
      for (std::size_t n = 0; n < pts.size(); ++n)
        CHECK(std::abs(full[n] + 2.0 * su2::wigner_matrix(rep, pts[n])(i, j)) < 1e-10);
    }
}

TEST_CASE("pointwise operator rejects theta on the coordinate singularity") {
  FourierCoefficients one(Band::su2(0));
  one.at(RepIndex::su2(0))(0, 0) = 1.0;
  CHECK_THROWS_AS(apply_sublaplacian_pointwise(one, {EulerAngles{0.1, 0.0, 0.2}}), Error);
  CHECK_THROWS_AS(apply_sublaplacian_pointwise(one, {EulerAngles{0.1, kPi, 0.2}}), Error);
}

TEST_CASE("pointwise sub-Laplacian keeps the band") {
  const Band small = Band::su2(4), big = Band::su2(8);
  std::mt19937_64 rng(29);
  std::normal_distribution<double> nd;
  FourierCoefficients f(small);
  for (const auto& rep : small.reps()) {
    CMatrix m(rep.dim(), rep.dim());
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j) m(i, j) = Complex(nd(rng), nd(rng));
    f.set(rep, m);
  }
  auto grid = std::make_shared<const QuadratureGrid>(haar_quadrature(big));
  FunctionSamples lf{grid, apply_sublaplacian_pointwise(f, grid->nodes)};
  const FourierCoefficients g = forward_transform(lf, big);
  for (const auto& [rep, block] : g.blocks())
    if (rep.two_ell > 4) CHECK(block.cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("finite-difference operator on a callable agrees with the exact jet") {
  std::mt19937_64 rng(31);
  const EulerAngles g = canonical_euler(0.7, 1.1, -0.4);
  const RepIndex rep = RepIndex::su2(3);
  auto f = [&](const EulerAngles& x) { return su2::wigner_matrix(rep, x)(1, 2); };
  const Complex fd = apply_operator_callable(sublaplacian_euler, f, g, 1e-3);
  FourierCoefficients c(Band::su2(3));
  c.at(rep)(2, 1) = 1.0 / rep.dim();
  const Complex exact = apply_sublaplacian_pointwise(c, {g})[0];
  CHECK(std::abs(fd - exact) < 1e-6);
}

TEST_CASE("torus characters and quadrature") {
  const Band band = Band::torus(3, 2);
  const QuadratureGrid q = haar_quadrature(band);
  double sum = 0.0;
  for (double w : q.weights) sum += w;
  CHECK(std::abs(sum - 1.0) < 1e-12);
  Complex s = 0.0;
  for (std::size_t n = 0; n < q.size(); ++n)
    s += q.weights[n] * torus_character(RepIndex::torus({1, -2}), q.torus_nodes[n]) *
         std::conj(torus_character(RepIndex::torus({1, -2}), q.torus_nodes[n]));
  CHECK(std::abs(s - 1.0) < 1e-12);
}
