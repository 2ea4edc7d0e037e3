#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "liewave/error.hpp"
#include "liewave/symbols.hpp"

using namespace liewave;

TEST_CASE("Laplacian symbol values") {
  const DiagonalSymbol s = laplacian_symbol(Band::su2(4));
  CHECK(s.hormander_order == 1);
  CHECK(s.nu(RepIndex::su2(0), 0) == 0.0);
  for (double v : s.nu2(RepIndex::su2(2))) CHECK(v == doctest::Approx(2.0));
  const DiagonalSymbol t = laplacian_symbol(Band::torus(5));
  CHECK(t.nu2(RepIndex::torus({3}))[0] == doctest::Approx(9.0));
  CHECK(t.nu2(RepIndex::torus({-3}))[0] == doctest::Approx(9.0));
}

TEST_CASE("sub-Laplacian symbol values frozen from the oracle") {
  const DiagonalSymbol s = sublaplacian_symbol(Band::su2(10));
  CHECK(s.hormander_order == 2);
  CHECK(s.nu(RepIndex::su2(0), 0) == 0.0);
  const auto& l1 = s.nu2(RepIndex::su2(2));
  CHECK(l1[0] == doctest::Approx(1.0));
  CHECK(l1[1] == doctest::Approx(2.0));
  CHECK(l1[2] == doctest::Approx(1.0));
  const auto& l5 = s.nu2(RepIndex::su2(10));
  CHECK(l5.front() == doctest::Approx(5.0));
  CHECK(l5.back() == doctest::Approx(5.0));
  const auto& l2 = s.nu2(RepIndex::su2(4));
  const double want[5] = {2, 5, 6, 5, 2};
  for (int j = 0; j < 5; ++j) CHECK(l2[static_cast<std::size_t>(j)] == doctest::Approx(want[j]));
}

TEST_CASE("sub-Laplacian is dominated by the Laplacian") {
  const DiagonalSymbol s = sublaplacian_symbol(Band::su2(40));
  for (const auto& [rep, nu2] : s.nu_squared)
    for (double v : nu2) {
      CHECK(v >= 0.0);
      CHECK(v <= rep.laplacian_eigenvalue() + 1e-12);
    }
}

TEST_CASE("symbol extracted from X^2 + Y^2 assembled in the test") {
  // Independent route: the operator is composed from the two vector fields
  // here instead of the closed-form Euler expression.
  EulerOperatorField op = [](const EulerAngles& g) {
    const EulerOperator a = compose(field_x(g), field_x(g));
    const EulerOperator b = compose(field_y(g), field_y(g));
    EulerOperator s;
    s.phiphi = a.phiphi + b.phiphi;
    s.phitheta = a.phitheta + b.phitheta;
    s.phipsi = a.phipsi + b.phipsi;
    s.thetatheta = a.thetatheta + b.thetatheta;
    s.thetapsi = a.thetapsi + b.thetapsi;
    s.psipsi = a.psipsi + b.psipsi;
    s.phi = a.phi + b.phi;
    s.theta = a.theta + b.theta;
    s.psi = a.psi + b.psi;
    return s;
  };
  const DiagonalSymbol table = sublaplacian_symbol(Band::su2(10));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi), v(0.2, std::numbers::pi - 0.2);
  for (int two = 0; two <= 10; ++two) {
    const RepIndex rep = RepIndex::su2(two);
    const CMatrix s = extract_symbol(op, rep, canonical_euler(u(rng), v(rng), u(rng)));
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j) {
        const double want = i == j ? -table.nu2(rep)[static_cast<std::size_t>(i)] : 0.0;
        CHECK(std::abs(s(i, j) - want) <= 1e-8);
      }
  }
}

TEST_CASE("oracle check passes on ell <= 5") {
  const OracleCheck c = verify_sublaplacian_symbol(Band::su2(10), 4, 0);
  CHECK(c.pass);
  CHECK(c.reps_checked == 11);
  CHECK(c.max_deviation <= 1e-8);
  CHECK(c.max_off_diagonal <= 1e-8);
  CHECK_NOTHROW(sublaplacian_symbol(Band::su2(6), true));
}

TEST_CASE("Hormander bounds: r = 2 passes, r = 1 is a failing control") {
  const DiagonalSymbol s = sublaplacian_symbol(Band::su2(100));
  const HormanderReport h2 = check_hormander_bounds(s, 2);
  CHECK(h2.pass);
  CHECK(h2.c_lower >= 0.9);
  CHECK(h2.c_upper <= std::sqrt(2.0));
  const HormanderReport h1 = check_hormander_bounds(s, 1);
  CHECK_FALSE(h1.pass);
  CHECK(h1.c_lower < h1.c_lower_half_band);
  // Brute-force oracle for c_lower at r = 2.
  double lo = INFINITY;
  for (int two = 0; two <= 100; ++two) {
    const double l = 0.5 * two;
    for (int i = 0; i <= two; ++i) {
      const double m = -l + i;
      lo = std::min(lo, (std::sqrt(l * (l + 1) - m * m) + 1.0) / std::pow(1.0 + l * (l + 1), 0.25));
    }
  }
  CHECK(h2.c_lower == doctest::Approx(lo).epsilon(1e-12));
  CHECK(check_hormander_bounds(laplacian_symbol(Band::su2(100))).pass);
}

TEST_CASE("sub-Laplacian on the torus is rejected") {
  CHECK_THROWS_AS(sublaplacian_symbol(Band::torus(3)), Error);
}
