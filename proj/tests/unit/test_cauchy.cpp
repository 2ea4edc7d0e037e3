#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liewave/cauchy.hpp"
#include "liewave/error.hpp"
#include "liewave/fourier.hpp"

using namespace liewave;

namespace {

FourierCoefficients ones(const Band& band) {
  return random_coefficients(band, 11, [](const RepIndex& r) { return std::pow(r.jap(), -2.0); });
}

CauchyProblem problem(DiagonalSymbol op, SpeedProfile speed, FourierCoefficients u0, FourierCoefficients u1,
                      double T) {
  return CauchyProblem{std::move(op), std::move(speed), std::move(u0), std::move(u1), T};
}

}  // namespace

TEST_CASE("constant data on the trivial representation stay put") {
  const DiagonalSymbol op = sublaplacian_symbol(Band::su2(4));
  FourierCoefficients u0(op.band);
  u0.at(RepIndex::su2(0))(0, 0) = 1.0;
  const SolutionField sol = solve(problem(op, make_profile("two_plus_sin"), u0, FourierCoefficients(op.band), 2.0),
                                  {1e-3, 5, 1});
  for (const auto& u : sol.u) CHECK(max_abs_difference(u, u0) == 0.0);
  for (const auto& ut : sol.ut) CHECK(max_abs_difference(ut, FourierCoefficients(op.band)) == 0.0);
}

TEST_CASE("torus mode evolves as cos(k t)") {
  const DiagonalSymbol op = laplacian_symbol(Band::torus(4));
  FourierCoefficients u0(op.band);
  u0.at(RepIndex::torus({3}))(0, 0) = 1.0;
  const double T = 2 * std::numbers::pi;
  const SolutionField sol = solve(problem(op, make_profile("constant"), u0, FourierCoefficients(op.band), T),
                                  {1e-4, 9, 1});
  for (std::size_t k = 0; k < sol.times.size(); ++k) {
    const Complex v = sol.u[k].find(RepIndex::torus({3}))->coeff(0, 0);
    CHECK(std::abs(v - std::cos(3.0 * sol.times[k])) <= 1e-8);
  }
}

TEST_CASE("spin 2 rows oscillate with their own frequencies") {
  const DiagonalSymbol op = sublaplacian_symbol(Band::su2(4));
  FourierCoefficients u0(op.band);
  u0.set(RepIndex::su2(4), CMatrix::Constant(5, 5, 1.0));
  const SolutionField sol = solve(problem(op, make_profile("constant"), u0, FourierCoefficients(op.band), 1.0),
                                  {1e-3, 6, 1});
  const double nu2[5] = {2, 5, 6, 5, 2};
  double worst = 0.0;
  for (std::size_t k = 0; k < sol.times.size(); ++k) {
    const CMatrix& b = *sol.u[k].find(RepIndex::su2(4));
    for (int j = 0; j < 5; ++j)
      for (int m = 0; m < 5; ++m) worst = std::max(worst, std::abs(b(j, m) - std::cos(std::sqrt(nu2[j]) * sol.times[k])));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("linearity and decoupling of representations") {
  const DiagonalSymbol op = sublaplacian_symbol(Band::su2(6));
  const SpeedProfile sp = make_profile("sin4");
  const FourierCoefficients a = ones(op.band), b = random_coefficients(op.band, 12, [](const RepIndex&) { return 1.0; });
  const Complex c(0.5, -2.0);
  const SolveOptions opt{1e-3, 3, 2};
  const SolutionField sa = solve(problem(op, sp, a, b, 2.0), opt);
  const SolutionField sb = solve(problem(op, sp, b, a, 2.0), opt);
  const SolutionField sc = solve(problem(op, sp, a + c * b, b + c * a, 2.0), opt);
  CHECK(max_abs_difference(sc.u.back(), sa.u.back() + c * sb.u.back()) < 1e-12);
  CHECK(max_abs_difference(sc.ut.back(), sa.ut.back() + c * sb.ut.back()) < 1e-12);
  // Data on one representation never leak into another.
  const SolutionField s1 = solve(problem(op, sp, truncate(a, Band::su2(1)), FourierCoefficients(op.band), 2.0), opt);
  for (const auto& [rep, blk] : s1.u.back().blocks())
    if (rep.two_ell > 1) CHECK(blk.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("time reversal with a symmetric coefficient") {
  const DiagonalSymbol op = sublaplacian_symbol(Band::su2(6));
  const SpeedProfile sp = make_profile("sin4");  // a(pi - t) = a(t)
  const double T = std::numbers::pi;
  const FourierCoefficients u0 = ones(op.band), u1 = random_coefficients(op.band, 2, [](const RepIndex&) { return 1.0; });
  const SolveOptions opt{1e-3, 2, 1};
  const SolutionField fwd = solve(problem(op, sp, u0, u1, T), opt);
  const SolutionField back = solve(problem(op, sp, fwd.u.back(), Complex(-1.0) * fwd.ut.back(), T), opt);
  CHECK(max_abs_difference(back.u.back(), u0) < 1e-8);
  CHECK(max_abs_difference(back.ut.back(), Complex(-1.0) * u1) < 1e-8);
}

TEST_CASE("energy form constant is one for a = 1") {
  const DiagonalSymbol op = sublaplacian_symbol(Band::su2(8));
  const CauchyProblem pr = problem(op, make_profile("constant"), ones(op.band), ones(op.band), 2.0);
  const SolutionField sol = solve(pr, {1e-3, 9, 1});
  const RegularityReport r = regularity_report(sol, pr, 1.0);
  CHECK(r.r == 2);
  CHECK(r.C_energy == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.C_sup_energy == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.C_theorem <= r.C_sup_theorem * (1 + 1e-12));
  CHECK(r.C_sob <= r.C_sup_sob * (1 + 1e-12));
  CHECK(r.lhs_energy.size() == sol.times.size());
}

TEST_CASE("solver argument errors") {
  const DiagonalSymbol op = sublaplacian_symbol(Band::su2(8));
  const FourierCoefficients z(op.band);
  try {
    solve(problem(op, make_profile("constant"), z, z, 1.0), {0.5, 2, 1});
    FAIL("expected a stability error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::stability);
  }
  CHECK_THROWS_AS(solve(problem(op, make_profile("t_squared"), z, z, 5.0), {1e-3, 2, 1}), Error);
  FourierCoefficients big(Band::su2(10));
  big.at(RepIndex::su2(10))(0, 0) = 1.0;
  CHECK_THROWS_AS(solve(problem(op, make_profile("constant"), big, z, 1.0), {1e-3, 2, 1}), Error);
  CHECK_THROWS_AS(solve(problem(op, make_profile("constant"), z, z, 1.0), {1e-3, 1, 1}), Error);
}

TEST_CASE("admissible Gevrey intervals") {
  ProfileParams h;
  h.alpha = 0.5;
  CHECK(gevrey_interval(make_profile("one_plus_holder", h)).second == doctest::Approx(2.0));
  CHECK(gevrey_interval(make_profile("t_squared")).second == doctest::Approx(2.0));
  ProfileParams d;
  d.alpha = 1.0;
  CHECK(gevrey_interval(make_profile("holder_degenerate", d)).second == doctest::Approx(1.5));
  CHECK(std::isinf(gevrey_interval(make_profile("constant")).second));
  GevreyExperimentOptions opt;
  opt.s = 3.0;
  opt.two_lmax = 8;
  try {
    gevrey_experiment(make_profile("t_squared"), opt);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("random coefficients are deterministic") {
  const Band band = Band::su2(6);
  auto decay = [](const RepIndex& r) { return 1.0 / r.jap(); };
  CHECK(max_abs_difference(random_coefficients(band, 7, decay), random_coefficients(band, 7, decay)) == 0.0);
  CHECK(max_abs_difference(random_coefficients(band, 7, decay), random_coefficients(band, 8, decay)) > 0.0);
}
