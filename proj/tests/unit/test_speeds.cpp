#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liewave/error.hpp"
#include "liewave/speeds.hpp"

using namespace liewave;

TEST_CASE("built-in profile values and cases") {
  const SpeedProfile c = make_profile("constant");
  CHECK(c.case_tag == 1);
  CHECK(c(0.7) == 1.0);
  const SpeedProfile s = make_profile("two_plus_sin");
  CHECK(s(std::numbers::pi / 2) == doctest::Approx(3.0));
  CHECK(s.a0 == 1.0);
  CHECK(s.sup_a == 3.0);
  ProfileParams hp;
  hp.alpha = 0.5;
  const SpeedProfile h = make_profile("one_plus_holder", hp);
  CHECK(h.case_tag == 2);
  CHECK(h(1.0) == doctest::Approx(1.0));
  CHECK(h(0.0) == doctest::Approx(2.0));
  const SpeedProfile q = make_profile("t_squared");
  CHECK(q.case_tag == 3);
  CHECK(q(0.5) == doctest::Approx(0.25));
  CHECK(make_profile("sin4")(std::numbers::pi / 2) == doctest::Approx(1.0));
  ProfileParams dp;
  dp.alpha = 1.0;
  const SpeedProfile d = make_profile("holder_degenerate", dp);
  CHECK(d.case_tag == 4);
  CHECK(d(1.0) == 0.0);
  CHECK(d(1.5) == doctest::Approx(0.5));
  for (const auto& p : builtin_profiles()) CHECK_NOTHROW(validate_profile(p));
}

TEST_CASE("shift is an additive constant") {
  ProfileParams pp;
  pp.shift = 0.25;
  CHECK(make_profile("t_squared", pp)(0.0) == doctest::Approx(0.25));
  CHECK(make_profile("constant", pp)(3.0) == doctest::Approx(1.25));
}

TEST_CASE("bad profile requests are rejected") {
  CHECK_THROWS_AS(make_profile("no_such_profile"), Error);
  ProfileParams pp;
  pp.alpha = 1.5;
  CHECK_THROWS_AS(make_profile("one_plus_holder", pp), Error);
  pp.alpha = 0.5;
  pp.shift = -1.0;
  CHECK_THROWS_AS(make_profile("sin4", pp), Error);
  ProfileParams sm;
  sm.smoothness = 1;
  CHECK_THROWS_AS(make_profile("t_squared", sm), Error);
}

TEST_CASE("validation catches negative or degenerate coefficients") {
  SpeedProfile p = make_profile("constant");
  p.a = [](double t) { return std::cos(t); };
  CHECK_THROWS_AS(validate_profile(p), Error);
  SpeedProfile q = make_profile("two_plus_sin");
  q.a0 = 1.5;  // sin dips to 1
  CHECK_THROWS_AS(validate_profile(q), Error);
  SpeedProfile r = make_profile("constant");
  r.T = 0.0;
  CHECK_THROWS_AS(validate_profile(r), Error);
}

TEST_CASE("Holder estimate") {
  ProfileParams pp;
  pp.alpha = 0.5;
  const SpeedProfile h = make_profile("one_plus_holder", pp);
  // |t - 1|^{1/2} has Holder-1/2 constant 1, attained from the kink.
  const double c = holder_estimate(h, 0.5);
  CHECK(c == doctest::Approx(1.0).epsilon(1e-6));
  // Lipschitz quotient blows up near the kink.
  CHECK(holder_estimate(h, 1.0) > 5.0);
  CHECK_THROWS_AS(holder_estimate(h, 0.0), Error);
}

TEST_CASE("mollified roots of a constant coefficient") {
  const MollifiedRoots r(make_profile("constant"), 0.1, ShiftMode::none);
  for (double t : {0.0, 0.05, 1.0, 2 * std::numbers::pi}) {
    const RootValues v = r.eval(t);
    CHECK(v.lambda1 == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(v.lambda2 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(v.dlambda1) < 1e-9);
  }
  CHECK_THROWS_AS(MollifiedRoots(make_profile("constant"), 0.0, ShiftMode::none), Error);
}

TEST_CASE("mollified roots approximate sqrt(a) at the Holder rate") {
  ProfileParams pp;
  pp.alpha = 1.0;
  const SpeedProfile p = make_profile("holder_degenerate", pp);
  CHECK(internal_alpha(p) == 0.5);
  for (double eps : {0.1, 0.01}) {
    const MollifiedRoots r(p, eps, ShiftMode::none);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double t = p.T * i / 200;
      worst = std::max(worst, std::abs(r.lambda2(t) - std::sqrt(p(t))));
    }
    CHECK(worst <= std::pow(eps, 0.5));
  }
}

TEST_CASE("alpha shift separates the roots") {
  ProfileParams pp;
  pp.alpha = 1.0;
  const SpeedProfile p = make_profile("holder_degenerate", pp);
  const double eps = 0.04;
  const MollifiedRoots r(p, eps, ShiftMode::alpha_shift);
  CHECK(r.rate_alpha() == 0.5);
  for (double t : {0.0, 0.9, 1.0, 1.3}) {
    const RootValues v = r.eval(t);
    CHECK(v.lambda2 - v.lambda1 >= std::pow(eps, 0.5) - 1e-14);
    CHECK(v.lambda1 == doctest::Approx(-MollifiedRoots(p, eps, ShiftMode::none).lambda2(t) + std::pow(eps, 0.5)));
  }
}

TEST_CASE("derivative of the mollified root matches a finite difference") {
  ProfileParams pp;
  pp.alpha = 0.5;
  const MollifiedRoots r(make_profile("one_plus_holder", pp), 0.05, ShiftMode::none);
  const double t = 0.98, h = 1e-5;
  const double fd = (r.lambda2(t + h) - r.lambda2(t - h)) / (2 * h);
  CHECK(r.eval(t).dlambda2 == doctest::Approx(fd).epsilon(1e-5));
}
