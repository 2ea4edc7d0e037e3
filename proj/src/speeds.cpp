#include "liewave/speeds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "liewave/error.hpp"

namespace liewave {

namespace {

using boost::math::quadrature::gauss_kronrod;

double bump(double s) { return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; }

double bump_prime(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return -2.0 * s / (q * q) * std::exp(-1.0 / q);
}

double bump_mass() {
  static const double mass = gauss_kronrod<double, 61>::integrate(bump, -1.0, 1.0, 15, 1e-15);
  return mass;
}

double default_horizon(const std::string& key) {
  if (key == "constant" || key == "two_plus_sin") return 2.0 * std::numbers::pi;
  if (key == "t_squared") return 1.0;
  if (key == "sin4") return std::numbers::pi;
  return 2.0;
}

}  // namespace

std::vector<std::string> profile_keys() {
  return {"constant", "two_plus_sin", "one_plus_holder", "t_squared", "sin4", "holder_degenerate"};
}

SpeedProfile make_profile(const std::string& key, const ProfileParams& params) {
  SpeedProfile p;
  p.key = key;
  p.T = params.T > 0.0 ? params.T : default_horizon(key);
  const double c = params.shift;
  const double T = p.T;
  if (key == "constant") {
    if (1.0 + c <= 0.0) fail(ErrorCode::invalid_argument, "constant profile needs 1 + shift > 0");
    p.case_tag = 1;
    p.a = [c](double) { return 1.0 + c; };
    p.da = [](double) { return 0.0; };
    p.a0 = p.sup_a = 1.0 + c;
    p.sup_da = 0.0;
    p.smoothness = 2;
  } else if (key == "two_plus_sin") {
    if (1.0 + c <= 0.0) fail(ErrorCode::invalid_argument, "two_plus_sin needs 1 + shift > 0");
    p.case_tag = 1;
    p.a = [c](double t) { return 2.0 + std::sin(t) + c; };
    p.da = [](double t) { return std::cos(t); };
    p.a0 = 1.0 + c;
    p.sup_a = 3.0 + c;
    p.sup_da = 1.0;
    p.smoothness = 2;
  } else if (key == "one_plus_holder") {
    const double al = params.alpha;
    if (!(al > 0.0 && al < 1.0)) fail(ErrorCode::invalid_argument, "one_plus_holder needs alpha in (0, 1)");
    if (1.0 + c <= 0.0) fail(ErrorCode::invalid_argument, "one_plus_holder needs 1 + shift > 0");
    p.case_tag = 2;
    p.alpha = al;
    p.a = [al, c, T](double t) { return 1.0 + c + std::pow(std::abs(t - 0.5 * T), al); };
    p.a0 = 1.0 + c;
    p.sup_a = 1.0 + c + std::pow(0.5 * T, al);
    p.kinks = {0.5 * T};
  } else if (key == "t_squared") {
    if (c < 0.0) fail(ErrorCode::invalid_argument, "t_squared needs shift >= 0");
    p.case_tag = 3;
    p.a = [c](double t) { return t * t + c; };
    p.da = [](double t) { return 2.0 * t; };
    p.a0 = c;
    p.sup_a = T * T + c;
    p.sup_da = 2.0 * T;
    p.smoothness = params.smoothness;
  } else if (key == "sin4") {
    if (c < 0.0) fail(ErrorCode::invalid_argument, "sin4 needs shift >= 0");
    p.case_tag = 3;
    p.a = [c](double t) { return std::pow(std::sin(t), 4) + c; };
    p.da = [](double t) { return 4.0 * std::pow(std::sin(t), 3) * std::cos(t); };
    p.a0 = c;
    p.sup_a = 1.0 + c;
    p.sup_da = 4.0 * std::pow(0.75, 1.5) * 0.5;
    p.smoothness = params.smoothness;
  } else if (key == "holder_degenerate") {
    const double al = params.alpha;
    if (!(al > 0.0 && al < 2.0)) fail(ErrorCode::invalid_argument, "holder_degenerate needs alpha in (0, 2)");
    if (c < 0.0) fail(ErrorCode::invalid_argument, "holder_degenerate needs shift >= 0");
    p.case_tag = 4;
    p.alpha = al;
    p.a = [al, c, T](double t) { return c + std::pow(std::abs(t - 0.5 * T), al); };
    p.a0 = c;
    p.sup_a = c + std::pow(0.5 * T, al);
    p.kinks = {0.5 * T};
  } else {
    fail(ErrorCode::config, "unknown speed profile '" + key + "'");
  }
  if (p.case_tag == 3 && p.smoothness < 2) fail(ErrorCode::invalid_argument, "Case 3 needs smoothness >= 2");
  return p;
}

std::vector<SpeedProfile> builtin_profiles() {
  std::vector<SpeedProfile> out;
  for (const auto& k : profile_keys()) out.push_back(make_profile(k));
  return out;
}

void validate_profile(const SpeedProfile& p) {
  if (!p.a) fail(ErrorCode::invalid_argument, "profile has no coefficient function");
  if (!(p.T > 0.0)) fail(ErrorCode::invalid_argument, "profile horizon must be positive");
  const int n = 10000;
  for (int i = 0; i <= n; ++i) {
    const double t = p.T * i / n;
    const double v = p.a(t);
    if (!(v >= 0.0)) fail(ErrorCode::invalid_argument, "a(t) < 0 at t = " + std::to_string(t));
    if ((p.case_tag == 1 || p.case_tag == 2) && v < p.a0 - 1e-14)
      fail(ErrorCode::invalid_argument, "a(t) drops below a0 at t = " + std::to_string(t));
  }
  if ((p.case_tag == 1 || p.case_tag == 2) && !(p.a0 > 0.0))
    fail(ErrorCode::invalid_argument, "Cases 1 and 2 need a0 > 0");
}

double internal_alpha(const SpeedProfile& p) {
  if (p.case_tag == 4) return 0.5 * p.alpha;
  if (p.case_tag == 2) return p.alpha;
  return 1.0;
}

MollifiedRoots::MollifiedRoots(SpeedProfile profile, double epsilon, ShiftMode mode)
    : profile_(std::move(profile)), eps_(epsilon), mode_(mode), alpha_(internal_alpha(profile_)) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) fail(ErrorCode::invalid_argument, "epsilon must lie in (0, 1]");
  if (mode_ == ShiftMode::alpha_shift) {
    shift1_ = std::pow(eps_, alpha_);
    shift2_ = 2.0 * shift1_;
  }
}

RootValues MollifiedRoots::eval(double t) const {
  const SpeedProfile& p = profile_;
  auto root = [&](double tau) { return std::sqrt(p.a(std::clamp(tau, 0.0, p.T))); };
  // Split [-1, 1] where t - eps s hits a point at which sqrt(a) is not smooth.
  std::vector<double> cuts{-1.0, 1.0};
  std::vector<double> singular = p.kinks;
  singular.push_back(0.0);
  singular.push_back(p.T);
  for (double k : singular) {
    const double s = (t - k) / eps_;
    if (s > -1.0 && s < 1.0) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  double conv = 0.0, dconv = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 0.0) continue;
    conv += gauss_kronrod<double, 31>::integrate([&](double s) { return root(t - eps_ * s) * bump(s); },
                                                 cuts[i], cuts[i + 1], 12, 1e-12);
    dconv += gauss_kronrod<double, 31>::integrate([&](double s) { return root(t - eps_ * s) * bump_prime(s); },
                                                  cuts[i], cuts[i + 1], 12, 1e-12);
  }
  conv /= bump_mass();
  dconv /= bump_mass() * eps_;
  return {-conv + shift1_, conv + shift2_, -dconv, dconv};
}

MollifiedRoots mollified_roots(const SpeedProfile& p, double epsilon, ShiftMode mode) {
  return MollifiedRoots(p, epsilon, mode);
}

double holder_estimate(const SpeedProfile& p, double alpha, int grid_points) {
  if (!(alpha > 0.0 && alpha <= 2.0)) fail(ErrorCode::invalid_argument, "holder_estimate needs alpha in (0, 2]");
  if (grid_points < 2) fail(ErrorCode::invalid_argument, "holder_estimate needs at least two grid points");
  std::vector<double> t(static_cast<std::size_t>(grid_points)), v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = p.T * static_cast<double>(i) / (grid_points - 1);
    v[i] = p.a(t[i]);
  }
  double best = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size() && t[j] - t[i] <= 0.1 + 1e-15; ++j)
      best = std::max(best, std::abs(v[j] - v[i]) / std::pow(t[j] - t[i], alpha));
  return best;
}

}  // namespace liewave
