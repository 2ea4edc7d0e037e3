#pragma once

#include <functional>
#include <string>
#include <vector>

namespace liewave {

struct ProfileParams {
  double alpha = 0.5;
  double T = 0.0;      // 0 selects the profile default
  double shift = 0.0;  // additive constant
  int smoothness = 2;  // Case 3 differentiability order ell
};

/// Coefficient a(t) on [0, T] with its declared regularity class.
struct SpeedProfile {
  std::string key;
  int case_tag = 1;
  std::function<double(double)> a;
  std::function<double(double)> da;  // a'(t) where it exists; empty otherwise
  double a0 = 0.0;          // declared lower bound
  double sup_a = 0.0;
  double sup_da = 0.0;      // Lipschitz constant (Case 1)
  double alpha = 0.0;       // Holder exponent as declared by the user
  int smoothness = 0;
  double T = 1.0;
  std::vector<double> kinks;  // points where a is not smooth

  double operator()(double t) const { return a(t); }
};

/// Keys: constant, two_plus_sin, one_plus_holder, t_squared, sin4, holder_degenerate.
SpeedProfile make_profile(const std::string& key, const ProfileParams& params = {});
std::vector<std::string> profile_keys();
std::vector<SpeedProfile> builtin_profiles();

/// Checks a >= 0 (and a >= a0 in Cases 1-2) on a 10^4-point grid.
void validate_profile(const SpeedProfile& p);

enum class ShiftMode { none, alpha_shift };

struct RootValues {
  double lambda1, lambda2, dlambda1, dlambda2;
};

/// lambda_{1,2} = -/+ (sqrt(a) * phi_eps), plus eps^alpha and 2 eps^alpha in
/// alpha_shift mode (alpha halved from the user value there). Convolution
/// extends a by constants outside [0, T].
class MollifiedRoots {
 public:
  MollifiedRoots(SpeedProfile profile, double epsilon, ShiftMode mode);

  RootValues eval(double t) const;
  double lambda1(double t) const { return eval(t).lambda1; }
  double lambda2(double t) const { return eval(t).lambda2; }

  double epsilon() const { return eps_; }
  ShiftMode mode() const { return mode_; }
  /// Exponent used for the shift and the expected approximation rate.
  double rate_alpha() const { return alpha_; }
  const SpeedProfile& profile() const { return profile_; }

 private:
  SpeedProfile profile_;
  double eps_;
  ShiftMode mode_;
  double alpha_;
  double shift1_ = 0.0, shift2_ = 0.0;
};

MollifiedRoots mollified_roots(const SpeedProfile& p, double epsilon, ShiftMode mode);

/// Internal Holder exponent for a profile: alpha (Case 2) or alpha/2 (Case 4).
double internal_alpha(const SpeedProfile& p);

/// max |a(t) - a(s)| / |t - s|^alpha over grid pairs with |t - s| <= 0.1.
double holder_estimate(const SpeedProfile& p, double alpha, int grid_points = 2001);

}  // namespace liewave
