#include "liewave/mode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "liewave/error.hpp"
#include "liewave/io.hpp"

namespace liewave {

namespace {

constexpr Complex kI(0.0, 1.0);

double sup_a(const SpeedProfile& p) {
  if (p.sup_a > 0.0) return p.sup_a;
  double best = 0.0;
  for (int i = 0; i <= 10000; ++i) best = std::max(best, p.a(p.T * i / 10000.0));
  return best;
}

void check_guard(const SpeedProfile& p, double nu, double dt) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) fail(ErrorCode::invalid_argument, "nu must be a finite nonnegative number");
  if (!(dt > 0.0)) fail(ErrorCode::invalid_argument, "dt must be positive");
  const double limit = max_stable_dt(p, nu);
  if (dt > limit)
    fail(ErrorCode::stability, "dt = " + format_double(dt) + " violates dt*nu*sqrt(sup a) <= 0.5 at nu = " +
                                   format_double(nu) + "; use dt <= " + format_double(limit));
}

// dV/dt = i nu A(t) V applied to the columns of X.
template <class M>
M rhs(const SpeedProfile& p, double nu, double t, const M& x) {
  M out(x.rows(), x.cols());
  const double a = p.a(t);
  out.row(0) = kI * nu * x.row(1);
  out.row(1) = kI * nu * a * x.row(0);
  return out;
}

template <class M>
M rk4_step(const SpeedProfile& p, double nu, double t, double h, const M& x) {
  const M k1 = rhs(p, nu, t, x);
  const M k2 = rhs(p, nu, t + 0.5 * h, M(x + 0.5 * h * k1));
  const M k3 = rhs(p, nu, t + 0.5 * h, M(x + 0.5 * h * k2));
  const M k4 = rhs(p, nu, t + h, M(x + h * k3));
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double op_norm(const Mat2c& m) {
  Eigen::JacobiSVD<Mat2c> svd(m);
  return svd.singularValues()(0);
}

int steps_for(double span, double dt) {
  return std::max(1, static_cast<int>(std::ceil(span / dt - 1e-9)));
}

}  // namespace

double ModeTrajectory::amplification() const {
  if (V.empty()) return 1.0;
  const double n0 = V.front().norm();
  return n0 == 0.0 ? 1.0 : V.back().norm() / n0;
}

double max_stable_dt(const SpeedProfile& p, double nu) {
  const double speed = nu * std::sqrt(sup_a(p));
  return speed > 0.0 ? 0.5 / speed : INFINITY;
}

ModeTrajectory integrate_mode(const SpeedProfile& p, double nu, Complex v0, Complex v1, double T, double dt,
                              int store_every) {
  check_guard(p, nu, dt);
  if (!(T > 0.0)) fail(ErrorCode::invalid_argument, "T must be positive");
  if (T > p.T + 1e-12) fail(ErrorCode::invalid_argument, "T exceeds the profile horizon");
  store_every = std::max(1, store_every);
  const int n = steps_for(T, dt);
  const double h = T / n;
  ModeTrajectory tr;
  tr.nu = nu;
  auto store = [&](double t, const Vec2c& V, Complex v) {
    tr.times.push_back(t);
    tr.V.push_back(V);
    tr.v.push_back(v);
  };
  if (nu == 0.0) {
    for (int i = 0; i <= n; ++i) {
      if (i % store_every != 0 && i != n) continue;
      const double t = i * h;
      store(t, Vec2c(0.0, v1), v0 + v1 * t);
    }
    return tr;
  }
  Vec2c V(kI * nu * v0, v1);
  store(0.0, V, v0);
  for (int i = 1; i <= n; ++i) {
    V = rk4_step(p, nu, (i - 1) * h, h, V);
    if (i % store_every == 0 || i == n) store(i * h, V, V(0) / (kI * nu));
  }
  return tr;
}

std::vector<Mat2c> mode_propagators(const SpeedProfile& p, double nu, const std::vector<double>& times, double dt) {
  check_guard(p, nu, dt);
  std::vector<Mat2c> out;
  out.reserve(times.size());
  Mat2c phi = Mat2c::Identity();
  double t = 0.0;
  for (double target : times) {
    if (target < t - 1e-14) fail(ErrorCode::invalid_argument, "propagator times must be ascending");
    if (target > t && nu > 0.0) {
      const int n = steps_for(target - t, dt);
      const double h = (target - t) / n;
      for (int i = 0; i < n; ++i) phi = rk4_step(p, nu, t + i * h, h, phi);
    }
    t = std::max(t, target);
    out.push_back(phi);
  }
  return out;
}

double sup_propagator_norm(const SpeedProfile& p, double nu, double T, double dt) {
  check_guard(p, nu, dt);
  if (nu == 0.0) return 1.0;
  const int n = steps_for(T, dt);
  const double h = T / n;
  Mat2c phi = Mat2c::Identity();
  double best = 1.0;
  for (int i = 0; i < n; ++i) {
    phi = rk4_step(p, nu, i * h, h, phi);
    best = std::max(best, op_norm(phi));
  }
  return best;
}

Eigen::Matrix2d symmetriser(double a) {
  Eigen::Matrix2d s;
  s << 2.0 * a, 0.0, 0.0, 2.0;
  return s;
}

Eigen::Matrix2d system_matrix(double a) {
  Eigen::Matrix2d m;
  m << 0.0, 1.0, a, 0.0;
  return m;
}

SymmetriserEnergyReport symmetriser_energy(const ModeTrajectory& traj, const SpeedProfile& p) {
  if (p.case_tag != 1) fail(ErrorCode::invalid_argument, "symmetriser energy estimates need a Case 1 profile");
  SymmetriserEnergyReport r;
  const double a1 = sup_a(p);
  r.c0 = 2.0 * std::min(p.a0, 1.0);
  r.c1 = 2.0 * std::max(a1, 1.0);
  r.c_prime = p.sup_da / std::min(p.a0, 1.0);
  const double T = traj.times.empty() ? 0.0 : traj.times.back();
  r.gronwall_bound = std::exp(r.c_prime * T);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Vec2c& V = traj.V[i];
    const double e = 2.0 * p.a(traj.times[i]) * std::norm(V(0)) + 2.0 * std::norm(V(1));
    const double v2 = V.squaredNorm();
    if (e < r.c0 * v2 * (1.0 - 1e-12) || e > r.c1 * v2 * (1.0 + 1e-12)) r.sandwich_holds = false;
    r.energy.push_back(e);
  }
  if (r.energy.empty() || r.energy.front() == 0.0) return r;
  const double e0 = r.energy.front();
  double max_dt = 0.0;
  for (std::size_t i = 0; i < r.energy.size(); ++i) {
    r.max_growth = std::max(r.max_growth, r.energy[i] / e0);
    r.max_relative_drift = std::max(r.max_relative_drift, std::abs(r.energy[i] - e0) / e0);
    if (i > 0) max_dt = std::max(max_dt, traj.times[i] - traj.times[i - 1]);
  }
  r.max_log_derivative = -INFINITY;
  for (std::size_t i = 1; i + 1 < r.energy.size(); ++i) {
    const double d = (std::log(r.energy[i + 1]) - std::log(r.energy[i - 1])) / (traj.times[i + 1] - traj.times[i - 1]);
    r.max_log_derivative = std::max(r.max_log_derivative, d);
  }
  if (r.energy.size() < 3) r.max_log_derivative = 0.0;
  r.log_derivative_ok = r.max_log_derivative <= r.c_prime + 10.0 * max_dt * max_dt;
  return r;
}

double case1_constant(const std::vector<ModeTrajectory>& trajectories) {
  double best = 1.0;
  for (const auto& tr : trajectories) {
    if (tr.V.empty()) continue;
    const double n0 = tr.V.front().norm();
    if (n0 == 0.0) continue;
    for (const auto& V : tr.V) best = std::max(best, V.norm() / n0);
  }
  return best;
}

double case1_constant_bound(const SpeedProfile& p) {
  const double c0 = 2.0 * std::min(p.a0, 1.0);
  const double c1 = 2.0 * std::max(sup_a(p), 1.0);
  const double cp = p.sup_da / std::min(p.a0, 1.0);
  return std::exp(0.5 * cp * p.T) * std::sqrt(c1 / c0);
}

double quasi_symmetriser_constant(const SpeedProfile& p) { return 2.0 * std::max(sup_a(p) + 1.0, 1.0) + 1.0; }

double case3_epsilon(const SpeedProfile& p, double nu) {
  if (!(nu > 0.0)) fail(ErrorCode::invalid_argument, "Case 3 epsilon needs nu > 0");
  const double l = p.smoothness;
  return std::min(0.999, std::pow(nu, -l / (l + 2.0)));
}

QuasiEnergyReport quasi_energy_bound(const SpeedProfile& p, double nu, double epsilon, const ModeTrajectory& traj) {
  if (p.case_tag != 3) fail(ErrorCode::invalid_argument, "quasi-symmetriser estimates need a Case 3 profile");
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail(ErrorCode::invalid_argument, "epsilon must lie in (0, 1)");
  QuasiEnergyReport r;
  r.epsilon = epsilon;
  r.C2 = quasi_symmetriser_constant(p);
  r.sigma = 1.0 + 0.5 * p.smoothness;
  r.exponent = std::pow(epsilon, -2.0 / p.smoothness) + epsilon * nu;
  const double e2 = epsilon * epsilon;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Vec2c& V = traj.V[i];
    const double e = (2.0 * p.a(traj.times[i]) + 2.0 * e2) * std::norm(V(0)) + 2.0 * std::norm(V(1));
    const double v2 = V.squaredNorm();
    if (e < e2 * v2 / r.C2 * (1.0 - 1e-12) || e > r.C2 * v2 * (1.0 + 1e-12)) r.sandwich_holds = false;
    r.energy.push_back(e);
  }
  if (!r.energy.empty() && r.energy.front() > 0.0) {
    const double e0 = r.energy.front();
    double mx = e0;
    for (double e : r.energy) mx = std::max(mx, e);
    r.log_growth = std::log(mx / e0);
    r.fitted_c = r.log_growth / r.exponent;
  }
  (void)nu;
  return r;
}

double transformed_epsilon(const SpeedProfile& p, double nu) {
  if (!(nu >= 1.0)) fail(ErrorCode::invalid_argument, "the transformed evolution needs nu >= 1");
  if (p.case_tag == 4) return std::pow(nu, -1.0 / (1.0 + internal_alpha(p)));
  return 1.0 / nu;
}

TransformedReport transformed_evolution(const SpeedProfile& p, const MollifiedRoots& roots, double nu, double s,
                                        double kappa, const Vec2c& V0, double dt, int store_every) {
  if (!(s >= 1.0)) fail(ErrorCode::invalid_argument, "Gevrey index s must lie in [1, inf)");
  if (!(nu >= 1.0)) fail(ErrorCode::invalid_argument, "the transformed evolution needs nu >= 1");
  if (!(kappa > 0.0)) fail(ErrorCode::invalid_argument, "kappa must be positive");
  if (V0.norm() == 0.0) fail(ErrorCode::invalid_argument, "V(0) must be nonzero");
  check_guard(p, nu, dt);
  store_every = std::max(1, store_every);
  const double T = p.T;
  const int n = steps_for(T, dt);
  const double h = T / n;
  const double damp = kappa * std::pow(nu, 1.0 / s);

  struct Frame {
    Mat2c M;       // W' = M W
    Mat2c H;
    double det;
  };
  TransformedReport r;
  r.nu = nu;
  r.s = s;
  r.kappa = kappa;
  r.epsilon = roots.epsilon();
  r.min_det = INFINITY;
  auto frame = [&](double t, bool record) {
    const RootValues rv = roots.eval(t);
    Mat2c H, dH;
    H << 1.0, 1.0, rv.lambda1, rv.lambda2;
    dH << 0.0, 0.0, rv.dlambda1, rv.dlambda2;
    const double det = rv.lambda2 - rv.lambda1;
    const double ddet = rv.dlambda2 - rv.dlambda1;
    Mat2c Hinv;
    Hinv << rv.lambda2, -1.0, -rv.lambda1, 1.0;
    Hinv /= det;
    const Mat2c B = Hinv * dH;
    const Mat2c C = Hinv * system_matrix(p.a(t)).cast<Complex>() * H;
    if (record) {
      r.b1 = std::max(r.b1, std::abs(ddet / det));
      r.b2 = std::max(r.b2, op_norm(B));
      r.b3 = std::max(r.b3, op_norm(C - C.adjoint()));
      r.min_det = std::min(r.min_det, det);
    }
    const Mat2c M = (-damp + ddet / det) * Mat2c::Identity() - B + kI * nu * C;
    return Frame{M, H, det};
  };

  Frame f0 = frame(0.0, true);
  if (!(f0.det > 0.0)) fail(ErrorCode::domain, "det H must be positive");
  Vec2c W = f0.det * f0.H.inverse() * V0;
  double log_scale = std::log(W.norm());
  W /= W.norm();
  const double log_v0 = std::log(V0.norm());
  auto observe = [&](double t, const Frame& f, bool keep) {
    const double dn = 2.0 * (W.adjoint() * f.M * W)(0).real();  // |W| = 1
    r.max_dnorm_ratio = std::max(r.max_dnorm_ratio, dn);
    if (dn > 1e-12 * std::max(1.0, damp)) r.monotone = false;
    const double log_damped = log_scale + std::log((f.H * W).norm() / f.det) - log_v0;
    r.max_log_damped_ratio = std::max(r.max_log_damped_ratio, log_damped);
    r.max_log_v_ratio = std::max(r.max_log_v_ratio, log_damped + damp * t);
    if (keep) {
      r.times.push_back(t);
      r.W.push_back(W);
      r.dnorm.push_back(dn);
      r.log_scale.push_back(log_scale);
    }
  };
  r.max_dnorm_ratio = -INFINITY;
  r.max_log_damped_ratio = -INFINITY;
  r.max_log_v_ratio = -INFINITY;
  observe(0.0, f0, true);
  Frame cur = f0;
  for (int i = 1; i <= n; ++i) {
    const double t = (i - 1) * h;
    const Frame mid = frame(t + 0.5 * h, false);
    const Frame end = frame(t + h, true);
    const Vec2c k1 = cur.M * W;
    const Vec2c k2 = mid.M * (W + 0.5 * h * k1);
    const Vec2c k3 = mid.M * (W + 0.5 * h * k2);
    const Vec2c k4 = end.M * (W + h * k3);
    W += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double nrm = W.norm();
    log_scale += std::log(nrm);
    W /= nrm;
    observe(t + h, end, i % store_every == 0 || i == n);
    cur = end;
  }
  return r;
}

BoundConstants fit_bound_constants(const SpeedProfile& p, const std::vector<TransformedReport>& reports) {
  const double al = internal_alpha(p);
  const bool case4 = p.case_tag == 4;
  BoundConstants c;
  for (const auto& r : reports) {
    const double e = r.epsilon;
    const double e12 = case4 ? std::pow(e, -1.0) : std::pow(e, al - 1.0);
    c.c1 = std::max(c.c1, r.b1 / e12);
    c.c2 = std::max(c.c2, r.b2 / e12);
    c.c3 = std::max(c.c3, r.b3 / std::pow(e, al));
  }
  c.rate = case4 ? 1.0 / (1.0 + al) : 1.0 - al;
  return c;
}

double monotonicity_threshold(const BoundConstants& c, double s, double kappa) {
  const double gap = 1.0 / s - c.rate;
  if (gap <= 0.0) return INFINITY;
  const double ratio = (2.0 * c.c1 + 2.0 * c.c2 + c.c3) / (2.0 * kappa);
  return std::max(1.0, std::pow(ratio, 1.0 / gap));
}

void write_trajectory_csv(std::ostream& out, const ModeTrajectory& traj, const SpeedProfile& p) {
  out << "t,re_V1,im_V1,re_V2,im_V2,E\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Vec2c& V = traj.V[i];
    const double e = 2.0 * p.a(traj.times[i]) * std::norm(V(0)) + 2.0 * std::norm(V(1));
    out << format_double(traj.times[i]) << ',' << format_double(V(0).real()) << ',' << format_double(V(0).imag())
        << ',' << format_double(V(1).real()) << ',' << format_double(V(1).imag()) << ',' << format_double(e)
        << '\n';
  }
}

}  // namespace liewave
