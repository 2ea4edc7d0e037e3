#include "liewave/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "liewave/error.hpp"
#include "liewave/io.hpp"
#include "liewave/numeric.hpp"

namespace liewave {

namespace {

constexpr Complex kI(0.0, 1.0);

void check_problem(const CauchyProblem& pr) {
  if (!(pr.T > 0.0)) fail(ErrorCode::invalid_argument, "T must be positive");
  if (pr.speed.T + 1e-12 < pr.T) fail(ErrorCode::invalid_argument, "speed profile horizon is shorter than T");
  for (const FourierCoefficients* c : {&pr.u0, &pr.u1}) {
    for (const auto& [rep, block] : c->blocks()) {
      (void)block;
      if (rep.group != pr.op.band.group || !pr.op.nu_squared.count(rep))
        fail(ErrorCode::invalid_argument,
             "data coefficient " + rep.label() + " lies outside the band of operator '" + pr.op.name + "'");
    }
  }
}

double op_norm_sq(const Mat2c& m) {
  Eigen::JacobiSVD<Mat2c> svd(m);
  const double s = svd.singularValues()(0);
  return s * s;
}

}  // namespace

double max_nu(const DiagonalSymbol& sym) {
  double best = 0.0;
  for (const auto& [rep, nu2] : sym.nu_squared)
    for (double v : nu2) best = std::max(best, std::sqrt(std::max(0.0, v)));
  return best;
}

SolutionField solve(const CauchyProblem& problem, const SolveOptions& opt) {
  check_problem(problem);
  if (opt.snapshots < 2) fail(ErrorCode::invalid_argument, "at least two snapshots are needed");
  const double numax = max_nu(problem.op);
  const double limit = max_stable_dt(problem.speed, numax);
  if (opt.dt > limit)
    fail(ErrorCode::stability, "dt = " + format_double(opt.dt) + " violates the stability guard at nu = " +
                                   format_double(numax) + "; use dt <= " + format_double(limit));

  SolutionField sol;
  for (int k = 0; k < opt.snapshots; ++k) sol.times.push_back(problem.T * k / (opt.snapshots - 1));

  std::set<double> distinct;
  for (const auto& [rep, nu2] : problem.op.nu_squared)
    for (double v : nu2)
      if (v > 0.0) distinct.insert(v);
  const std::vector<double> keys(distinct.begin(), distinct.end());
  std::vector<std::vector<Mat2c>> props(keys.size());
  parallel_for(keys.size(), opt.workers, [&](std::size_t i) {
    props[i] = mode_propagators(problem.speed, std::sqrt(keys[i]), sol.times, opt.dt);
  });
  for (std::size_t i = 0; i < keys.size(); ++i) sol.propagators.emplace(keys[i], std::move(props[i]));

  std::set<RepIndex> support;
  for (const auto& [rep, b] : problem.u0.blocks()) support.insert(rep);
  for (const auto& [rep, b] : problem.u1.blocks()) support.insert(rep);

  for (std::size_t k = 0; k < sol.times.size(); ++k) {
    const double t = sol.times[k];
    FourierCoefficients u(problem.op.band), ut(problem.op.band);
    for (const RepIndex& rep : support) {
      const int d = rep.dim();
      const CMatrix* a = problem.u0.find(rep);
      const CMatrix* b = problem.u1.find(rep);
      const CMatrix zero = CMatrix::Zero(d, d);
      const CMatrix& U0 = a ? *a : zero;
      const CMatrix& U1 = b ? *b : zero;
      CMatrix U(d, d), Ut(d, d);
      const auto& nu2 = problem.op.nu2(rep);
      for (int j = 0; j < d; ++j) {
        const double v2 = nu2[static_cast<std::size_t>(j)];
        if (v2 <= 0.0) {
          U.row(j) = U0.row(j) + t * U1.row(j);
          Ut.row(j) = U1.row(j);
          continue;
        }
        const double nu = std::sqrt(v2);
        const Mat2c& phi = sol.propagators.at(v2)[k];
        for (int c = 0; c < d; ++c) {
          const Vec2c V = phi * Vec2c(kI * nu * U0(j, c), U1(j, c));
          U(j, c) = V(0) / (kI * nu);
          Ut(j, c) = V(1);
        }
      }
      u.set(rep, std::move(U));
      ut.set(rep, std::move(Ut));
    }
    sol.u.push_back(std::move(u));
    sol.ut.push_back(std::move(ut));
  }
  return sol;
}

RegularityReport regularity_report(const SolutionField& sol, const CauchyProblem& problem, double s, int r) {
  RegularityReport rep;
  rep.s = s;
  rep.r = r > 0 ? r : problem.op.hormander_order;
  rep.times = sol.times;
  const DiagonalSymbol& sym = problem.op;
  const double rr = rep.r;

  struct Sums {
    CompensatedSum theorem, energy, sob, sob_rhs;
  };
  auto accumulate = [&](const FourierCoefficients& u, const FourierCoefficients& ut, Sums& out) {
    std::set<RepIndex> reps;
    for (const auto& [x, b] : u.blocks()) reps.insert(x);
    for (const auto& [x, b] : ut.blocks()) reps.insert(x);
    for (const RepIndex& x : reps) {
      const CMatrix* U = u.find(x);
      const CMatrix* Ut = ut.find(x);
      const auto& nu2 = sym.nu2(x);
      const double jap = x.jap();
      const double d = x.dim();
      for (int j = 0; j < x.dim(); ++j) {
        const double v2 = nu2[static_cast<std::size_t>(j)];
        if (v2 <= 0.0) continue;
        const double mu = U ? U->row(j).squaredNorm() : 0.0;
        const double mt = Ut ? Ut->row(j).squaredNorm() : 0.0;
        out.theorem.add(d * (std::pow(1.0 + v2, 1.0 + s) * mu + std::pow(1.0 + v2, s) * mt));
        out.energy.add(d * std::pow(1.0 + v2, s) * (v2 * mu + mt));
        out.sob.add(d * (std::pow(jap, 2.0 * (1.0 + s) / rr) * mu + std::pow(jap, 2.0 * s / rr) * mt));
        out.sob_rhs.add(d * (std::pow(jap, 2.0 * (1.0 + s)) * mu + std::pow(jap, 2.0 * s) * mt));
      }
    }
  };
  Sums data;
  accumulate(problem.u0, problem.u1, data);
  rep.rhs_theorem = data.theorem.value();
  rep.rhs_energy = data.energy.value();
  rep.rhs_sob = data.sob_rhs.value();
  for (std::size_t k = 0; k < sol.times.size(); ++k) {
    Sums now;
    accumulate(sol.u[k], sol.ut[k], now);
    rep.lhs_theorem.push_back(now.theorem.value());
    rep.lhs_energy.push_back(now.energy.value());
    rep.lhs_sob.push_back(now.sob.value());
    if (rep.rhs_theorem > 0) rep.C_theorem = std::max(rep.C_theorem, now.theorem.value() / rep.rhs_theorem);
    if (rep.rhs_energy > 0) rep.C_energy = std::max(rep.C_energy, now.energy.value() / rep.rhs_energy);
    if (rep.rhs_sob > 0) rep.C_sob = std::max(rep.C_sob, now.sob.value() / rep.rhs_sob);
  }

  // Worst case over all data: weighted operator norms of each mode propagator.
  for (const auto& [x, nu2] : sym.nu_squared) {
    const double jap = x.jap();
    for (double v2 : nu2) {
      if (v2 <= 0.0) continue;
      auto it = sol.propagators.find(v2);
      if (it == sol.propagators.end()) continue;
      const double nu = std::sqrt(v2);
      Mat2c Dt = Mat2c::Zero(), Ds_l = Mat2c::Zero(), Ds_r = Mat2c::Zero();
      Dt(0, 0) = std::pow(1.0 + v2, 0.5 * (1.0 + s)) / (kI * nu);
      Dt(1, 1) = std::pow(1.0 + v2, 0.5 * s);
      Ds_l(0, 0) = std::pow(jap, (1.0 + s) / rr) / (kI * nu);
      Ds_l(1, 1) = std::pow(jap, s / rr);
      Ds_r(0, 0) = std::pow(jap, 1.0 + s) / (kI * nu);
      Ds_r(1, 1) = std::pow(jap, s);
      const Mat2c Dt_inv = Dt.inverse(), Ds_r_inv = Ds_r.inverse();
      for (const Mat2c& phi : it->second) {
        rep.C_sup_theorem = std::max(rep.C_sup_theorem, op_norm_sq(Dt * phi * Dt_inv));
        rep.C_sup_energy = std::max(rep.C_sup_energy, op_norm_sq(phi));
        rep.C_sup_sob = std::max(rep.C_sup_sob, op_norm_sq(Ds_l * phi * Ds_r_inv));
      }
    }
  }
  return rep;
}

std::pair<double, double> gevrey_interval(const SpeedProfile& p) {
  switch (p.case_tag) {
    case 1:
      return {1.0, INFINITY};
    case 2:
      return {1.0, 1.0 + p.alpha / (1.0 - p.alpha)};
    case 3:
      return {1.0, 1.0 + 0.5 * p.smoothness};
    case 4:
      return {1.0, 1.0 + 0.5 * p.alpha};
    default:
      fail(ErrorCode::invalid_argument, "unknown case tag");
  }
}

FourierCoefficients random_coefficients(const Band& band, std::uint64_t seed,
                                        const std::function<double(const RepIndex&)>& decay) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  FourierCoefficients c(band);
  for (const auto& rep : band.reps()) {
    const double w = decay(rep);
    CMatrix m(rep.dim(), rep.dim());
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j) {
        const double re = normal(rng);
        const double im = normal(rng);
        m(i, j) = w * Complex(re, im);
      }
    c.set(rep, std::move(m));
  }
  return c;
}

GevreyExperimentReport gevrey_experiment(const SpeedProfile& p, const GevreyExperimentOptions& opt) {
  const auto [lo, hi] = gevrey_interval(p);
  if (!(opt.s >= lo && opt.s < hi))
    fail(ErrorCode::domain, "s = " + format_double(opt.s) + " lies outside the admissible interval [1, " +
                                format_double(hi) + ") for Case " + std::to_string(p.case_tag));
  if (!(opt.data_A > 0.0)) fail(ErrorCode::invalid_argument, "data_A must be positive");
  const Band band = Band::su2(opt.two_lmax);
  CauchyProblem pr;
  if (opt.op == "sublaplacian")
    pr.op = sublaplacian_symbol(band);
  else if (opt.op == "laplacian")
    pr.op = laplacian_symbol(band);
  else
    fail(ErrorCode::config, "unknown operator '" + opt.op + "'");
  pr.speed = p;
  pr.T = p.T;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  pr.u0 = FourierCoefficients(band);
  pr.u1 = FourierCoefficients(band);
  for (const auto& rep : band.reps()) {
    CMatrix a(rep.dim(), rep.dim()), b(rep.dim(), rep.dim());
    for (int j = 0; j < rep.dim(); ++j) {
      const double nu = pr.op.nu(rep, j);
      const double w = std::exp(-opt.data_A * std::pow(nu, 1.0 / opt.s));
      for (int k = 0; k < rep.dim(); ++k) {
        const double t0 = phase(rng);
        const double t1 = phase(rng);
        a(j, k) = std::polar(w, t0);
        b(j, k) = std::polar((1.0 + nu) * w, t1);
      }
    }
    pr.u0.set(rep, std::move(a));
    pr.u1.set(rep, std::move(b));
  }
  SolveOptions so;
  const double numax = max_nu(pr.op);
  so.dt = opt.dt > 0.0 ? opt.dt : std::min(0.01, 0.02 / (numax * std::sqrt(std::max(p.sup_a, 1e-300))));
  so.snapshots = 2;
  so.workers = opt.workers;
  const SolutionField sol = solve(pr, so);

  GevreyExperimentReport out;
  out.case_tag = p.case_tag;
  out.s = opt.s;
  out.interval_hi = hi;
  out.fit_data = fit_gevrey_decay(pr.u0, pr.op);
  out.fit_final = fit_gevrey_decay(sol.u.back(), pr.op);
  out.pass = out.fit_final.s_hat <= 1.1 * opt.s && out.fit_final.A_hat > 0.0;
  return out;
}

}  // namespace liewave
