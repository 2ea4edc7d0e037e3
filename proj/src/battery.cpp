#include "liewave/battery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "liewave/cauchy.hpp"
#include "liewave/error.hpp"
#include "liewave/fourier.hpp"
#include "liewave/mode_solver.hpp"
#include "liewave/numeric.hpp"
#include "liewave/spaces.hpp"
#include "liewave/speeds.hpp"
#include "liewave/symbols.hpp"

namespace liewave {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

void add(BatteryResult& r, std::string name, bool pass, std::string detail) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

double relative_spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo - 1.0;
}

double op_norm_sq(const Mat2c& m) {
  Eigen::JacobiSVD<Mat2c> svd(m);
  return svd.singularValues()(0) * svd.singularValues()(0);
}

std::vector<double> uniform_times(double T, int n) {
  std::vector<double> t;
  for (int k = 0; k < n; ++k) t.push_back(T * k / (n - 1));
  return t;
}

Json gevrey_json(const GevreyExperimentReport& g) {
  auto fit = [](const GevreyFit& f) {
    return Json{{"s_hat", f.s_hat}, {"A_hat", f.A_hat}, {"residual", f.residual},
                {"s_hat_half", f.s_hat_half}, {"drift", f.drift},
                {"shells_used", f.shells_used}, {"gevrey", f.gevrey}, {"diagnostic", f.diagnostic}};
  };
  return Json{{"case", g.case_tag}, {"s", g.s}, {"interval_hi", g.interval_hi},
              {"fit_data", fit(g.fit_data)}, {"fit_final", fit(g.fit_final)}, {"pass", g.pass}};
}

void gevrey_check(BatteryResult& r, const SpeedProfile& p, double s, const BatteryOptions& opt) {
  GevreyExperimentOptions go;
  go.s = s;
  go.seed = opt.seed;
  go.workers = opt.workers;
  const GevreyExperimentReport g = gevrey_experiment(p, go);
  r.data["gevrey"] = gevrey_json(g);
  add(r, "gevrey propagation " + p.key + " s=" + fmt(s), g.pass,
      "s_hat=" + fmt(g.fit_final.s_hat) + " (limit " + fmt(1.1 * s) + "), A_hat=" + fmt(g.fit_final.A_hat));
}

// Monotonicity run over a dyadic nu ladder.
struct Ladder {
  std::vector<TransformedReport> reports;
  BoundConstants constants;
  double nu0 = 0.0;
};

Ladder run_ladder(const SpeedProfile& p, ShiftMode mode, double s, double kappa, int workers) {
  std::vector<double> nus;
  for (double nu = 1.0; nu <= 512.0; nu *= 2.0) nus.push_back(nu);
  Ladder out;
  out.reports.resize(nus.size());
  const Vec2c V0 = Vec2c(1.0, 1.0) / std::sqrt(2.0);
  parallel_for(nus.size(), workers, [&](std::size_t i) {
    const double nu = nus[i];
    const MollifiedRoots roots(p, transformed_epsilon(p, nu), mode);
    const double dt = std::min(0.02, 0.05 / (nu * std::sqrt(p.sup_a)));
    out.reports[i] = transformed_evolution(p, roots, nu, s, kappa, V0, dt, 1 << 30);
  });
  out.constants = fit_bound_constants(p, out.reports);
  out.nu0 = monotonicity_threshold(out.constants, s, kappa);
  return out;
}

Json ladder_json(const Ladder& l) {
  Json rows = Json::array();
  for (const auto& r : l.reports)
    rows.push_back({{"nu", r.nu}, {"epsilon", r.epsilon}, {"b1", r.b1}, {"b2", r.b2}, {"b3", r.b3},
                    {"monotone", r.monotone}, {"max_dnorm_ratio", r.max_dnorm_ratio},
                    {"max_log_v_ratio", r.max_log_v_ratio}});
  return Json{{"c1", l.constants.c1}, {"c2", l.constants.c2}, {"c3", l.constants.c3},
              {"rate", l.constants.rate}, {"nu0", l.nu0}, {"modes", rows}};
}

bool monotone_above(const Ladder& l, int& tested) {
  tested = 0;
  bool ok = true;
  for (const auto& r : l.reports) {
    if (r.nu < l.nu0) continue;
    ++tested;
    ok = ok && r.monotone;
  }
  return ok && tested > 0;
}

BatteryResult case1(const BatteryOptions& opt) {
  BatteryResult r;
  r.title = "Case 1: strictly hyperbolic, Lipschitz a";
  // a = 1: the symmetriser energy is conserved.
  {
    const SpeedProfile p = make_profile("constant");
    const ModeTrajectory tr = integrate_mode(p, 100.0, 1.0, 0.0, 2.0 * std::numbers::pi, 1e-4, 1);
    const SymmetriserEnergyReport e = symmetriser_energy(tr, p);
    r.data["constant_energy_drift"] = e.max_relative_drift;
    add(r, "a=1 energy constant at nu=100", e.max_relative_drift <= 1e-8, "drift=" + fmt(e.max_relative_drift));
  }
  const SpeedProfile p = make_profile("two_plus_sin");
  // Symmetriser chain at nu = 20.
  {
    const ModeTrajectory tr = integrate_mode(p, 20.0, 1.0, 0.0, p.T, 1e-3, 1);
    const SymmetriserEnergyReport e = symmetriser_energy(tr, p);
    r.data["symmetriser"] = {{"max_growth", e.max_growth}, {"gronwall_bound", e.gronwall_bound},
                             {"max_log_derivative", e.max_log_derivative}, {"c_prime", e.c_prime},
                             {"sandwich_holds", e.sandwich_holds}};
    add(r, "symmetriser sandwich and log-derivative", e.sandwich_holds && e.log_derivative_ok,
        "dlogE<=" + fmt(e.max_log_derivative) + ", c'=" + fmt(e.c_prime));
    add(r, "energy growth within Gronwall bound", e.max_growth <= e.gronwall_bound,
        fmt(e.max_growth) + " <= " + fmt(e.gronwall_bound));
  }
  // Per-nu constants, worst case over data.
  {
    const std::vector<double> nus{1.0, 10.0, 100.0, 1000.0};
    std::vector<double> energy(nus.size()), theorem(nus.size());
    parallel_for(nus.size(), opt.workers, [&](std::size_t i) {
      const double nu = nus[i];
      const auto phis = mode_propagators(p, nu, uniform_times(p.T, 4001), std::min(1e-3, 0.02 / nu));
      Mat2c D = Mat2c::Zero();
      D(0, 0) = std::sqrt(1.0 + nu * nu) / Complex(0.0, nu);
      D(1, 1) = 1.0;
      const Mat2c Dinv = D.inverse();
      for (const Mat2c& m : phis) {
        energy[i] = std::max(energy[i], op_norm_sq(m));
        theorem[i] = std::max(theorem[i], op_norm_sq(D * m * Dinv));
      }
    });
    const double spread = relative_spread(energy);
    const double bound = case1_constant_bound(p);
    r.data["nu"] = nus;
    r.data["C_energy_per_nu"] = energy;
    r.data["C_theorem_per_nu"] = theorem;
    r.data["C_energy_spread"] = spread;
    r.data["C1_bound"] = bound;
    add(r, "C flat over nu in {1,10,100,1000}", spread <= 0.05, "spread=" + fmt(spread));
    const double c1 = std::sqrt(*std::max_element(energy.begin(), energy.end()));
    add(r, "C1 within the symmetriser bound", c1 >= 1.0 && c1 <= bound, fmt(c1) + " <= " + fmt(bound));
  }
  // Regularity constants as the band doubles.
  {
    std::vector<RegularityReport> r2, r1;
    for (int L : {8, 16}) {
      CauchyProblem pr;
      pr.op = sublaplacian_symbol(Band::su2(2 * L));
      pr.speed = p;
      pr.T = p.T;
      auto decay = [](const RepIndex& x) { return std::pow(x.jap(), -4.0); };
      pr.u0 = random_coefficients(pr.op.band, opt.seed, decay);
      pr.u1 = random_coefficients(pr.op.band, opt.seed + 1, decay);
      SolveOptions so;
      so.dt = 1e-3;
      so.snapshots = 16;
      so.workers = opt.workers;
      const SolutionField sol = solve(pr, so);
      r2.push_back(regularity_report(sol, pr, 0.0, 2));
      r1.push_back(regularity_report(sol, pr, 0.0, 1));
    }
    const double th = r2[1].C_sup_theorem / r2[0].C_sup_theorem - 1.0;
    const double sob2 = r2[1].C_sup_sob / r2[0].C_sup_sob - 1.0;
    const double sob1 = r1[1].C_sup_sob / r1[0].C_sup_sob - 1.0;
    r.data["regularity"] = {{"L_max", {8, 16}},
                            {"C_theorem", {r2[0].C_theorem, r2[1].C_theorem}},
                            {"C_sup_theorem", {r2[0].C_sup_theorem, r2[1].C_sup_theorem}},
                            {"C_sup_energy", {r2[0].C_sup_energy, r2[1].C_sup_energy}},
                            {"C_sup_sob_r2", {r2[0].C_sup_sob, r2[1].C_sup_sob}},
                            {"C_sup_sob_r1", {r1[0].C_sup_sob, r1[1].C_sup_sob}}};
    add(r, "theorem constant stable as L_max doubles 8->16", std::abs(th) <= 0.05, "change=" + fmt(th));
    add(r, "Sobolev-loss constant stable with r=2", std::abs(sob2) <= 0.05, "change=" + fmt(sob2));
    add(r, "Sobolev-loss constant unstable with r=1 (control)", sob1 > 0.05, "change=" + fmt(sob1));
  }
  return r;
}

BatteryResult case2(const BatteryOptions& opt) {
  BatteryResult r;
  r.title = "Case 2: strictly hyperbolic, Holder a";
  const SpeedProfile p = make_profile("one_plus_holder");
  const double s = 1.8;
  const Ladder l = run_ladder(p, ShiftMode::none, s, 1.0, opt.workers);
  r.data["kappa"] = 1.0;
  r.data["ladder"] = ladder_json(l);
  int tested = 0;
  const bool ok = monotone_above(l, tested);
  add(r, "d|W|^2/dt <= 0 for nu >= nu0", ok,
      "nu0=" + fmt(l.nu0) + ", " + std::to_string(tested) + " modes tested");
  gevrey_check(r, p, s, opt);
  return r;
}

BatteryResult case3(const BatteryOptions& opt) {
  BatteryResult r;
  r.title = "Case 3: weakly hyperbolic, smooth a";
  const std::vector<double> nus{4.0, 16.0, 64.0, 256.0, 1024.0};
  for (const char* key : {"t_squared", "sin4"}) {
    const SpeedProfile p = make_profile(key);
    std::vector<double> L(nus.size());
    std::vector<int> sandwich(nus.size());
    std::vector<double> fitted_c(nus.size());
    parallel_for(nus.size(), opt.workers, [&](std::size_t i) {
      const double nu = nus[i];
      const double dt = std::min(1e-3, 0.05 / (nu * std::sqrt(p.sup_a)));
      L[i] = std::log(sup_propagator_norm(p, nu, p.T, dt));
      const ModeTrajectory tr = integrate_mode(p, nu, 1.0, 0.0, p.T, dt, 1);
      const QuasiEnergyReport q = quasi_energy_bound(p, nu, case3_epsilon(p, nu), tr);
      sandwich[i] = q.sandwich_holds;
      fitted_c[i] = q.fitted_c;
    });
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < nus.size(); ++i) {
      lx.push_back(std::log(nus[i]));
      ly.push_back(std::log(L[i]));
    }
    const double exponent = fit_line(lx, ly).slope;
    const bool all_sandwich = std::all_of(sandwich.begin(), sandwich.end(), [](int v) { return v != 0; });
    r.data[key] = {{"nu", nus}, {"log_sup_amplification", L}, {"exponent", exponent},
                   {"fitted_c", fitted_c}, {"sandwich_holds", all_sandwich}};
    add(r, std::string("growth exponent ") + key + " <= 0.6", exponent <= 0.5 + 0.1, "exponent=" + fmt(exponent));
    add(r, std::string("quasi-symmetriser sandwich ") + key, all_sandwich, "C2=" + fmt(quasi_symmetriser_constant(p)));
  }
  const SpeedProfile p = make_profile("t_squared");
  gevrey_check(r, p, 1.5, opt);
  try {
    GevreyExperimentOptions go;
    go.s = 3.0;
    gevrey_experiment(p, go);
    add(r, "s=3 refused for a in C^2", false, "accepted");
  } catch (const Error& e) {
    add(r, "s=3 refused for a in C^2", e.code() == ErrorCode::domain, e.what());
  }
  return r;
}

BatteryResult case4(const BatteryOptions& opt) {
  BatteryResult r;
  r.title = "Case 4: weakly hyperbolic, Holder a";
  const SpeedProfile p = make_profile("holder_degenerate");
  const double s = 1.2;
  const Ladder probe = run_ladder(p, ShiftMode::alpha_shift, s, 1.0, opt.workers);
  const BoundConstants& c = probe.constants;
  // Smallest kappa that brings the threshold down to nu0 = 8.
  const double kappa = 0.5 * (2.0 * c.c1 + 2.0 * c.c2 + c.c3) / std::pow(8.0, 1.0 / s - c.rate);
  const Ladder l = run_ladder(p, ShiftMode::alpha_shift, s, kappa, opt.workers);
  r.data["probe"] = ladder_json(probe);
  r.data["kappa"] = kappa;
  r.data["ladder"] = ladder_json(l);
  const double a_int = internal_alpha(p);
  add(r, "rate gamma = 1/(1+alpha_int)", std::abs(l.constants.rate - 1.0 / (1.0 + a_int)) < 1e-12,
      "rate=" + fmt(l.constants.rate) + ", alpha_int=" + fmt(a_int));
  int tested = 0;
  const bool ok = monotone_above(l, tested);
  add(r, "d|W|^2/dt <= 0 for nu >= nu0", ok,
      "kappa=" + fmt(kappa) + ", nu0=" + fmt(l.nu0) + ", " + std::to_string(tested) + " modes tested");
  // |V| <= c' nu^{a/(1+a)} e^{kappa T nu^{1/s}} |V(0)|: fit c' on the lower
  // half of the ladder, check the upper half.
  const double q = a_int / (1.0 + a_int);
  std::vector<double> logc;
  for (const auto& t : l.reports)
    logc.push_back(t.max_log_v_ratio - q * std::log(t.nu) - kappa * p.T * std::pow(t.nu, 1.0 / s));
  const std::size_t half = logc.size() / 2;
  const double fitted = *std::max_element(logc.begin(), logc.begin() + static_cast<long>(half));
  const double upper = *std::max_element(logc.begin() + static_cast<long>(half), logc.end());
  r.data["log_c_prime"] = fitted;
  r.data["log_c_prime_upper"] = upper;
  add(r, "amplitude bound with fitted c'", upper <= fitted,
      "log c'=" + fmt(fitted) + ", upper-half max=" + fmt(upper));
  gevrey_check(r, p, s, opt);
  return r;
}

}  // namespace

bool BatteryResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json battery_to_json(const BatteryResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"title", r.title}, {"pass", r.pass()}, {"checks", checks}, {"data", r.data}};
}

BatteryResult symbol_suite(const BatteryOptions& opt) {
  Timer timer;
  BatteryResult r;
  r.title = "Sub-Laplacian symbol oracle";
  const OracleCheck c = verify_sublaplacian_symbol(Band::su2(10), 4, opt.seed);
  r.data = {{"max_deviation", c.max_deviation}, {"max_off_diagonal", c.max_off_diagonal},
            {"max_variation", c.max_variation}, {"reps_checked", c.reps_checked}};
  add(r, "diagonal entries equal ell(ell+1) - mu^2, ell <= 5", c.max_deviation <= 1e-8,
      "max deviation=" + fmt(c.max_deviation));
  add(r, "off-diagonal entries vanish", c.max_off_diagonal <= 1e-8, "max=" + fmt(c.max_off_diagonal));
  r.seconds = timer.seconds();
  return r;
}

BatteryResult plancherel_suite(const BatteryOptions& opt) {
  Timer timer;
  BatteryResult r;
  r.title = "Plancherel and round trip";
  const Band band = Band::su2(16);
  const auto grid = std::make_shared<const QuadratureGrid>(haar_quadrature(band));
  double worst_entry = 0.0, worst_rel = 0.0;
  for (int i = 0; i < 50; ++i) {
    const FourierCoefficients f =
        random_coefficients(band, opt.seed + static_cast<std::uint64_t>(i), [](const RepIndex&) { return 1.0; });
    const FunctionSamples x = synthesize(f, grid);
    const FourierCoefficients g = forward_transform(x, band, opt.workers);
    worst_entry = std::max(worst_entry, max_abs_difference(f, g));
    const double pn = plancherel_norm(f);
    worst_rel = std::max(worst_rel, std::abs(quadrature_l2_norm(x) - pn) / pn);
  }
  r.data = {{"trials", 50}, {"L_max", 8}, {"max_entry_error", worst_entry}, {"max_relative_norm_gap", worst_rel}};
  add(r, "inversion error per coefficient <= 1e-10", worst_entry <= 1e-10, "max=" + fmt(worst_entry));
  add(r, "quadrature L2 equals Plancherel norm", worst_rel <= 1e-8, "max rel=" + fmt(worst_rel));
  r.seconds = timer.seconds();
  return r;
}

BatteryResult hormander_suite(const BatteryOptions&) {
  Timer timer;
  BatteryResult r;
  r.title = "Hormander eigenvalue bounds";
  const DiagonalSymbol sub = sublaplacian_symbol(Band::su2(100));
  const HormanderReport h2 = check_hormander_bounds(sub, 2);
  const HormanderReport h1 = check_hormander_bounds(sub, 1);
  const HormanderReport lap = check_hormander_bounds(laplacian_symbol(Band::su2(100)), 1);
  auto js = [](const HormanderReport& h) {
    return Json{{"r", h.r}, {"c_lower", h.c_lower}, {"c_upper", h.c_upper},
                {"c_lower_half_band", h.c_lower_half_band}, {"pass", h.pass}};
  };
  r.data = {{"sublaplacian_r2", js(h2)}, {"sublaplacian_r1", js(h1)}, {"laplacian_r1", js(lap)}};
  add(r, "r=2 lower bound >= 0.9", h2.c_lower >= 0.9, "c_lower=" + fmt(h2.c_lower));
  add(r, "r=2 upper bound <= sqrt 2", h2.c_upper <= std::sqrt(2.0), "c_upper=" + fmt(h2.c_upper));
  add(r, "r=1 on the sub-Laplacian fails (control)", !h1.pass && h1.c_lower < 0.9,
      "c_lower=" + fmt(h1.c_lower) + ", half band " + fmt(h1.c_lower_half_band));
  add(r, "Laplacian passes with r=1", lap.pass, "c_lower=" + fmt(lap.c_lower) + ", c_upper=" + fmt(lap.c_upper));
  r.seconds = timer.seconds();
  return r;
}

BatteryResult embedding_suite(const BatteryOptions& opt) {
  Timer timer;
  BatteryResult r;
  r.title = "Sobolev embeddings";
  const double s = 2.0;
  const DiagonalSymbol sym = sublaplacian_symbol(Band::su2(64));
  std::vector<FourierCoefficients> batch(100);
  parallel_for(batch.size(), opt.workers, [&](std::size_t i) {
    batch[i] = random_coefficients(sym.band, opt.seed + i, [](const RepIndex& x) { return std::pow(x.jap(), -6.0); });
  });
  const EmbeddingReport e = embedding_verify(batch, sym, s, 2);
  r.data["random"] = {{"s", s}, {"r", 2}, {"C1", e.C1_emp}, {"C2", e.C2_emp},
                      {"C1_half", e.C1_half}, {"C2_half", e.C2_half}};
  add(r, "C1, C2 stable from L_max=16 to 32", e.pass,
      "C1 " + fmt(e.C1_half) + "->" + fmt(e.C1_emp) + ", C2 " + fmt(e.C2_half) + "->" + fmt(e.C2_emp));
  // Rows mu = +-ell carry nu^2 = ell, the smallest eigenvalue of each shell.
  const auto rows = extreme_row_ratios(sym, s, 2);
  double worst = 0.0, lowest = INFINITY;
  Json table = Json::array();
  for (const auto& [two_ell, ratio] : rows) {
    const double ell = 0.5 * two_ell;
    const double expect = std::pow(1.0 + ell, 0.5 * s) / std::pow(1.0 + ell * (ell + 1.0), 0.25 * s);
    worst = std::max(worst, std::abs(ratio / expect - 1.0));
    lowest = std::min(lowest, ratio);
    table.push_back({two_ell, ratio});
  }
  r.data["extreme_rows"] = table;
  add(r, "mu=+-ell rows follow nu_min^2 = ell", worst <= 1e-12 && lowest > 0.0,
      "max rel dev=" + fmt(worst) + ", min ratio=" + fmt(lowest));
  r.seconds = timer.seconds();
  return r;
}

BatteryResult torus_suite(const BatteryOptions& opt) {
  Timer timer;
  BatteryResult r;
  r.title = "Torus cross-check";
  CauchyProblem pr;
  pr.op = laplacian_symbol(Band::torus(32, 1));
  pr.speed = make_profile("constant");
  pr.T = pr.speed.T;
  pr.u0 = FourierCoefficients::zeros(pr.op.band);
  for (const auto& rep : pr.op.band.reps()) pr.u0.at(rep)(0, 0) = 1.0;
  pr.u1 = FourierCoefficients::zeros(pr.op.band);
  SolveOptions so;
  so.dt = 1e-4;
  so.snapshots = 9;
  so.workers = opt.workers;
  const SolutionField sol = solve(pr, so);
  double err = 0.0;
  for (std::size_t n = 0; n < sol.times.size(); ++n)
    for (const auto& [rep, block] : sol.u[n].blocks())
      err = std::max(err, std::abs(block(0, 0) - std::cos(std::abs(rep.k[0]) * sol.times[n])));
  r.data = {{"kmax", 32}, {"T", pr.T}, {"max_error", err}};
  add(r, "u(t) = cos(kt) e^{ikx} for |k| <= 32", err <= 1e-8, "max error=" + fmt(err));
  r.seconds = timer.seconds();
  return r;
}

BatteryResult verify_symbol_report(const std::string& op, int two_lmax, int r, std::uint64_t seed) {
  Timer timer;
  BatteryResult res;
  if (two_lmax < 0) fail(ErrorCode::invalid_argument, "two_lmax must be >= 0");
  const Band band = Band::su2(two_lmax);
  DiagonalSymbol sym;
  double deviation = 0.0, off = 0.0;
  if (op == "sublaplacian") {
    sym = sublaplacian_symbol(band);
    const OracleCheck c = verify_sublaplacian_symbol(band, 4, seed);
    deviation = c.max_deviation;
    off = c.max_off_diagonal;
  } else if (op == "laplacian") {
    sym = laplacian_symbol(band);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> polar(0.2, std::numbers::pi - 0.2);
    for (const auto& rep : band.reps()) {
      for (int n = 0; n < 4; ++n) {
        const double phi = angle(rng), theta = polar(rng), psi = angle(rng);
        const CMatrix s = extract_symbol(laplacian_euler, rep, canonical_euler(phi, theta, psi));
        for (int i = 0; i < rep.dim(); ++i)
          for (int j = 0; j < rep.dim(); ++j) {
            const double expect = i == j ? -rep.laplacian_eigenvalue() : 0.0;
            const double d = std::abs(s(i, j) - expect);
            if (i == j)
              deviation = std::max(deviation, d);
            else
              off = std::max(off, d);
          }
      }
    }
  } else {
    fail(ErrorCode::invalid_argument, "operator must be 'laplacian' or 'sublaplacian'");
  }
  res.title = "Symbol check: " + op;
  const HormanderReport h = check_hormander_bounds(sym, r);
  res.data = {{"operator", op},
              {"L_max", 0.5 * two_lmax},
              {"oracle", {{"max_deviation", deviation}, {"max_off_diagonal", off}}},
              {"hormander", {{"r", h.r}, {"c_lower", h.c_lower}, {"c_upper", h.c_upper},
                             {"c_lower_half_band", h.c_lower_half_band}, {"pass", h.pass}}}};
  add(res, "symbol matches the Euler-angle oracle", deviation <= 1e-8 && off <= 1e-8,
      "diag dev=" + fmt(deviation) + ", off-diag=" + fmt(off));
  add(res, "Hormander bounds with r=" + std::to_string(h.r), h.pass,
      "c_lower=" + fmt(h.c_lower) + ", c_upper=" + fmt(h.c_upper) + ", half-band c_lower=" + fmt(h.c_lower_half_band));
  res.seconds = timer.seconds();
  return res;
}

BatteryResult case_battery(int case_tag, const BatteryOptions& opt) {
  Timer timer;
  BatteryResult r;
  switch (case_tag) {
    case 1:
      r = case1(opt);
      break;
    case 2:
      r = case2(opt);
      break;
    case 3:
      r = case3(opt);
      break;
    case 4:
      r = case4(opt);
      break;
    default:
      fail(ErrorCode::invalid_argument, "case must be 1, 2, 3 or 4");
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace liewave
