#include "liewave/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <numbers>
#include <set>
#include <tuple>

#include "liewave/error.hpp"
#include "liewave/spaces.hpp"

namespace liewave {

namespace {

[[noreturn]] void bad(const std::string& ptr, const std::string& msg) {
  fail(ErrorCode::config, (ptr.empty() ? "/" : ptr) + ": " + msg);
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }

void require_object(const Json& j, const std::string& ptr) {
  if (!j.is_object()) bad(ptr, "expected an object");
}

void reject_unknown(const Json& obj, const std::string& ptr, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) bad(child(ptr, key), "unknown field");
  }
}

const Json* field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double number(const Json& obj, const std::string& ptr, const std::string& key, std::optional<double> dflt) {
  const Json* v = field(obj, key);
  if (!v) {
    if (!dflt) bad(child(ptr, key), "required field is missing");
    return *dflt;
  }
  if (!v->is_number()) bad(child(ptr, key), "expected a number");
  const double x = v->get<double>();
  if (!std::isfinite(x)) bad(child(ptr, key), "expected a finite number");
  return x;
}

long long integer(const Json& obj, const std::string& ptr, const std::string& key, std::optional<long long> dflt) {
  const Json* v = field(obj, key);
  if (!v) {
    if (!dflt) bad(child(ptr, key), "required field is missing");
    return *dflt;
  }
  if (!v->is_number_integer()) bad(child(ptr, key), "expected an integer");
  return v->get<long long>();
}

std::string choice(const Json& obj, const std::string& ptr, const std::string& key, std::optional<std::string> dflt,
                   const std::vector<std::string>& allowed) {
  const Json* v = field(obj, key);
  if (!v) {
    if (!dflt) bad(child(ptr, key), "required field is missing");
    return *dflt;
  }
  if (!v->is_string()) bad(child(ptr, key), "expected a string");
  const std::string s = v->get<std::string>();
  for (const auto& a : allowed)
    if (a == s) return s;
  std::string list;
  for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
  bad(child(ptr, key), "'" + s + "' is not one of " + list);
}

Complex complex_pair(const Json& obj, const std::string& ptr, const std::string& key, Complex dflt) {
  const Json* v = field(obj, key);
  if (!v) return dflt;
  if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number())
    bad(child(ptr, key), "expected [re, im]");
  return {(*v)[0].get<double>(), (*v)[1].get<double>()};
}

std::string interval_text(const SpeedProfile& p, double hi) {
  switch (p.case_tag) {
    case 2:
      return "1 <= s < 1 + alpha/(1 - alpha) = " + format_double(hi) + " for Case 2 (alpha = " +
             format_double(p.alpha) + ")";
    case 3:
      return "1 <= s < 1 + ell/2 = " + format_double(hi) + " for Case 3 (a in C^" + std::to_string(p.smoothness) +
             ")";
    default:
      return "1 <= s < 1 + alpha/2 = " + format_double(hi) + " for Case 4 (alpha = " + format_double(p.alpha) +
             ")";
  }
}

Json rep_json(const RepIndex& rep) {
  if (rep.group == GroupKind::su2) return Json{{"two_ell", rep.two_ell}};
  return Json{{"k", rep.k}};
}

}  // namespace

ExperimentConfig parse_config(const Json& j, std::optional<std::uint64_t> seed_override) {
  require_object(j, "");
  reject_unknown(j, "", {"group", "L_max", "torus_dim", "integer_only", "operator", "profile", "data", "T", "dt",
                         "snapshots", "seed", "s"});
  ExperimentConfig cfg;
  Json norm = Json::object();

  const std::string group = choice(j, "", "group", std::nullopt, {"su2", "torus"});
  const double L = number(j, "", "L_max", std::nullopt);
  Band band;
  if (group == "su2") {
    if (!(L >= 0.0) || std::abs(2.0 * L - std::round(2.0 * L)) > 1e-12 || L > 64)
      bad("/L_max", "expected a spin in {0, 1/2, 1, ...} up to 64");
    bool integer_only = false;
    if (const Json* v = field(j, "integer_only")) {
      if (!v->is_boolean()) bad("/integer_only", "expected a boolean");
      integer_only = v->get<bool>();
    }
    band = Band::su2(static_cast<int>(std::lround(2.0 * L)), integer_only);
    norm["group"] = group;
    norm["L_max"] = L;
    norm["integer_only"] = integer_only;
  } else {
    if (!(L >= 0.0) || L != std::floor(L) || L > 256) bad("/L_max", "expected an integer kmax in [0, 256]");
    const long long dim = integer(j, "", "torus_dim", 1);
    if (dim < 1 || dim > 3) bad("/torus_dim", "expected 1, 2 or 3");
    band = Band::torus(static_cast<int>(L), static_cast<int>(dim));
    norm["group"] = group;
    norm["L_max"] = static_cast<int>(L);
    norm["torus_dim"] = dim;
  }

  const std::string op =
      choice(j, "", "operator", group == "su2" ? "sublaplacian" : "laplacian", {"laplacian", "sublaplacian"});
  if (op == "sublaplacian" && group != "su2") bad("/operator", "the sub-Laplacian is defined on su2 only");
  cfg.problem.op = op == "sublaplacian" ? sublaplacian_symbol(band) : laplacian_symbol(band);
  norm["operator"] = op;

  const Json* prof = field(j, "profile");
  if (!prof) bad("/profile", "required field is missing");
  require_object(*prof, "/profile");
  reject_unknown(*prof, "/profile", {"key", "alpha", "T", "shift", "smoothness"});
  const std::string key = choice(*prof, "/profile", "key", std::nullopt, profile_keys());
  ProfileParams pp;
  pp.alpha = number(*prof, "/profile", "alpha", pp.alpha);
  pp.T = number(*prof, "/profile", "T", 0.0);
  if (pp.T < 0.0) bad("/profile/T", "must be positive (or 0 for the profile default)");
  pp.shift = number(*prof, "/profile", "shift", 0.0);
  const long long sm = integer(*prof, "/profile", "smoothness", 2);
  if (sm < 2 || sm > 64) bad("/profile/smoothness", "expected an integer ell >= 2");
  pp.smoothness = static_cast<int>(sm);
  try {
    cfg.problem.speed = make_profile(key, pp);
    validate_profile(cfg.problem.speed);
  } catch (const Error& e) {
    bad("/profile", e.what());
  }
  const SpeedProfile& p = cfg.problem.speed;
  cfg.profile_params = pp;
  norm["profile"] = {{"key", key}, {"alpha", pp.alpha}, {"T", p.T}, {"shift", pp.shift}, {"smoothness", pp.smoothness}};

  cfg.problem.T = number(j, "", "T", p.T);
  if (!(cfg.problem.T > 0.0) || cfg.problem.T > p.T + 1e-12)
    bad("/T", "must lie in (0, " + format_double(p.T) + "], the profile horizon");
  norm["T"] = cfg.problem.T;

  cfg.s = number(j, "", "s", p.case_tag == 1 ? 0.0 : 1.0);
  if (p.case_tag == 1) {
    if (cfg.s < 0.0) bad("/s", "Sobolev index must be >= 0");
  } else {
    const auto [lo, hi] = gevrey_interval(p);
    if (!(cfg.s >= lo && cfg.s < hi))
      bad("/s", "s = " + format_double(cfg.s) + " lies outside the admissible interval " + interval_text(p, hi));
  }
  norm["s"] = cfg.s;

  cfg.dt = number(j, "", "dt", 1e-3);
  if (!(cfg.dt > 0.0)) bad("/dt", "must be positive");
  const double numax = max_nu(cfg.problem.op);
  const double limit = max_stable_dt(p, numax);
  if (cfg.dt > limit)
    bad("/dt", "violates dt * nu * sqrt(sup a) <= 0.5 at nu = " + format_double(numax) + "; use dt <= " +
                   format_double(limit));
  norm["dt"] = cfg.dt;

  const long long snaps = integer(j, "", "snapshots", 16);
  if (snaps < 2 || snaps > 100000) bad("/snapshots", "expected an integer >= 2");
  cfg.snapshots = static_cast<int>(snaps);
  norm["snapshots"] = snaps;

  const long long seed = integer(j, "", "seed", 0);
  if (seed < 0) bad("/seed", "expected a nonnegative integer");
  cfg.seed = seed_override ? *seed_override : static_cast<std::uint64_t>(seed);
  norm["seed"] = cfg.seed;

  // Initial data.
  const Json* data = field(j, "data");
  if (!data) bad("/data", "required field is missing");
  require_object(*data, "/data");
  const std::string kind = choice(*data, "/data", "kind", std::nullopt, {"mode", "random", "gevrey", "coefficients"});
  Json dnorm = {{"kind", kind}};
  auto& pr = cfg.problem;
  pr.u0 = FourierCoefficients(band);
  pr.u1 = FourierCoefficients(band);
  if (kind == "mode") {
    reject_unknown(*data, "/data", {"kind", "rep", "row", "col", "u0", "u1"});
    const Json* rj = field(*data, "rep");
    if (!rj) bad("/data/rep", "required field is missing");
    require_object(*rj, "/data/rep");
    RepIndex rep;
    if (group == "su2") {
      reject_unknown(*rj, "/data/rep", {"two_ell"});
      const long long te = integer(*rj, "/data/rep", "two_ell", std::nullopt);
      if (te < 0 || te > 1000) bad("/data/rep/two_ell", "expected a nonnegative integer");
      rep = RepIndex::su2(static_cast<int>(te));
    } else {
      reject_unknown(*rj, "/data/rep", {"k"});
      const Json* k = field(*rj, "k");
      if (!k || !k->is_array() || static_cast<int>(k->size()) != band.torus_dim)
        bad("/data/rep/k", "expected an integer vector of length " + std::to_string(band.torus_dim));
      std::vector<int> kv;
      for (const auto& x : *k) {
        if (!x.is_number_integer()) bad("/data/rep/k", "expected integers");
        kv.push_back(x.get<int>());
      }
      rep = RepIndex::torus(kv);
    }
    if (!band.contains(rep)) bad("/data/rep", rep.label() + " lies outside the band");
    const long long row = integer(*data, "/data", "row", 0), col = integer(*data, "/data", "col", 0);
    if (row < 0 || row >= rep.dim()) bad("/data/row", "out of range for " + rep.label());
    if (col < 0 || col >= rep.dim()) bad("/data/col", "out of range for " + rep.label());
    const Complex a = complex_pair(*data, "/data", "u0", 1.0), b = complex_pair(*data, "/data", "u1", 0.0);
    pr.u0.at(rep)(row, col) = a;
    pr.u1.at(rep)(row, col) = b;
    dnorm["rep"] = rep_json(rep);
    dnorm["row"] = row;
    dnorm["col"] = col;
    dnorm["u0"] = {a.real(), a.imag()};
    dnorm["u1"] = {b.real(), b.imag()};
  } else if (kind == "random") {
    reject_unknown(*data, "/data", {"kind", "decay"});
    const double decay = number(*data, "/data", "decay", 4.0);
    if (decay < 0.0) bad("/data/decay", "must be >= 0");
    auto w = [decay](const RepIndex& x) { return std::pow(x.jap(), -decay); };
    pr.u0 = random_coefficients(band, cfg.seed, w);
    pr.u1 = random_coefficients(band, cfg.seed + 1, w);
    dnorm["decay"] = decay;
  } else if (kind == "gevrey") {
    reject_unknown(*data, "/data", {"kind", "A", "s"});
    const double A = number(*data, "/data", "A", 3.0);
    if (!(A > 0.0)) bad("/data/A", "must be positive");
    const double ds = number(*data, "/data", "s", cfg.s >= 1.0 ? cfg.s : 1.5);
    if (!(ds >= 1.0)) bad("/data/s", "Gevrey order must be >= 1");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (const auto& rep : band.reps()) {
      CMatrix a(rep.dim(), rep.dim()), b(rep.dim(), rep.dim());
      for (int r = 0; r < rep.dim(); ++r) {
        const double nu = pr.op.nu(rep, r);
        const double w = std::exp(-A * std::pow(nu, 1.0 / ds));
        for (int c = 0; c < rep.dim(); ++c) {
          const double t0 = phase(rng);
          const double t1 = phase(rng);
          a(r, c) = std::polar(w, t0);
          b(r, c) = std::polar((1.0 + nu) * w, t1);
        }
      }
      pr.u0.set(rep, std::move(a));
      pr.u1.set(rep, std::move(b));
    }
    dnorm["A"] = A;
    dnorm["s"] = ds;
  } else {
    reject_unknown(*data, "/data", {"kind", "u0", "u1"});
    auto load = [&](const char* key, bool required) {
      const Json* v = field(*data, key);
      if (!v) {
        if (required) bad(std::string("/data/") + key, "required field is missing");
        return FourierCoefficients(band);
      }
      FourierCoefficients c;
      try {
        c = coefficients_from_json(*v, band);
      } catch (const Error& e) {
        const std::string msg = e.what();
        fail(ErrorCode::config, std::string("/data/") + key + (msg.rfind('/', 0) == 0 ? "" : ": ") + msg);
      }
      for (const auto& [rep, blk] : c.blocks()) {
        (void)blk;
        if (!band.contains(rep)) bad(std::string("/data/") + key, rep.label() + " lies outside the band");
      }
      return c;
    };
    pr.u0 = load("u0", true);
    pr.u1 = load("u1", false);
    dnorm["u0"] = coefficients_to_json(pr.u0);
    dnorm["u1"] = coefficients_to_json(pr.u1);
  }
  norm["data"] = dnorm;
  cfg.normalized = std::move(norm);
  return cfg;
}

ExperimentOutputs run_experiment(const ExperimentConfig& cfg, int workers) {
  const CauchyProblem& pr = cfg.problem;
  const std::string hash = sha256_hex(cfg.normalized.dump());
  SolveOptions so;
  so.dt = cfg.dt;
  so.snapshots = cfg.snapshots;
  so.workers = workers;
  const SolutionField sol = solve(pr, so);
  const int case_tag = pr.speed.case_tag;
  const double sob = case_tag == 1 ? cfg.s : 0.0;

  ExperimentOutputs out;
  // Snapshots.
  {
    Json snaps = {{"config_hash", hash}, {"times", sol.times}};
    Json u = Json::array(), ut = Json::array();
    for (std::size_t k = 0; k < sol.times.size(); ++k) {
      u.push_back(coefficients_to_json(sol.u[k]));
      ut.push_back(coefficients_to_json(sol.ut[k]));
    }
    snaps["u"] = std::move(u);
    snaps["ut"] = std::move(ut);
    out.files["snapshots.json"] = dump_json(snaps);
  }
  // Norm table.
  std::vector<GevreyFit> fits;
  {
    std::string csv = csv_row({"t", "HL_u", "HL_ut", "H_u", "H_ut", "gevrey_s_hat", "gevrey_A_hat", "gevrey_residual"});
    for (std::size_t k = 0; k < sol.times.size(); ++k) {
      std::vector<std::string> row{format_double(sol.times[k]),
                                   format_double(sobolev_L_norm(sol.u[k], 1.0 + sob, pr.op)),
                                   format_double(sobolev_L_norm(sol.ut[k], sob, pr.op)),
                                   format_double(classical_sobolev_norm(sol.u[k], 1.0 + sob)),
                                   format_double(classical_sobolev_norm(sol.ut[k], sob))};
      try {
        const GevreyFit f = fit_gevrey_decay(sol.u[k], pr.op);
        fits.push_back(f);
        row.push_back(format_double(f.s_hat));
        row.push_back(format_double(f.A_hat));
        row.push_back(format_double(f.residual));
      } catch (const Error&) {
        row.insert(row.end(), {"nan", "nan", "nan"});
      }
      csv += csv_row(row);
    }
    out.files["norms.csv"] = csv;
  }
  // Amplitudes of the entries carrying data (at most 256).
  {
    std::set<std::tuple<RepIndex, int, int>> entries;
    for (const FourierCoefficients* c : {&pr.u0, &pr.u1})
      for (const auto& [rep, blk] : c->blocks())
        for (int r = 0; r < blk.rows(); ++r)
          for (int q = 0; q < blk.cols(); ++q)
            if (blk(r, q) != Complex(0.0)) entries.emplace(rep, r, q);
    std::string csv = csv_row({"t", "rep", "row", "col", "re_u", "im_u", "re_ut", "im_ut"});
    int count = 0;
    for (const auto& [rep, r, q] : entries) {
      if (++count > 256) break;
      for (std::size_t k = 0; k < sol.times.size(); ++k) {
        const CMatrix* u = sol.u[k].find(rep);
        const CMatrix* ut = sol.ut[k].find(rep);
        const Complex a = u ? (*u)(r, q) : Complex(0.0), b = ut ? (*ut)(r, q) : Complex(0.0);
        csv += csv_row({format_double(sol.times[k]), rep.label(), std::to_string(r), std::to_string(q),
                        format_double(a.real()), format_double(a.imag()), format_double(b.real()),
                        format_double(b.imag())});
      }
    }
    out.files["amplitudes.csv"] = csv;
  }
  // Report.
  Json report = {{"config_hash", hash}, {"case", case_tag}, {"profile", pr.speed.key}, {"s", cfg.s}};
  if (case_tag == 1) {
    const RegularityReport rr = regularity_report(sol, pr, cfg.s);
    report["regularity"] = {{"s", rr.s},
                            {"r", rr.r},
                            {"times", rr.times},
                            {"lhs_theorem", rr.lhs_theorem},
                            {"rhs_theorem", rr.rhs_theorem},
                            {"lhs_energy", rr.lhs_energy},
                            {"rhs_energy", rr.rhs_energy},
                            {"lhs_sobolev", rr.lhs_sob},
                            {"rhs_sobolev", rr.rhs_sob},
                            {"C_theorem", rr.C_theorem},
                            {"C_energy", rr.C_energy},
                            {"C_sobolev", rr.C_sob},
                            {"C_sup_theorem", rr.C_sup_theorem},
                            {"C_sup_energy", rr.C_sup_energy},
                            {"C_sup_sobolev", rr.C_sup_sob}};
  } else {
    const auto [lo, hi] = gevrey_interval(pr.speed);
    Json g = {{"s", cfg.s}, {"interval", {lo, hi}}};
    if (fits.size() == sol.times.size()) {
      const GevreyFit& f0 = fits.front();
      const GevreyFit& f1 = fits.back();
      g["fit_data"] = {{"s_hat", f0.s_hat}, {"A_hat", f0.A_hat}, {"residual", f0.residual},
                       {"s_hat_half", f0.s_hat_half}, {"drift", f0.drift}, {"gevrey", f0.gevrey},
                       {"shells_used", f0.shells_used}, {"diagnostic", f0.diagnostic}};
      g["fit_final"] = {{"s_hat", f1.s_hat}, {"A_hat", f1.A_hat}, {"residual", f1.residual},
                        {"s_hat_half", f1.s_hat_half}, {"drift", f1.drift}, {"gevrey", f1.gevrey},
                        {"shells_used", f1.shells_used}, {"diagnostic", f1.diagnostic}};
      g["pass"] = f1.s_hat <= 1.1 * cfg.s && f1.A_hat > 0.0;
    } else {
      g["fit_final"] = nullptr;
      g["diagnostic"] = "too few nonzero shells for a Gevrey fit";
    }
    report["gevrey"] = g;
  }
  out.files["report.json"] = dump_json(report);
  out.report = report;

  Json files = Json::object();
  for (const auto& [name, content] : out.files) files[name] = sha256_hex(content);
  const Json manifest = {{"version", kVersion},
                         {"config_hash", hash},
                         {"config", cfg.normalized},
                         {"files", files}};
  out.files["manifest.json"] = dump_json(manifest);
  return out;
}

void write_outputs(const ExperimentOutputs& out, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::io, "cannot create '" + dir + "': " + ec.message());
  for (const auto& [name, content] : out.files) write_text_file((std::filesystem::path(dir) / name).string(), content);
}

}  // namespace liewave
