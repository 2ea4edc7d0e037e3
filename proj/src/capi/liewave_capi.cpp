#include "liewave/liewave.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <numbers>
#include <string>

#include "liewave/battery.hpp"
#include "liewave/cauchy.hpp"
#include "liewave/error.hpp"
#include "liewave/experiment.hpp"
#include "liewave/group_harmonics.hpp"
#include "liewave/mode_solver.hpp"
#include "liewave/speeds.hpp"
#include "liewave/symbols.hpp"

struct lw_symbol {
  liewave::DiagonalSymbol sym;
};

struct lw_profile {
  liewave::SpeedProfile profile;
};

namespace {

thread_local std::string g_last_error;

lw_status to_status(liewave::ErrorCode c) {
  switch (c) {
    case liewave::ErrorCode::invalid_argument:
      return LW_INVALID_ARGUMENT;
    case liewave::ErrorCode::domain:
      return LW_DOMAIN;
    case liewave::ErrorCode::stability:
      return LW_STABILITY;
    case liewave::ErrorCode::config:
      return LW_CONFIG;
    case liewave::ErrorCode::io:
      return LW_IO;
    case liewave::ErrorCode::verification:
      return LW_VERIFICATION;
  }
  return LW_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and the thread-local message.
template <class F>
lw_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LW_OK;
  } catch (const liewave::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("/: ") + e.what();
    return LW_CONFIG;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LW_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LW_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LW_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) liewave::fail(liewave::ErrorCode::invalid_argument, std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void hand_out(char** dst, const std::string& s) {
  if (dst) *dst = dup_string(s);
}

}  // namespace

extern "C" {

const char* lw_version(void) { return liewave::kVersion; }

const char* lw_last_error(void) { return g_last_error.c_str(); }

void lw_string_free(char* s) { std::free(s); }

lw_status lw_wigner_matrix(int two_ell, double phi, double theta, double psi, double* out, size_t len) {
  return guarded([&] {
    need(out, "out");
    if (two_ell < 0) liewave::fail(liewave::ErrorCode::invalid_argument, "two_ell must be >= 0");
    const std::size_t d = static_cast<std::size_t>(two_ell) + 1;
    if (len < 2 * d * d) liewave::fail(liewave::ErrorCode::invalid_argument, "output buffer too small");
    // The matrix is smooth at the poles, so theta = 0 and pi are allowed here.
    if (!(theta >= 0.0 && theta <= std::numbers::pi) || !std::isfinite(phi) || !std::isfinite(psi))
      liewave::fail(liewave::ErrorCode::domain, "need finite phi, psi and theta in [0, pi]");
    const liewave::CMatrix m =
        liewave::su2::wigner_matrix(liewave::RepIndex::su2(two_ell), liewave::EulerAngles{phi, theta, psi});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto z = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        out[2 * (i * d + j)] = z.real();
        out[2 * (i * d + j) + 1] = z.imag();
      }
  });
}

lw_status lw_symbol_create_su2(const char* op, int two_lmax, lw_symbol** out) {
  return guarded([&] {
    need(op, "op");
    need(out, "out");
    *out = nullptr;
    if (two_lmax < 0) liewave::fail(liewave::ErrorCode::invalid_argument, "two_lmax must be >= 0");
    const liewave::Band band = liewave::Band::su2(two_lmax);
    const std::string name = op;
    auto* s = new lw_symbol;
    if (name == "laplacian")
      s->sym = liewave::laplacian_symbol(band);
    else if (name == "sublaplacian")
      s->sym = liewave::sublaplacian_symbol(band);
    else {
      delete s;
      liewave::fail(liewave::ErrorCode::invalid_argument, "unknown operator '" + name + "'");
    }
    *out = s;
  });
}

lw_status lw_symbol_create_torus(int kmax, int dim, lw_symbol** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    if (kmax < 0 || dim < 1) liewave::fail(liewave::ErrorCode::invalid_argument, "need kmax >= 0 and dim >= 1");
    auto* s = new lw_symbol;
    s->sym = liewave::laplacian_symbol(liewave::Band::torus(kmax, dim));
    *out = s;
  });
}

void lw_symbol_free(lw_symbol* s) { delete s; }

lw_status lw_symbol_hormander_order(const lw_symbol* s, int* r) {
  return guarded([&] {
    need(s, "symbol");
    need(r, "r");
    *r = s->sym.hormander_order;
  });
}

lw_status lw_symbol_nu_squared(const lw_symbol* s, int two_ell, double* out, size_t len) {
  return guarded([&] {
    need(s, "symbol");
    need(out, "out");
    if (s->sym.band.group != liewave::GroupKind::su2)
      liewave::fail(liewave::ErrorCode::invalid_argument, "symbol is not on SU(2)");
    const auto rep = liewave::RepIndex::su2(two_ell);
    if (!s->sym.band.contains(rep)) liewave::fail(liewave::ErrorCode::invalid_argument, "spin outside the band");
    const auto& v = s->sym.nu2(rep);
    if (len < v.size()) liewave::fail(liewave::ErrorCode::invalid_argument, "output buffer too small");
    std::copy(v.begin(), v.end(), out);
  });
}

lw_status lw_verify_symbol(const char* op, int two_lmax, int r, uint64_t seed, char** report, int* pass) {
  return guarded([&] {
    need(op, "op");
    const liewave::BatteryResult res = liewave::verify_symbol_report(op, two_lmax, r, seed);
    if (pass) *pass = res.pass() ? 1 : 0;
    hand_out(report, liewave::dump_json(liewave::battery_to_json(res)));
  });
}

lw_status lw_profile_create(const char* key, double alpha, double T, double shift, int smoothness,
                            lw_profile** out) {
  return guarded([&] {
    need(key, "key");
    need(out, "out");
    *out = nullptr;
    liewave::ProfileParams pp;
    pp.alpha = alpha;
    pp.T = T > 0.0 ? T : 0.0;
    pp.shift = shift;
    pp.smoothness = smoothness;
    auto p = liewave::make_profile(key, pp);
    liewave::validate_profile(p);
    *out = new lw_profile{std::move(p)};
  });
}

void lw_profile_free(lw_profile* p) { delete p; }

lw_status lw_profile_eval(const lw_profile* p, double t, double* a) {
  return guarded([&] {
    need(p, "profile");
    need(a, "a");
    *a = p->profile(t);
  });
}

lw_status lw_profile_info(const lw_profile* p, int* case_tag, double* T, double* sup_a) {
  return guarded([&] {
    need(p, "profile");
    if (case_tag) *case_tag = p->profile.case_tag;
    if (T) *T = p->profile.T;
    if (sup_a) *sup_a = p->profile.sup_a;
  });
}

lw_status lw_integrate_mode(const lw_profile* p, double nu, const double v0[2], const double v1[2], double T,
                            double dt, double v_out[2], double vt_out[2]) {
  return guarded([&] {
    need(p, "profile");
    need(v0, "v0");
    need(v1, "v1");
    const auto tr = liewave::integrate_mode(p->profile, nu, {v0[0], v0[1]}, {v1[0], v1[1]}, T, dt, 1 << 30);
    const liewave::Complex v = tr.v.back();
    if (v_out) {
      v_out[0] = v.real();
      v_out[1] = v.imag();
    }
    if (vt_out) {
      vt_out[0] = tr.V.back()(1).real();
      vt_out[1] = tr.V.back()(1).imag();
    }
  });
}

lw_status lw_mode_propagator(const lw_profile* p, double nu, double t, double dt, double out[8]) {
  return guarded([&] {
    need(p, "profile");
    need(out, "out");
    const auto phi = liewave::mode_propagators(p->profile, nu, {t}, dt).front();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        out[2 * (2 * i + j)] = phi(i, j).real();
        out[2 * (2 * i + j) + 1] = phi(i, j).imag();
      }
  });
}

lw_status lw_run_config(const char* config_json, const char* out_dir, int64_t seed, int workers, char** report) {
  return guarded([&] {
    need(config_json, "config_json");
    const liewave::Json j = liewave::Json::parse(config_json);
    std::optional<std::uint64_t> override;
    if (seed >= 0) override = static_cast<std::uint64_t>(seed);
    const liewave::ExperimentConfig cfg = liewave::parse_config(j, override);
    const liewave::ExperimentOutputs out = liewave::run_experiment(cfg, workers);
    if (out_dir) liewave::write_outputs(out, out_dir);
    hand_out(report, liewave::dump_json(out.report));
  });
}

lw_status lw_check_config(const char* config_json, char** normalized, char** hash) {
  return guarded([&] {
    need(config_json, "config_json");
    const liewave::ExperimentConfig cfg = liewave::parse_config(liewave::Json::parse(config_json));
    hand_out(normalized, liewave::dump_json(cfg.normalized));
    hand_out(hash, liewave::sha256_hex(cfg.normalized.dump()));
  });
}

lw_status lw_run_battery(const char* name, uint64_t seed, int workers, char** report, int* pass) {
  return guarded([&] {
    need(name, "name");
    liewave::BatteryOptions opt;
    opt.seed = seed;
    opt.workers = workers;
    const std::string n = name;
    liewave::BatteryResult res;
    if (n == "symbol")
      res = liewave::symbol_suite(opt);
    else if (n == "plancherel")
      res = liewave::plancherel_suite(opt);
    else if (n == "hormander")
      res = liewave::hormander_suite(opt);
    else if (n == "embedding")
      res = liewave::embedding_suite(opt);
    else if (n == "torus")
      res = liewave::torus_suite(opt);
    else if (n.size() == 5 && n.rfind("case", 0) == 0 && n[4] >= '1' && n[4] <= '4')
      res = liewave::case_battery(n[4] - '0', opt);
    else
      liewave::fail(liewave::ErrorCode::invalid_argument, "unknown battery '" + n + "'");
    if (pass) *pass = res.pass() ? 1 : 0;
    liewave::Json j = liewave::battery_to_json(res);
    j["seconds"] = res.seconds;
    hand_out(report, liewave::dump_json(j));
  });
}

lw_status lw_gevrey_experiment(const lw_profile* p, double s, double data_A, int two_lmax, uint64_t seed,
                               int workers, char** report, int* pass) {
  return guarded([&] {
    need(p, "profile");
    liewave::GevreyExperimentOptions opt;
    opt.s = s;
    opt.data_A = data_A;
    opt.two_lmax = two_lmax;
    opt.seed = seed;
    opt.workers = workers;
    const auto g = liewave::gevrey_experiment(p->profile, opt);
    if (pass) *pass = g.pass ? 1 : 0;
    auto fit = [](const liewave::GevreyFit& f) {
      return liewave::Json{{"s_hat", f.s_hat}, {"A_hat", f.A_hat}, {"residual", f.residual},
                           {"s_hat_half", f.s_hat_half}, {"drift", f.drift},
                           {"shells_used", f.shells_used}, {"gevrey", f.gevrey}, {"diagnostic", f.diagnostic}};
    };
    const liewave::Json j = {{"case", g.case_tag}, {"s", g.s}, {"interval_hi", g.interval_hi},
                             {"fit_data", fit(g.fit_data)}, {"fit_final", fit(g.fit_final)}, {"pass", g.pass}};
    hand_out(report, liewave::dump_json(j));
  });
}

}  // extern "C"
