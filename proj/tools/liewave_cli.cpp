#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liewave/liewave.h"

namespace {

using Json = nlohmann::ordered_json;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  lw_string_free(s);
  return out;
}

int report_error(lw_status st) {
  std::fprintf(stderr, "error: %s\n", lw_last_error());
  return st == LW_VERIFICATION ? 1 : 2;
}

int default_workers() {
  if (const char* env = std::getenv("LIEWAVE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    std::fprintf(stderr, "warning: ignoring LIEWAVE_WORKERS='%s'\n", env);
  }
  return 1;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
    return false;
  }
  return true;
}

void print_checks(const Json& r) {
  std::printf("%s\n", r.value("title", std::string()).c_str());
  for (const auto& c : r["checks"])
    std::printf("  %-4s  %-52s %s\n", c["pass"].get<bool>() ? "PASS" : "FAIL", c["name"].get<std::string>().c_str(),
                c["detail"].get<std::string>().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver and verification suites for d_t^2 u - a(t) L u = 0 on SU(2) and the torus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lw_version()));

  int workers = default_workers();
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* verify = app.add_subcommand("verify-symbol", "Check a symbol against the Euler-angle oracle and Hormander bounds");
  double lmax = 5.0;
  std::string op = "sublaplacian";
  int r = 0;
  std::string verify_out;
  verify->add_option("--lmax", lmax, "Largest spin ell (half-integers allowed)")->check(CLI::NonNegativeNumber);
  verify->add_option("--operator", op, "laplacian or sublaplacian")
      ->check(CLI::IsMember({"laplacian", "sublaplacian"}));
  verify->add_option("--r", r, "Hormander order to test (default: the operator's own)");
  verify->add_option("--seed", seed, "Seed for the oracle sample points");
  verify->add_option("--out", verify_out, "Also write the JSON report to this file");

  auto* solve = app.add_subcommand("solve", "Run an experiment config");
  std::string config, out_dir = "out";
  solve->add_option("--config", config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  solve->add_option("--out", out_dir, "Output directory");
  solve->add_option("--seed", seed, "Override the config seed")->each([&](const std::string&) { seed_given = true; });
  solve->add_option("--workers", workers, "Worker threads for the mode fan-out")->check(CLI::PositiveNumber);

  auto* cases = app.add_subcommand("cases", "Run the per-case experiment batteries");
  int case_tag = 0;
  std::string cases_out;
  cases->add_option("--case", case_tag, "1, 2, 3 or 4 (default: all)")->check(CLI::Range(1, 4));
  cases->add_option("--seed", seed, "Seed for random data");
  cases->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  cases->add_option("--out", cases_out, "Also write the JSON reports to this file");

  CLI11_PARSE(app, argc, argv);

  if (*verify) {
    const double two = 2.0 * lmax;
    if (two != static_cast<double>(static_cast<int>(two))) {
      std::fprintf(stderr, "error: --lmax must be a multiple of 1/2\n");
      return 2;
    }
    char* report = nullptr;
    int pass = 0;
    const lw_status st = lw_verify_symbol(op.c_str(), static_cast<int>(two), r, seed, &report, &pass);
    if (st != LW_OK) return report_error(st);
    const std::string text = take(report);
    std::fputs(text.c_str(), stdout);
    if (!verify_out.empty() && !write_file(verify_out, text)) return 2;
    if (!pass) std::fprintf(stderr, "verify-symbol: FAIL\n");
    return pass ? 0 : 1;
  }

  if (*solve) {
    std::ifstream f(config, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    char* report = nullptr;
    const lw_status st =
        lw_run_config(ss.str().c_str(), out_dir.c_str(), seed_given ? static_cast<int64_t>(seed) : -1, workers, &report);
    if (st != LW_OK) return report_error(st);
    const Json rep = Json::parse(take(report));
    std::printf("wrote %s/{snapshots.json,norms.csv,amplitudes.csv,report.json,manifest.json}\n", out_dir.c_str());
    std::printf("config hash %s\n", rep["config_hash"].get<std::string>().c_str());
    if (rep.contains("regularity")) {
      const auto& g = rep["regularity"];
      std::printf("regularity s=%g r=%d: C_theorem=%.6g C_energy=%.6g C_sobolev=%.6g\n", g["s"].get<double>(),
                  g["r"].get<int>(), g["C_theorem"].get<double>(), g["C_energy"].get<double>(),
                  g["C_sobolev"].get<double>());
    }
    if (rep.contains("gevrey") && rep["gevrey"].contains("pass")) {
      const auto& g = rep["gevrey"];
      std::printf("gevrey s=%g: s_hat=%.6g A_hat=%.6g %s\n", g["s"].get<double>(),
                  g["fit_final"]["s_hat"].get<double>(), g["fit_final"]["A_hat"].get<double>(),
                  g["pass"].get<bool>() ? "PASS" : "FAIL");
    }
    return 0;
  }

  // cases
  std::vector<int> tags;
  if (case_tag) tags.push_back(case_tag);
  else tags = {1, 2, 3, 4};
  bool all = true;
  Json reports = Json::array();
  for (int tag : tags) {
    char* report = nullptr;
    int pass = 0;
    const std::string name = "case" + std::to_string(tag);
    const lw_status st = lw_run_battery(name.c_str(), seed, workers, &report, &pass);
    if (st != LW_OK) return report_error(st);
    Json rep = Json::parse(take(report));
    print_checks(rep);
    std::printf("  => %s (%.1f s)\n", pass ? "PASS" : "FAIL", rep["seconds"].get<double>());
    all = all && pass;
    reports.push_back(std::move(rep));
  }
  if (!cases_out.empty() && !write_file(cases_out, reports.dump(2) + "\n")) return 2;
  return all ? 0 : 1;
}
