// Runs every acceptance criterion and prints one [PASS]/[FAIL] line for each.
// Exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "liewave/battery.hpp"
#include "liewave/error.hpp"
#include "liewave/experiment.hpp"

using namespace liewave;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int worker_count() {
  if (const char* env = std::getenv("LIEWAVE_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Outcome from_battery(const BatteryResult& r) {
  Outcome o{r.pass(), ""};
  for (const auto& c : r.checks) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += (c.pass ? "" : "FAILED ") + c.name + " (" + c.detail + ")";
  }
  return o;
}

Outcome determinism(int workers) {
  const char* configs[] = {"torus_smoke.json", "case1_sublaplacian.json", "case2_gevrey.json", "case3_gevrey.json",
                           "case4_gevrey.json"};
  Outcome o{true, ""};
  for (const char* name : configs) {
    const Json j = Json::parse(read_text_file(std::string(LIEWAVE_CONFIG_DIR) + "/" + name));
    const ExperimentConfig cfg = parse_config(j);
    const ExperimentOutputs a = run_experiment(cfg, 1);
    const ExperimentOutputs b = run_experiment(cfg, 1);
    const ExperimentOutputs c = run_experiment(cfg, std::max(2, workers));
    const bool same = a.files == b.files && a.files == c.files;
    o.pass = o.pass && same;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string(name) + (same ? " identical" : " DIFFERS");
  }
  return o;
}

}  // namespace

int main() {
  const int workers = worker_count();
  BatteryOptions opt;
  opt.workers = workers;
  opt.seed = 0;

  struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "symbol oracle agreement, ell <= 5", 30, [&] { return from_battery(symbol_suite(opt)); }},
      {2, "Plancherel identity and round trip, L_max = 8", 30, [&] { return from_battery(plancherel_suite(opt)); }},
      {3, "Hormander bounds r = 2 over ell <= 50, r = 1 control", 5,
       [&] { return from_battery(hormander_suite(opt)); }},
      {4, "Case 1 energy and Sobolev-loss constants", 120, [&] { return from_battery(case_battery(1, opt)); }},
      {5, "Case 3 growth exponent and quasi-symmetriser", 120, [&] { return from_battery(case_battery(3, opt)); }},
      {6, "Case 2 monotone W and Gevrey propagation", 180, [&] { return from_battery(case_battery(2, opt)); }},
      {7, "Case 4 shifted roots and Gevrey propagation", 180, [&] { return from_battery(case_battery(4, opt)); }},
      {8, "Sobolev embeddings stable from L_max 16 to 32", 60, [&] { return from_battery(embedding_suite(opt)); }},
      {9, "torus cross-check cos(kt) e^{ikx}, k <= 32", 10, [&] { return from_battery(torus_suite(opt)); }},
      {10, "determinism across repeats and worker counts", 0, [&] { return determinism(workers); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    char timing[96];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s%s", secs, c.limit_s, in_time ? "" : " EXCEEDED");
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("[%s] %d %s [%s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), timing, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
