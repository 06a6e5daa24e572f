#pragma once

// Verification suites shared by the CLI and the acceptance binary. Every
// suite is a list of independent tasks; a task builds its own towers, so
// tasks can run on separate threads. Results come back in task order.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybpa/baxter.hpp"

namespace ybpa {

constexpr const char* kToolVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteOptions {
  std::vector<std::string> algebras;  // empty: every algebra the suite covers
  std::optional<int> n;
  std::map<std::string, std::string> params;  // delta, alpha, eps, gamma, tau, q, omega, mu, z
  std::string mode = "symbolic";              // or "randomized"
  int samples = 5;
  uint64_t seed = 20240517;
  std::string cache_dir;
};

// Throws UsageError on unknown keys, malformed numbers or violated
// constraints (eps^4 = 1, alpha = 0 when eps^2 = -1, Liu needs eps = +-i).
// Returns warnings, e.g. delta <= 1. extra_params admits payload constants
// for tangles.
std::vector<std::string> validate_options(const SuiteOptions& o, bool extra_params = false);

struct Entry {
  std::string id;
  std::string algebra;
  std::string label;  // parameter case
  bool pass = false;
  // Exact checks: 0 when the difference reduced to zero, 1 otherwise.
  // Numeric checks carry their relative residual.
  double residual = 0;
  std::string detail;
  double seconds = 0;
};

struct Task {
  std::string id;
  std::function<std::vector<Entry>()> run;
};

// Runs tasks on `jobs` threads; a task that throws yields one failing entry.
std::vector<Entry> run_tasks(const std::vector<Task>& tasks, int jobs = 1);

// One builder per acceptance criterion, in order.
std::vector<Task> dimension_tasks(const SuiteOptions& o);
std::vector<Task> gram_tasks(const SuiteOptions& o);
std::vector<Task> jones_wenzl_tasks(const SuiteOptions& o);
std::vector<Task> quotient_tasks(const SuiteOptions& o);
std::vector<Task> baxter_tasks(const SuiteOptions& o);  // inversion, YBE, BYBE, Liu scalar, speciousness
std::vector<Task> crossing_tasks(const SuiteOptions& o);
std::vector<Task> defect_tasks(const SuiteOptions& o);
std::vector<Task> commutation_tasks(const SuiteOptions& o);  // includes the perturbed-R control
std::vector<Task> braid_limit_tasks(const SuiteOptions& o);
std::vector<Task> polynomial_generator_tasks(const SuiteOptions& o);
std::vector<Task> cross_engine_tasks(const SuiteOptions& o);
std::vector<Task> selfadjoint_tasks(const SuiteOptions& o);

// Closed-form coefficients of the five brackets of the YBE_1 defect, keyed
// as in DefectExpansion.
std::array<Trilinear, 5> defect_brackets_closed_form(const RationalFn& delta, const RationalFn& alpha, const GQ& eps);

// Tower of the named algebra (TL, PSG, FC, BMW, Liu) for compiling tangles.
// Parameters not fixed in o.params stay symbolic.
std::shared_ptr<Tower> tangle_tower(const SuiteOptions& o, int max_level,
                                    std::map<std::string, RationalFn>& symbols);

}  // namespace ybpa
