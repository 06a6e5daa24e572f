// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// line fails. Each criterion runs its suites with default options and is
// held to its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

#include "ybpa/suites.hpp"

using namespace ybpa;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget;  // seconds
  std::function<std::vector<Task>()> tasks;
  // Extra structural requirement on the entries, e.g. coverage.
  std::function<std::string(const std::vector<Entry>&)> require;
};

int count_prefix(const std::vector<Entry>& es, const std::string& p) {
  return int(std::count_if(es.begin(), es.end(), [&](const Entry& e) { return e.id.rfind(p, 0) == 0; }));
}

int count_containing(const std::vector<Entry>& es, const std::string& p) {
  return int(std::count_if(es.begin(), es.end(), [&](const Entry& e) { return e.id.find(p) != std::string::npos; }));
}

std::string need(bool ok, const std::string& what) { return ok ? "" : what; }

}  // namespace

int main() {
  int jobs = std::clamp(int(std::thread::hardware_concurrency()), 1, 8);
  SuiteOptions base;
  SuiteOptions randomized = base;
  randomized.mode = "randomized";
  randomized.n = 4;
  randomized.algebras = {"TL", "FC"};

  auto join = [](std::initializer_list<std::vector<Task>> parts) {
    std::vector<Task> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
  };

  std::vector<Criterion> criteria = {
      {1, "dimensions TL 1..5, FC 1..3, BMW and Liu 1..4", 60, [&] { return dimension_tasks(base); },
       [](const std::vector<Entry>& es) {
         return need(count_prefix(es, "dims/TL/") == 5 && count_prefix(es, "dims/FC/") == 3 &&
                         count_prefix(es, "dims/BMW/") == 4 && count_prefix(es, "dims/Liu/") == 4,
                     "missing levels");
       }},
      {2, "PS_2 Gram matrix", 600, [&] { return gram_tasks(base); }, nullptr},
      {3, "Jones-Wenzl n <= 5: idempotent, annihilation, trace", 600, [&] { return jones_wenzl_tasks(base); },
       [](const std::vector<Entry>& es) { return need(count_containing(es, "/trace") == 5, "missing traces"); }},
      {4, "quotients FC, BMW, Liu at n = 3 with the iota elements", 600, [&] { return quotient_tasks(base); },
       [](const std::vector<Entry>& es) {
         return need(count_containing(es, "iota") > 0 && count_prefix(es, "quotient/FC/") > 0 &&
                         count_prefix(es, "quotient/BMW/") > 0 && count_prefix(es, "quotient/Liu/") > 0,
                     "missing quotient checks");
       }},
      {5, "Baxterisations: inversion, YBE_1..3, boundary YBE", 600, [&] { return baxter_tasks(base); },
       [](const std::vector<Entry>& es) {
         return need(count_containing(es, "YBE_") == 3 * 7 && count_containing(es, "inversion-scalar") == 2,
                     "missing families");
       }},
      {6, "crossing: FC and BMW symmetric, Liu inconsistent", 600, [&] { return crossing_tasks(base); },
       [](const std::vector<Entry>& es) {
         return need(count_containing(es, "inconsistent-rank") == 4, "missing Liu ranks");
       }},
      {7, "defect expansion brackets and the y_s = 0 branch", 600, [&] { return defect_tasks(base); },
       [](const std::vector<Entry>& es) {
         return need(count_containing(es, "bracket-") == 20 && count_containing(es, "constancy") == 4,
                     "missing brackets");
       }},
      {8, "transfer commutation n = 2, 3 symbolic, n = 4 randomized, negative control", 1800,
       [&] { return join({commutation_tasks(base), commutation_tasks(randomized)}); },
       [](const std::vector<Entry>& es) {
         bool ok = true;
         for (auto alg : {"FC", "BMW", "Liu"})
           for (auto n : {"/n=2", "/n=3"})
             ok = ok && count_containing(es, std::string("transfer/commute/") + alg + n) > 0;
         ok = ok && count_prefix(es, "transfer/commute-randomized/TL/n=4") == 1 &&
              count_prefix(es, "transfer/commute-randomized/FC/n=4") == 1 &&
              count_prefix(es, "transfer/negative-control") == 2;
         return need(ok, "missing commutation cases");
       }},
      {9, "braid limits of the Liu Baxterisations", 600, [&] { return braid_limit_tasks(base); },
       [](const std::vector<Entry>& es) { return need(es.size() == 4 * 14, "expected 14 checks per family"); }},
      {10, "polynomial generator at n = 3, residual <= 1e-8", 600, [&] { return polynomial_generator_tasks(base); },
       [](const std::vector<Entry>& es) { return need(count_containing(es, "/residual") == 7, "missing families"); }},
      {11, "cross-engine structure constants TL n <= 4, FC n <= 3", 600, [&] { return cross_engine_tasks(base); },
       [](const std::vector<Entry>& es) { return need(es.size() == 7, "missing levels"); }},
  };

  int failed = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    auto entries = run_tasks(c.tasks(), jobs);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string why;
    int bad = 0;
    for (auto& e : entries)
      if (!e.pass) {
        ++bad;
        if (why.empty()) why = e.id + (e.detail.empty() ? "" : ": " + e.detail.substr(0, 200));
      }
    if (entries.empty()) why = "no checks ran";
    if (why.empty() && c.require) why = c.require(entries);
    if (why.empty() && secs > c.budget) why = "over the time budget";
    bool ok = why.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %2d: %s (%zu checks, %d failed, %.1f s of %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), entries.size(), bad, secs, c.budget, ok ? "" : " -- ", why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
