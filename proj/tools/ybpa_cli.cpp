// ybpa-cli: verification suites and the tangle compiler from the command line.
// Every check becomes one JSON line; a summary object closes the report.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybpa/suites.hpp"
#include "ybpa/tangle.hpp"

using namespace ybpa;
using nlohmann::json;

namespace {

struct Flags {
  std::vector<std::string> algebras;
  int n = 0;
  std::vector<std::string> params;
  std::string mode = "symbolic";
  int samples = 5;
  uint64_t seed = SuiteOptions{}.seed;
  std::string cache_dir;
  std::string out;
  int jobs = 1;
  bool no_timing = false;
  std::string tangle_file;
};

SuiteOptions to_options(const Flags& f, const CLI::App& app) {
  SuiteOptions o;
  o.algebras = f.algebras;
  if (app.count("--n")) o.n = f.n;
  for (auto& p : f.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got " + p);
    o.params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  o.mode = f.mode;
  o.samples = f.samples;
  o.seed = f.seed;
  o.cache_dir = f.cache_dir;
  return o;
}

json config_echo(const std::string& verb, const SuiteOptions& o, const Flags& f) {
  json c;
  c["verb"] = verb;
  c["algebra"] = o.algebras;
  c["n"] = o.n ? json(*o.n) : json(nullptr);
  c["params"] = o.params;
  c["mode"] = o.mode;
  c["samples"] = o.samples;
  c["seed"] = o.seed;
  c["cache_dir"] = o.cache_dir;
  c["jobs"] = f.jobs;
  return c;
}

std::vector<Task> tasks_for(const std::string& verb, const SuiteOptions& o) {
  std::vector<Task> all;
  auto add = [&](std::vector<Task> t) {
    for (auto& x : t) all.push_back(std::move(x));
  };
  if (verb == "dims" || verb == "report") add(dimension_tasks(o));
  if (verb == "verify-presentation" || verb == "report") {
    add(gram_tasks(o));
    add(jones_wenzl_tasks(o));
    add(quotient_tasks(o));
    add(cross_engine_tasks(o));
  }
  if (verb == "verify-baxter" || verb == "report") {
    add(baxter_tasks(o));
    add(crossing_tasks(o));
    add(defect_tasks(o));
    add(braid_limit_tasks(o));
  }
  if (verb == "transfer") {
    add(commutation_tasks(o));
    add(selfadjoint_tasks(o));
    add(polynomial_generator_tasks(o));
  }
  if (verb == "report") {
    // Symbolic commutation on two and three strands, then the randomized
    // four-strand run; the n flag is left to the other suites.
    SuiteOptions s = o, r = o;
    s.mode = "symbolic";
    s.n.reset();
    r.mode = "randomized";
    r.n = 4;
    r.algebras.clear();
    for (auto alg : {"TL", "FC"})
      if (o.algebras.empty() || std::count(o.algebras.begin(), o.algebras.end(), alg)) r.algebras.push_back(alg);
    add(commutation_tasks(s));
    if (!r.algebras.empty()) {
      auto rt = commutation_tasks(r);
      rt.pop_back();  // the negative control already ran symbolically
      add(std::move(rt));
    }
    add(selfadjoint_tasks(o));
    add(polynomial_generator_tasks(o));
  }
  return all;
}

json entry_json(const Entry& e, bool timing) {
  json j;
  j["type"] = "check";
  j["id"] = e.id;
  j["algebra"] = e.algebra;
  j["case"] = e.label;
  j["status"] = e.pass ? "pass" : "fail";
  j["residual"] = e.residual;
  if (!e.detail.empty()) j["detail"] = e.detail;
  if (timing) j["seconds"] = e.seconds;
  return j;
}

int run_suite(const std::string& verb, const SuiteOptions& o, const Flags& f, std::ostream& out) {
  auto warnings = validate_options(o);
  auto tasks = tasks_for(verb, o);
  auto t0 = std::chrono::steady_clock::now();
  auto entries = run_tasks(tasks, f.jobs);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json failed = json::array();
  for (auto& e : entries) {
    out << entry_json(e, !f.no_timing).dump() << "\n";
    if (!e.pass) failed.push_back(e.id);
  }
  json s;
  s["type"] = "summary";
  s["tool"] = "ybpa";
  s["version"] = kToolVersion;
  s["config"] = config_echo(verb, o, f);
  s["warnings"] = warnings;
  s["checks"] = entries.size();
  s["failed"] = failed;
  if (!f.no_timing) s["seconds"] = total;
  bool pass = failed.empty() && !entries.empty();
  s["status"] = pass ? "pass" : "fail";
  out << s.dump() << "\n";
  out.flush();
  return pass ? 0 : 1;
}

int run_tangle(const SuiteOptions& o, const Flags& f, std::ostream& out) {
  validate_options(o, true);
  std::ifstream in(f.tangle_file);
  if (!in) throw UsageError("cannot read " + f.tangle_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::map<std::string, RationalFn> symbols;
  auto t = tangle_tower(o, 6, symbols);
  TangleNet net;
  Vec v;
  try {
    net = parse_tangle(ss.str(), *t, symbols);
    auto widths = tangle_widths(net);
    int top = net.strands;
    for (int w : widths) top = std::max(top, w);
    if (top > t->max_level()) throw UsageError("tangle needs " + std::to_string(top) + " strands; at most 6");
    v = compile(net, *t);
  } catch (const TangleError& e) {
    throw UsageError(f.tangle_file + ": " + e.what());
  }
  const auto& A = t->level(net.strands);
  json j;
  j["type"] = "tangle";
  j["file"] = f.tangle_file;
  j["algebra"] = t->name();
  j["strands"] = net.strands;
  j["element"] = A.to_string(v);
  json terms = json::object();
  for (int i = 0; i < A.dim(); ++i)
    if (!v[i].is_zero()) terms[A.labels[i]] = v[i].to_string();
  j["terms"] = terms;
  out << j.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of singly generated planar algebras and their Yang-Baxter structure"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "TOML/INI file with any of the options below; flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--algebra", f.algebras, "TL, PSG, FC, BMW, Liu (repeat or comma-separate)")->delimiter(',');
  app.add_option("--n", f.n, "strand count (meaning depends on the verb)");
  app.add_option("--param", f.params, "parameter assignment k=v, e.g. delta=3, eps=-i, mu=1, omega=0");
  app.add_option("--mode", f.mode, "symbolic or randomized")->check(CLI::IsMember({"symbolic", "randomized"}));
  app.add_option("--samples", f.samples, "samples for randomized checks");
  app.add_option("--seed", f.seed, "seed for randomized checks");
  app.add_option("--cache-dir", f.cache_dir, "directory for cached basis tables");
  app.add_option("--out", f.out, "write the report here instead of stdout");
  app.add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", f.no_timing, "omit timings so reports are byte-identical across runs");

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"dims", "dimensions of the presented towers against the closed forms"},
      {"verify-presentation", "Gram matrices, Jones-Wenzl projectors, quotient maps, cross-engine tables"},
      {"verify-baxter", "inversion, YBE, boundary YBE, crossing, defect expansion, braid limits"},
      {"transfer", "transfer-operator commutation, self-adjointness, polynomial generator"},
      {"report", "every suite"},
  };
  for (auto& [name, help] : verbs) app.add_subcommand(name, help);
  auto* tangle = app.add_subcommand("tangle", "compile a tangle file and print the element");
  tangle->add_option("file", f.tangle_file, "tangle description")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  try {
    SuiteOptions o = to_options(f, app);
    std::ofstream file;
    if (!f.out.empty()) {
      file.open(f.out);
      if (!file) throw UsageError("cannot write " + f.out);
    }
    std::ostream& out = f.out.empty() ? std::cout : file;
    if (verb == "tangle") return run_tangle(o, f, out);
    return run_suite(verb, o, f, out);
  } catch (const std::exception& e) {
    std::cerr << "ybpa-cli: " << e.what() << "\n";
    return 2;
  }
}
