#include "ybpa/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ybpa/diagram.hpp"
#include "ybpa/integrability.hpp"
#include "ybpa/quotients.hpp"
#include "ybpa/tangle.hpp"

namespace ybpa {

namespace {

using Clock = std::chrono::steady_clock;

const std::set<std::string> kAlgebras = {"TL", "PSG", "FC", "BMW", "Liu"};
const std::set<std::string> kParams = {"delta", "alpha", "eps", "gamma", "tau", "q", "omega", "mu", "z"};

AlphabetPtr alph(std::vector<std::string> names, Reality uv = Reality::Real) {
  std::vector<Reality> r;
  for (auto& n : names) r.push_back(n == "u" || n == "v" ? uv : Reality::Real);
  return make_alphabet(std::move(names), r);
}

GQ q(long a, long b = 1) { return GQ(mpq_class(a, b)); }

bool wants(const SuiteOptions& o, const std::string& alg) {
  return o.algebras.empty() || std::find(o.algebras.begin(), o.algebras.end(), alg) != o.algebras.end();
}

bool has(const SuiteOptions& o, const std::string& k) { return o.params.count(k) > 0; }

GQ number(const SuiteOptions& o, const std::string& k) {
  const std::string& s = o.params.at(k);
  try {
    return GQ::parse(s);
  } catch (const std::exception&) {
    throw UsageError("parameter " + k + ": not a number: " + s);
  }
}

std::vector<int> choices(const SuiteOptions& o, const std::string& k, std::vector<int> all) {
  if (!has(o, k)) return all;
  GQ v = number(o, k);
  for (int c : all)
    if (v == GQ(c)) return {c};
  throw UsageError("parameter " + k + " out of range: " + o.params.at(k));
}

std::vector<int> omegas(const SuiteOptions& o) {
  if (!has(o, "omega")) return {0, 1};
  const std::string& s = o.params.at("omega");
  if (s == "0" || s == "-tau*q") return {0};
  if (s == "1" || s == "tau/q") return {1};
  throw UsageError("omega must be 0 (-tau*q) or 1 (tau/q)");
}

std::vector<GQ> liu_eps(const SuiteOptions& o) {
  if (!has(o, "eps")) return {GQ::i(), -GQ::i()};
  return {number(o, "eps")};
}

Entry from_check(const Check& c, const std::string& id, const std::string& alg, const std::string& label) {
  // Check names often repeat the family label; the entry carries it already.
  std::string name = c.name;
  if (!label.empty() && name.rfind(label + " ", 0) == 0) name = name.substr(label.size() + 1);
  return {id + "/" + name, alg, label, c.pass, c.pass ? 0.0 : 1.0, c.detail, 0};
}

Entry exact(const std::string& id, const std::string& alg, const std::string& label, bool pass,
            std::string detail = "") {
  return {id, alg, label, pass, pass ? 0.0 : 1.0, std::move(detail), 0};
}

void set_cache(const SuiteOptions& o, const std::shared_ptr<PresentedTower>& t) {
  if (!o.cache_dir.empty()) t->set_cache_dir(o.cache_dir);
}
void set_cache(const SuiteOptions& o, PresentedTower& t) {
  if (!o.cache_dir.empty()) t.set_cache_dir(o.cache_dir);
}

std::string eps_name(const GQ& e) { return e.to_string(); }

// Baxterisations selected by the options. BMW at generic (tau, q) is only
// feasible up to three strands of A, so bmw_fallback substitutes a fixed
// real point when the caller needs four.
std::vector<Baxterisation> families(const SuiteOptions& o, int max_level, bool bmw_fallback = false) {
  std::vector<Baxterisation> out;
  if (wants(o, "FC")) {
    Baxterisation b = has(o, "gamma") ? fc_baxterisation_at(number(o, "gamma"), max_level)
                                      : fc_baxterisation(alph({"gamma", "u", "v"}), max_level);
    set_cache(o, b.tower);
    out.push_back(std::move(b));
  }
  if (wants(o, "BMW")) {
    if (has(o, "tau") != has(o, "q")) throw UsageError("BMW needs both tau and q, or neither");
    for (int w : omegas(o)) {
      Baxterisation b = has(o, "tau")  ? bmw_baxterisation_at(number(o, "tau"), number(o, "q"), w, max_level)
                        : bmw_fallback ? bmw_baxterisation_at(q(3, 2), q(5, 2), w, max_level)
                                       : bmw_baxterisation(alph({"tau", "q", "u", "v"}), w, BmwStar::Same, max_level);
      set_cache(o, b.tower);
      out.push_back(std::move(b));
    }
  }
  if (wants(o, "Liu")) {
    for (int mu : choices(o, "mu", {1, -1}))
      for (const GQ& eps : liu_eps(o)) {
        Baxterisation b = has(o, "delta")
                              ? liu_baxterisation_at(number(o, "delta"), mu, eps, max_level)
                              : liu_baxterisation(alph({"delta", "u", "v"}, Reality::UnitModulus), mu, eps, max_level);
        set_cache(o, b.tower);
        out.push_back(std::move(b));
      }
  }
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::FC: return "FC";
    case Family::BMW: return "BMW";
    case Family::Liu: return "Liu";
  }
  return "";
}

// Labels of a presented level rewritten as diagram words.
std::vector<Vec> images(const Tower& pres, const Tower& diag, int n) {
  std::vector<Vec> img;
  for (auto& lab : pres.level(n).labels) {
    std::vector<std::string> letters;
    std::istringstream is(lab);
    std::string tok;
    while (is >> tok)
      if (tok != "1") letters.push_back(tok);
    img.push_back(diag.word(n, letters));
  }
  return img;
}

// Random admissible point for u: rational, or on the unit circle.
GQ random_point(std::mt19937_64& rng, bool unit) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  mpq_class t(num(rng), den(rng));
  t.canonicalize();
  return unit ? unit_circle_point(t) : GQ(t);
}

}  // namespace

std::vector<std::string> validate_options(const SuiteOptions& o, bool extra_params) {
  std::vector<std::string> warnings;
  for (auto& a : o.algebras)
    if (!kAlgebras.count(a)) throw UsageError("unknown algebra: " + a);
  for (auto& [k, v] : o.params) {
    if (!kParams.count(k) && !extra_params) throw UsageError("unknown parameter: " + k);
    if (k != "omega") number(o, k);
  }
  if (o.mode != "symbolic" && o.mode != "randomized") throw UsageError("mode must be symbolic or randomized");
  if (o.samples < 1) throw UsageError("samples must be positive");
  if (o.n && (*o.n < 1 || *o.n > 6)) throw UsageError("n must lie in 1..6");
  if (has(o, "eps")) {
    GQ e = number(o, "eps");
    if (!(e * e * e * e).is_one()) throw UsageError("eps must satisfy eps^4 = 1");
    if (!(e * e).is_one()) {
      if (has(o, "alpha") && !number(o, "alpha").is_zero()) throw UsageError("alpha must be 0 when eps^2 = -1");
    } else if (wants(o, "Liu")) {
      throw UsageError("Liu needs eps = i or -i");
    }
  }
  if (has(o, "mu")) choices(o, "mu", {1, -1});
  if (has(o, "omega")) omegas(o);
  if (has(o, "delta")) {
    GQ d = number(o, "delta");
    if (d.is_real() && d.re <= 1) warnings.push_back("delta <= 1: outside the delta > 1 regime");
  }
  for (const char* k : {"gamma", "tau", "q", "z"})
    if (has(o, k) && number(o, k).is_zero()) throw UsageError(std::string(k) + " must be nonzero");
  return warnings;
}

std::vector<Entry> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<Entry>> results(tasks.size());
  auto run_one = [&](size_t i) {
    auto t0 = Clock::now();
    std::vector<Entry> es;
    try {
      es = tasks[i].run();
    } catch (const std::exception& e) {
      es = {Entry{tasks[i].id, "", "", false, 1.0, std::string("exception: ") + e.what(), 0}};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    // Time is charged to the task; its entries share it.
    for (auto& e : es) e.seconds = secs / double(es.size());
    results[i] = std::move(es);
  };
  jobs = std::max(1, std::min<int>(jobs, int(tasks.size())));
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (size_t i; (i = next++) < tasks.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<Entry> out;
  for (auto& r : results)
    for (auto& e : r) out.push_back(std::move(e));
  return out;
}

std::vector<Task> dimension_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  struct Spec {
    std::string alg;
    int top;
  };
  for (Spec s : std::vector<Spec>{{"TL", 5}, {"FC", 3}, {"BMW", 4}, {"Liu", 4}}) {
    if (!wants(o, s.alg)) continue;
    int top = o.n.value_or(s.top);
    tasks.push_back({"dims/" + s.alg, [o, s, top] {
                       std::unique_ptr<PresentedTower> t;
                       std::string label;
                       if (s.alg == "TL") {
                         auto a = alph({"delta"});
                         t = tl_tower(a, RationalFn::var(a, "delta"), top);
                       } else if (s.alg == "FC") {
                         auto a = alph({"gamma"});
                         t = fc_tower(a, RationalFn::var(a, "gamma"), top);
                       } else if (s.alg == "BMW") {
                         auto a = alph({"tau", "q"});
                         t = bmw_tower(a, RationalFn::var(a, "tau"), RationalFn::var(a, "q"), BmwStar::Same, top);
                       } else {
                         auto a = alph({"delta"});
                         t = liu_tower(a, RationalFn::var(a, "delta"), GQ::i(), top);
                         label = "eps=i";
                       }
                       set_cache(o, *t);
                       std::vector<Entry> es;
                       std::optional<DiagramTower> diag;
                       if (s.alg == "TL") diag.emplace(DiagramKind::TL, RationalFn(q(3)), top);
                       if (s.alg == "FC") diag.emplace(DiagramKind::FC, RationalFn(q(2)), top);
                       for (int n = 1; n <= top; ++n) {
                         std::string id = "dims/" + s.alg + "/n=" + std::to_string(n);
                         long want = expected_dimension(s.alg, n);
                         long got;
                         try {
                           got = t->level(n).dim();
                         } catch (const std::exception& e) {
                           es.push_back(exact(id, s.alg, label, false, e.what()));
                           break;
                         }
                         std::string detail = "dim " + std::to_string(got) + ", closed form " + std::to_string(want);
                         bool ok = got == want;
                         if (diag) {
                           long count = diag->level(n).dim();
                           detail += ", diagrams " + std::to_string(count);
                           ok = ok && count == want;
                         }
                         Entry e = exact(id, s.alg, label, ok, detail);
                         e.residual = double(std::labs(got - want));
                         es.push_back(e);
                       }
                       return es;
                     }});
  }
  return tasks;
}

std::vector<Task> gram_tasks(const SuiteOptions& o) {
  if (!wants(o, "PSG")) return {};
  return {{"gram/PSG/n=2", [o] {
             auto a = alph({"delta", "alpha"});
             RationalFn d = RationalFn::var(a, "delta"), al = RationalFn::var(a, "alpha");
             std::vector<Entry> es;
             for (GQ eps : {GQ(1), GQ(-1)}) {
               auto P = psg_tower(a, d, al, eps, 2);
               set_cache(o, *P);
               auto G = gram_matrix(*P, 2);
               Matrix want = {{d * d, d, 0}, {d, d * d, 0}, {0, 0, d * d - 1}};
               bool ok = P->level(2).labels == std::vector<std::string>{"1", "e1", "s1"} && G == want;
               es.push_back(exact("gram/PSG/n=2", "PSG", "eps=" + eps_name(eps), ok,
                                  "basis (1, e, s), symbolic delta and alpha"));
             }
             return es;
           }}};
}

std::vector<Task> jones_wenzl_tasks(const SuiteOptions& o) {
  if (!wants(o, "TL")) return {};
  int top = o.n.value_or(5);
  return {{"jones-wenzl/TL", [top] {
             auto a = alph({"delta"});
             RationalFn d = RationalFn::var(a, "delta");
             DiagramTower tl(DiagramKind::TL, d, top);
             std::vector<Entry> es;
             for (int n = 1; n <= top; ++n) {
               std::string id = "jones-wenzl/TL/n=" + std::to_string(n);
               const auto& A = tl.level(n);
               Vec jw = jones_wenzl(tl, n);
               es.push_back(exact(id + "/idempotent", "TL", "", A.mul(jw, jw) == jw));
               bool ann = true;
               for (int i = 1; i < n; ++i) {
                 Vec e = A.gen("e" + std::to_string(i));
                 ann = ann && vec_is_zero(A.mul(e, jw)) && vec_is_zero(A.mul(jw, e));
               }
               es.push_back(exact(id + "/annihilation", "TL", "", ann));
               RationalFn tr = tl.trace(n, jw);
               bool ok = tr == chebyshev_u(d, n);
               if (n <= 5) ok = ok && tr == cosine_product(d, n);
               es.push_back(exact(id + "/trace", "TL", "", ok, "tr = " + tr.to_string()));
             }
             return es;
           }}};
}

std::vector<Task> quotient_tasks(const SuiteOptions& o) {
  int n = o.n.value_or(3);
  std::vector<Task> tasks;
  auto add = [&](const std::string& alg, const std::string& label, std::function<QuotientSummary()> f, long dim) {
    std::string id = "quotient/" + alg + "/n=" + std::to_string(n);
    tasks.push_back({id, [=] {
                       auto s = f();
                       std::vector<Entry> es;
                       for (auto& c : s.report.checks) es.push_back(exact(id + "/" + c.name, alg, label, c.pass));
                       if (dim >= 0)
                         es.push_back(exact(id + "/quotient-dimension", alg, label, s.quotient_dim == dim,
                                            "dim " + std::to_string(s.quotient_dim)));
                       return es;
                     }});
  };
  if (wants(o, "FC"))
    for (int mu : choices(o, "mu", {1, -1}))
      add("FC", "mu=" + std::to_string(mu), [n, mu] { return check_fc_quotient(n, mu); },
          expected_dimension("FC", n));
  if (wants(o, "BMW")) {
    for (int mu : choices(o, "mu", {1, -1}))
      add("BMW", "mu=" + std::to_string(mu), [n, mu] { return check_bmw_quotient(n, mu); },
          expected_dimension("BMW", n));
    add("BS", "", [n] { return check_braid_semigroup_quotient(n); }, expected_dimension("BMW", n));
  }
  if (wants(o, "Liu"))
    for (const GQ& eps : liu_eps(o))
      add("Liu", "eps=" + eps_name(eps), [n, eps] { return check_liu_quotient(n, eps); },
          expected_dimension("Liu", n));
  return tasks;
}

std::vector<Task> baxter_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  // One task per family; families() is cheap, levels are built lazily.
  for (size_t k = 0, m = families(o, 3).size(); k < m; ++k) {
    tasks.push_back({"baxter/" + std::to_string(k), [o, k] {
                       auto b = families(o, 3)[k];
                       std::string alg = family_name(b.family), id = "baxter/" + alg;
                       std::vector<Entry> es;
                       for (int i = 1; i <= 3; ++i) es.push_back(from_check(check_inversion(b, i), id, alg, b.label));
                       for (int i = 1; i <= 3; ++i) es.push_back(from_check(check_ybe(b, i), id, alg, b.label));
                       for (auto& c : check_bybe(b)) es.push_back(from_check(c, id, alg, b.label));
                       es.push_back(exact(id + "/not-specious", alg, b.label, !specious(b.coeffs, b.u, b.v)));
                       es.push_back(from_check(check_self_adjoint(b), id, alg, b.label));
                       return es;
                     }});
  }
  if (wants(o, "Liu"))
    tasks.push_back({"baxter/Liu/inversion-scalar", [o] {
                       // y = 1 + rho e + sigma s, ybar from the inversion lemma.
                       auto a = alph({"delta", "rho", "sigma"});
                       RationalFn d = RationalFn::var(a, "delta"), r = RationalFn::var(a, "rho"),
                                  s = RationalFn::var(a, "sigma");
                       std::vector<Entry> es;
                       for (const GQ& eps : liu_eps(o)) {
                         auto L = liu_tower(a, d, eps, 3);
                         set_cache(o, *L);
                         const auto& A = L->level(2);
                         Vec y = A.one(), yb = A.one();
                         vec_axpy(y, r, A.gen("e1"));
                         vec_axpy(y, s, A.gen("s1"));
                         RationalFn den = s * s - d * r;
                         vec_axpy(yb, d * r * (d + r) / den, A.gen("e1"));
                         vec_axpy(yb, -d * s * (d + r) / den, A.gen("s1"));
                         RationalFn scalar = d * (d + r) * (r * r + s * s) / den;
                         auto rot = [&](const Vec& x) { return rotate_element(*L, 2, x, 1); };
                         bool ok = A.mul(rot(y), rot(yb)) == vec_scale(A.one(), scalar) &&
                                   A.mul(rot(yb), rot(y)) == vec_scale(A.one(), scalar) &&
                                   horizontal(*L, y, yb) == vec_scale(A.gen("e1"), scalar);
                         es.push_back(exact("baxter/Liu/inversion-scalar", "Liu", "eps=" + eps_name(eps), ok,
                                            "scalar " + scalar.to_string()));
                       }
                       return es;
                     }});
  return tasks;
}

std::vector<Task> crossing_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  for (size_t k = 0, m = families(o, 3).size(); k < m; ++k)
    tasks.push_back({"crossing/" + std::to_string(k), [o, k] {
                       auto b = families(o, 3)[k];
                       std::string alg = family_name(b.family), id = "crossing/" + alg;
                       std::vector<Entry> es{from_check(check_crossing(b), id, alg, b.label)};
                       if (b.family == Family::Liu) {
                         auto [r, ra] = liu_crossing_ranks(b);
                         es.push_back(exact(id + "/inconsistent-rank", alg, b.label, r == 2 && ra == 3,
                                            "rank " + std::to_string(r) + ", augmented " + std::to_string(ra)));
                       }
                       return es;
                     }});
  return tasks;
}

std::array<Trilinear, 5> defect_brackets_closed_form(const RationalFn& d, const RationalFn& A, const GQ& eps) {
  std::array<Trilinear, 5> b;
  RationalFn E(eps), Ei(eps.inverse()), di = d.inverse();
  auto add = [](Trilinear& t, int x, int y, int z, const RationalFn& c) {
    t[{x, y, z}] += c;
    if (t[{x, y, z}].is_zero()) t.erase({x, y, z});
  };
  add(b[0], 0, 0, 1, 1);
  add(b[0], 1, 0, 0, 1);
  add(b[0], 1, 0, 1, d);
  add(b[0], 2, 0, 2, -di);
  add(b[0], 0, 1, 0, -1);
  add(b[0], 1, 1, 1, 1);
  add(b[0], 1, 2, 2, -di * E);
  add(b[0], 2, 2, 1, -di * Ei);

  add(b[1], 0, 0, 2, 1);
  add(b[1], 2, 0, 0, 1);
  add(b[1], 2, 0, 2, A);
  add(b[1], 0, 2, 0, -1);

  add(b[2], 0, 1, 2, 1);
  add(b[2], 2, 1, 1, -E);
  add(b[2], 0, 2, 1, -1);
  add(b[2], 2, 2, 1, -A);

  add(b[3], 1, 1, 2, Ei);
  add(b[3], 2, 1, 0, -1);
  add(b[3], 1, 2, 0, 1);
  add(b[3], 1, 2, 2, A);

  add(b[4], 2, 2, 2, 1);
  return b;
}

std::vector<Task> defect_tasks(const SuiteOptions& o) {
  if (!wants(o, "PSG") && !wants(o, "Liu")) return {};
  return {{"defect", [] {
             auto a = alph({"delta", "alpha"});
             RationalFn d = RationalFn::var(a, "delta"), al = RationalFn::var(a, "alpha");
             std::vector<Entry> es;
             for (GQ eps : {GQ(1), GQ(-1), GQ::i(), -GQ::i()}) {
               RationalFn alpha = eps.is_real() ? al : RationalFn(0);
               std::string label = "eps=" + eps_name(eps);
               auto ex = ybe_defect_expansion(a, d, alpha, eps);
               auto want = defect_brackets_closed_form(d, alpha, eps);
               es.push_back(exact("defect/PSG/in-span", "PSG", label, ex.in_span));
               for (int k = 0; k < 5; ++k)
                 es.push_back(exact("defect/PSG/bracket-" + std::to_string(k + 1), "PSG", label,
                                    ex.brackets[k] == want[k]));
               // y_s = 0: bracket 4 keeps y_e (re rs'/eps - rs r1'), which
               // separates as re/rs = eps r1'/rs' = const.
               Trilinear ye;
               for (auto& [key, c] : ex.brackets[3])
                 if (key[1] == 1) ye[key] = c;
               Trilinear sep{{{1, 1, 2}, RationalFn(eps.inverse())}, {{2, 1, 0}, RationalFn(-1)}};
               es.push_back(exact("defect/PSG/ys-zero-forces-constancy", "PSG", label, ye == sep,
                                  "y_e part of the (s2e1 - e2s1) bracket is separable"));
             }
             return es;
           }}};
}

std::vector<Task> commutation_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  if (o.mode == "symbolic") {
    std::vector<int> ns = o.n ? std::vector<int>{*o.n} : std::vector<int>{2, 3};
    for (int n : ns) {
      if (wants(o, "TL"))
        tasks.push_back({"transfer/commute/TL/n=" + std::to_string(n), [o, n] {
                           auto a = alph({"z", "u", "v"});
                           RationalFn z = has(o, "z") ? RationalFn(number(o, "z")) : RationalFn::var(a, "z");
                           auto tl = std::make_shared<DiagramTower>(DiagramKind::TL, z + z.inverse(), n + 1);
                           auto f = transfer_operator("TL", tl, n, tl_r_function(tl, z), RationalFn::var(a, "u"),
                                                      {z * z});
                           auto r = commutation_symbolic(f, RationalFn::var(a, "v"));
                           return std::vector<Entry>{from_check(r.check, "transfer/commute/TL/n=" + std::to_string(n),
                                                                "TL", "symbolic u, v")};
                         }});
      // BMW at generic (tau, q) is out of reach from four strands on.
      auto fams = families(o, n + 1, n >= 3);
      for (size_t k = 0; k < fams.size(); ++k)
        tasks.push_back({"transfer/commute/" + std::to_string(n) + "/" + std::to_string(k), [o, n, k] {
                           auto b = families(o, n + 1, n >= 3)[k];
                           std::string alg = family_name(b.family);
                           auto r = commutation_symbolic(transfer_operator(b, n), b.v);
                           Entry e = from_check(r.check, "transfer/commute/" + alg + "/n=" + std::to_string(n), alg,
                                                b.label);
                           if (b.family == Family::BMW && n >= 3 && !has(o, "tau"))
                             e.detail = "tau = 3/2, q = 5/2; u, v symbolic";
                           return std::vector<Entry>{e};
                         }});
    }
  } else {
    int n = o.n.value_or(4);
    if (n > 3 && !o.algebras.empty() && (wants(o, "BMW") || wants(o, "Liu")))
      throw UsageError("randomized commutation beyond three strands covers TL and FC only");
    if (wants(o, "TL"))
      tasks.push_back({"transfer/commute-randomized/TL", [o, n] {
                         auto uv = alph({"u", "v"});
                         RationalFn z = has(o, "z") ? RationalFn(number(o, "z")) : RationalFn(3);
                         auto tl = std::make_shared<DiagramTower>(DiagramKind::TL, z + z.inverse(), n + 1);
                         auto f = transfer_operator("TL", tl, n, tl_r_function(tl, z), RationalFn::var(uv, "u"),
                                                    {z * z}, false);
                         auto r = commutation_randomized(f, o.samples, o.seed);
                         Entry e = from_check(r.check, "transfer/commute-randomized/TL/n=" + std::to_string(n), "TL",
                                              "z=" + z.to_string());
                         e.detail += " samples=" + std::to_string(r.samples) + " seed=" + std::to_string(r.seed);
                         return std::vector<Entry>{e};
                       }});
    if (wants(o, "FC"))
      tasks.push_back({"transfer/commute-randomized/FC", [o, n] {
                         auto uv = alph({"u", "v"});
                         GQ g = has(o, "gamma") ? number(o, "gamma") : q(2);
                         auto fc = std::make_shared<DiagramTower>(DiagramKind::FC, RationalFn(g), n + 1);
                         auto b = fc_baxterisation_at(g, 2);
                         auto f = transfer_operator("FC", fc, n, r_function(b, fc), RationalFn::var(uv, "u"), b.poles,
                                                    false);
                         auto r = commutation_randomized(f, o.samples, o.seed);
                         Entry e = from_check(r.check, "transfer/commute-randomized/FC/n=" + std::to_string(n), "FC",
                                              "gamma=" + g.to_string());
                         e.detail += " samples=" + std::to_string(r.samples) + " seed=" + std::to_string(r.seed);
                         return std::vector<Entry>{e};
                       }});
    if (n <= 3) {
      SuiteOptions numeric = o;
      numeric.algebras.clear();
      for (auto alg : {"BMW", "Liu"})
        if (wants(o, alg)) numeric.algebras.push_back(alg);
      if (!numeric.algebras.empty()) {
        auto fams = families(numeric, n + 1, true);
        for (size_t k = 0; k < fams.size(); ++k)
          tasks.push_back({"transfer/commute-randomized/" + std::to_string(k), [numeric, n, k] {
                             auto b = families(numeric, n + 1, true)[k];
                             std::string alg = family_name(b.family);
                             auto r = commutation_randomized(transfer_operator(b, n, false), numeric.samples,
                                                             numeric.seed);
                             Entry e = from_check(
                                 r.check, "transfer/commute-randomized/" + alg + "/n=" + std::to_string(n), alg,
                                 b.label);
                             e.detail += " samples=" + std::to_string(r.samples) + " seed=" + std::to_string(r.seed);
                             return std::vector<Entry>{e};
                           }});
      }
    }
  }
  // Negative control: r_e += u. Two strands commute for any R, so use three.
  tasks.push_back({"transfer/negative-control", [o] {
                     auto b = fc_baxterisation_at(q(2), 4);
                     auto c = b.coeffs;
                     b.coeffs = [c](const RationalFn& x) {
                       auto r = c(x);
                       r[1] += x;
                       return r;
                     };
                     std::vector<Entry> es;
                     if (o.mode == "symbolic") {
                       auto r = commutation_symbolic(transfer_operator(b, 3), b.v);
                       es.push_back(exact("transfer/negative-control/FC/n=3", "FC", "perturbed r_e", !r.check.pass,
                                          "commutator nonzero"));
                     } else {
                       auto r = commutation_randomized(transfer_operator(b, 3, false), o.samples, o.seed);
                       es.push_back(exact("transfer/negative-control/FC/n=3", "FC", "perturbed r_e", !r.check.pass,
                                          "commutator nonzero at some sample"));
                     }
                     return es;
                   }});
  return tasks;
}

std::vector<Task> braid_limit_tasks(const SuiteOptions& o) {
  if (!wants(o, "Liu")) return {};
  SuiteOptions lo = o;
  lo.algebras = {"Liu"};
  std::vector<Task> tasks;
  for (size_t k = 0, m = families(lo, 3).size(); k < m; ++k)
    tasks.push_back({"braid-limits/" + std::to_string(k), [lo, k] {
                       auto b = families(lo, 3)[k];
                       auto bl = braid_limits(b);
                       std::vector<Entry> es;
                       for (auto& c : bl.checks) es.push_back(from_check(c, "braid-limits/Liu", "Liu", b.label));
                       return es;
                     }});
  return tasks;
}

std::vector<Task> polynomial_generator_tasks(const SuiteOptions& o) {
  int n = o.n.value_or(3);
  if (n > 3) n = 3;
  // Numeric points: FC at delta = 4, BMW at a real point, Liu at a rational
  // delta close to sqrt 3 with |u| = 1.
  SuiteOptions p = o;
  if (!has(p, "gamma")) p.params["gamma"] = "2";
  if (!has(p, "tau")) {
    p.params["tau"] = "3/2";
    p.params["q"] = "5/2";
  }
  if (!has(p, "delta")) p.params["delta"] = "1351/780";
  p.algebras.clear();
  for (auto alg : {"FC", "BMW", "Liu"})
    if (wants(o, alg)) p.algebras.push_back(alg);
  std::vector<Task> tasks;
  if (p.algebras.empty()) return tasks;
  for (size_t k = 0, m = families(p, n + 1).size(); k < m; ++k)
    tasks.push_back({"polynomial-generator/" + std::to_string(k), [p, n, k] {
                       auto b = families(p, n + 1)[k];
                       std::string alg = family_name(b.family), id = "polynomial-generator/" + alg + "/n=" +
                                                                        std::to_string(n);
                       auto f = transfer_operator(b, n, false);
                       const auto& A = f.tower->level(n);
                       std::mt19937_64 rng(p.seed);
                       bool unit = b.family == Family::Liu;
                       std::vector<Vec> s;
                       std::vector<GQ> pts;
                       while (int(s.size()) < std::max(p.samples, 4)) {
                         GQ x = random_point(rng, unit);
                         if (f.is_excluded(RationalFn(x)) ||
                             std::find(pts.begin(), pts.end(), x) != pts.end())
                           continue;
                         try {
                           s.push_back(f.at(RationalFn(x)));
                           pts.push_back(x);
                         } catch (const std::exception&) {
                         }
                       }
                       auto g = find_polynomial_generator(A, s, p.seed);
                       std::vector<Entry> es;
                       Entry e{id + "/residual", alg, b.label, g.residual <= 1e-8, g.residual,
                               std::to_string(s.size()) + " samples, " + std::to_string(g.spectrum.size()) +
                                   " eigenvalues of b",
                               0};
                       es.push_back(e);
                       bool in_span = true;
                       for (auto& x : s) in_span = in_span && exact_polynomial_in(A, g.b, x).has_value();
                       es.push_back(exact(id + "/exact-membership", alg, b.label, in_span, "samples lie in Q(i)[b]"));
                       es.push_back(exact(id + "/diagonalizable", alg, b.label, diagonalizability_check(A, g.b)));
                       return es;
                     }});
  return tasks;
}

std::vector<Task> cross_engine_tasks(const SuiteOptions& o) {
  std::vector<Task> tasks;
  auto add = [&](const std::string& alg, int top) {
    if (!wants(o, alg)) return;
    tasks.push_back({"cross-engine/" + alg, [o, alg, top] {
                       auto a = alph({"x"});
                       RationalFn x = RationalFn::var(a, "x");
                       std::unique_ptr<PresentedTower> pres =
                           alg == "TL" ? tl_tower(a, x, top) : fc_tower(a, x, top);
                       set_cache(o, *pres);
                       DiagramTower diag(alg == "TL" ? DiagramKind::TL : DiagramKind::FC, x, top);
                       std::vector<Entry> es;
                       for (int n = 1; n <= top; ++n) {
                         const auto& P = pres->level(n);
                         const auto& D = diag.level(n);
                         auto img = images(*pres, diag, n);
                         Matrix M(D.dim(), std::vector<RationalFn>(P.dim()));
                         for (int j = 0; j < P.dim(); ++j)
                           for (int i = 0; i < D.dim(); ++i) M[i][j] = img[j][i];
                         bool bij = P.dim() == D.dim() && mat_rank(M) == D.dim();
                         int bad = 0;
                         for (int i = 0; i < P.dim(); ++i)
                           for (int j = 0; j < P.dim(); ++j) {
                             Vec got = D.zero();
                             for (auto& [k, c] : P.table[i][j]) vec_axpy(got, c, img[k]);
                             if (got != D.mul(img[i], img[j])) ++bad;
                           }
                         Entry e = exact("cross-engine/" + alg + "/n=" + std::to_string(n), alg, "symbolic loop",
                                         bij && bad == 0,
                                         std::to_string(P.dim() * P.dim()) + " products, " + std::to_string(bad) +
                                             " mismatched");
                         e.residual = bad + (bij ? 0 : 1);
                         es.push_back(e);
                       }
                       return es;
                     }});
  };
  add("TL", o.n.value_or(4));
  add("FC", std::min(o.n.value_or(3), 3));
  return tasks;
}

std::vector<Task> selfadjoint_tasks(const SuiteOptions& o) {
  SuiteOptions p = o;
  if (!has(p, "gamma")) p.params["gamma"] = "2";
  if (!has(p, "tau")) {
    p.params["tau"] = "3/2";
    p.params["q"] = "5/2";
  }
  if (!has(p, "delta")) p.params["delta"] = "7/4";
  p.algebras.clear();
  for (auto alg : {"FC", "BMW", "Liu"})
    if (wants(o, alg)) p.algebras.push_back(alg);
  std::vector<Task> tasks;
  if (p.algebras.empty()) return tasks;
  int n = std::min(o.n.value_or(3), 3);
  for (size_t k = 0, m = families(p, n + 1).size(); k < m; ++k)
    tasks.push_back({"selfadjoint/" + std::to_string(k), [p, n, k] {
                       auto b = families(p, n + 1)[k];
                       std::string alg = family_name(b.family);
                       std::mt19937_64 rng(p.seed);
                       std::vector<GQ> pts;
                       for (int i = 0; i < 3; ++i) pts.push_back(random_point(rng, b.family == Family::Liu));
                       auto f = transfer_operator(b, n, false);
                       std::vector<Entry> es;
                       for (auto& c : check_selfadjoint(f, pts))
                         es.push_back(from_check(c, "selfadjoint/" + alg + "/n=" + std::to_string(n), alg, b.label));
                       return es;
                     }});
  return tasks;
}

std::shared_ptr<Tower> tangle_tower(const SuiteOptions& o, int max_level, std::map<std::string, RationalFn>& symbols) {
  std::string alg = o.algebras.empty() ? "Liu" : o.algebras.front();
  if (o.algebras.size() > 1) throw UsageError("tangle takes a single --algebra");
  std::vector<std::string> names;
  std::vector<std::string> wanted = alg == "TL"    ? std::vector<std::string>{"delta"}
                                    : alg == "PSG" ? std::vector<std::string>{"delta", "alpha"}
                                    : alg == "FC"  ? std::vector<std::string>{"gamma"}
                                    : alg == "BMW" ? std::vector<std::string>{"tau", "q"}
                                                   : std::vector<std::string>{"delta"};
  for (auto& w : wanted)
    if (!has(o, w)) names.push_back(w);
  GQ eps = has(o, "eps") ? number(o, "eps") : (alg == "PSG" ? GQ(1) : GQ::i());
  if (alg == "PSG" && !(eps * eps).is_one() && std::find(names.begin(), names.end(), "alpha") != names.end())
    names.erase(std::find(names.begin(), names.end(), "alpha"));
  auto a = alph(names);
  auto val = [&](const std::string& k) {
    if (has(o, k)) return RationalFn(number(o, k));
    if (a->index(k) >= 0) return RationalFn::var(a, k);
    return RationalFn(0);
  };
  std::shared_ptr<PresentedTower> t;
  if (alg == "TL") t = tl_tower(a, val("delta"), max_level);
  else if (alg == "PSG") t = psg_tower(a, val("delta"), val("alpha"), eps, max_level);
  else if (alg == "FC") t = fc_tower(a, val("gamma"), max_level);
  else if (alg == "BMW") t = bmw_tower(a, val("tau"), val("q"), BmwStar::Same, max_level);
  else t = liu_tower(a, val("delta"), eps, max_level);
  set_cache(o, t);
  for (auto& [k, v] : o.params)
    if (!kParams.count(k)) symbols[k] = RationalFn(number(o, k));
  return t;
}

}  // namespace ybpa
