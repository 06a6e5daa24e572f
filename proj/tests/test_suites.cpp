#include <gtest/gtest.h>

#include "ybpa/suites.hpp"

using namespace ybpa;

namespace {

SuiteOptions with(std::map<std::string, std::string> params, std::vector<std::string> algebras = {}) {
  SuiteOptions o;
  o.params = std::move(params);
  o.algebras = std::move(algebras);
  return o;
}

}  // namespace

TEST(Suites, ValidateOptions) {
  EXPECT_TRUE(validate_options(SuiteOptions{}).empty());
  EXPECT_THROW(validate_options(with({{"frob", "1"}})), UsageError);
  EXPECT_NO_THROW(validate_options(with({{"frob", "1"}}), true));
  EXPECT_THROW(validate_options(with({{"delta", "x"}})), UsageError);
  EXPECT_THROW(validate_options(with({{"eps", "2"}}, {"PSG"})), UsageError);
  EXPECT_THROW(validate_options(with({{"eps", "1+i"}}, {"PSG"})), UsageError);
  EXPECT_NO_THROW(validate_options(with({{"eps", "-1"}, {"alpha", "3"}}, {"PSG"})));
  EXPECT_THROW(validate_options(with({{"eps", "i"}, {"alpha", "3"}}, {"PSG"})), UsageError);
  EXPECT_NO_THROW(validate_options(with({{"eps", "i"}, {"alpha", "0"}}, {"PSG"})));
  EXPECT_THROW(validate_options(with({{"eps", "1"}}, {"Liu"})), UsageError);
  EXPECT_THROW(validate_options(with({{"eps", "1"}})), UsageError);  // all algebras include Liu
  EXPECT_THROW(validate_options(with({{"mu", "2"}})), UsageError);
  EXPECT_NO_THROW(validate_options(with({{"omega", "tau/q"}})));
  EXPECT_THROW(validate_options(with({{"omega", "tau"}})), UsageError);
  EXPECT_THROW(validate_options(with({{"gamma", "0"}})), UsageError);
  EXPECT_THROW(validate_options(with({}, {"Temperley"})), UsageError);
  SuiteOptions m;
  m.mode = "fast";
  EXPECT_THROW(validate_options(m), UsageError);
  auto w = validate_options(with({{"delta", "1/2"}}));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("delta"), std::string::npos);
  EXPECT_TRUE(validate_options(with({{"delta", "3"}})).empty());
}

TEST(Suites, BuildersRejectInconsistentParameters) {
  EXPECT_THROW(baxter_tasks(with({{"tau", "2"}}, {"BMW"})), UsageError);
  SuiteOptions r = with({}, {"BMW"});
  r.mode = "randomized";
  r.n = 4;
  EXPECT_THROW(commutation_tasks(r), UsageError);
}

TEST(Suites, RunTasksKeepsOrderAndCatches) {
  std::vector<Task> tasks;
  for (int k = 0; k < 6; ++k)
    tasks.push_back({"t" + std::to_string(k), [k] {
                       if (k == 3) throw std::runtime_error("boom");
                       std::vector<Entry> es;
                       for (int j = 0; j <= k % 2; ++j)
                         es.push_back(Entry{"t" + std::to_string(k) + "." + std::to_string(j), "", "", true, 0, "", 0});
                       return es;
                     }});
  for (int jobs : {1, 3}) {
    auto es = run_tasks(tasks, jobs);
    std::vector<std::string> ids;
    for (auto& e : es) ids.push_back(e.id);
    EXPECT_EQ(ids, (std::vector<std::string>{"t0.0", "t1.0", "t1.1", "t2.0", "t3", "t4.0", "t5.0", "t5.1"}));
    EXPECT_FALSE(es[4].pass);
    EXPECT_EQ(es[4].detail, "exception: boom");
    EXPECT_EQ(es[4].residual, 1.0);
  }
}

TEST(Suites, DefectClosedFormMatchesExpansion) {
  auto a = make_alphabet({"delta", "alpha"}, {Reality::Real, Reality::Real});
  RationalFn d = RationalFn::var(a, "delta"), al = RationalFn::var(a, "alpha");
  for (GQ eps : {GQ(1), GQ(-1), GQ::i(), -GQ::i()}) {
    RationalFn A = eps.is_real() ? al : RationalFn(0);
    auto ex = ybe_defect_expansion(a, d, A, eps);
    auto cf = defect_brackets_closed_form(d, A, eps);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(ex.brackets[k], cf[k]) << k;
  }
  // Bracket 5 is the single monomial rs rs' y_s, whatever the parameters.
  auto cf = defect_brackets_closed_form(d, al, GQ(1));
  EXPECT_EQ(cf[4].size(), 1u);
  EXPECT_EQ(cf[4].at({2, 2, 2}), RationalFn(1));
}

TEST(Suites, SmallSuitesPass) {
  for (auto& tasks : {dimension_tasks(with({}, {"TL", "FC"})), gram_tasks(SuiteOptions{}),
                      jones_wenzl_tasks(SuiteOptions{}), defect_tasks(SuiteOptions{}),
                      cross_engine_tasks(SuiteOptions{})}) {
    auto es = run_tasks(tasks);
    ASSERT_FALSE(es.empty());
    for (auto& e : es) EXPECT_TRUE(e.pass) << e.id << " " << e.detail;
  }
}

TEST(Suites, DimensionsRespectN) {
  SuiteOptions o = with({}, {"TL"});
  o.n = 3;
  auto es = run_tasks(dimension_tasks(o));
  ASSERT_EQ(es.size(), 3u);
  EXPECT_EQ(es[2].id, "dims/TL/n=3");
  EXPECT_EQ(es[2].detail, "dim 5, closed form 5, diagrams 5");
}

TEST(Suites, RandomizedRunsAreReproducible) {
  SuiteOptions o = with({}, {"TL"});
  o.mode = "randomized";
  o.n = 3;
  o.samples = 3;
  o.seed = 99;
  auto a = run_tasks(commutation_tasks(o));
  auto b = run_tasks(commutation_tasks(o));
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].detail, b[i].detail);
    EXPECT_TRUE(a[i].pass) << a[i].id;
  }
  EXPECT_NE(a[0].detail.find("seed=99"), std::string::npos);
}

TEST(Suites, PolynomialGeneratorWitness) {
  SuiteOptions o = with({}, {"FC"});
  o.samples = 4;
  auto es = run_tasks(polynomial_generator_tasks(o));
  ASSERT_EQ(es.size(), 3u);
  EXPECT_TRUE(es[0].pass);
  EXPECT_LE(es[0].residual, 1e-8);
  EXPECT_NE(es[0].detail.find("4 samples"), std::string::npos);
  EXPECT_TRUE(es[1].pass);
}

TEST(Suites, TangleTowerParameters) {
  std::map<std::string, RationalFn> sym;
  auto t = tangle_tower(with({{"delta", "5/2"}, {"k", "3"}}, {"TL"}), 3, sym);
  EXPECT_EQ(t->name(), "TL");
  EXPECT_EQ(t->loop(), RationalFn(GQ(mpq_class(5, 2))));
  EXPECT_EQ(sym.at("k"), RationalFn(3));
  sym.clear();
  auto l = tangle_tower(SuiteOptions{}, 3, sym);
  EXPECT_EQ(l->name(), "Liu");
  EXPECT_EQ(l->loop(), RationalFn::var(l->alphabet(), "delta"));
  EXPECT_THROW(tangle_tower(with({}, {"TL", "FC"}), 3, sym), UsageError);
}
