#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "addison/eval.hpp"
#include "addison/registry.hpp"
#include "addison/report.hpp"
#include "addison/tables.hpp"

using namespace addison;

namespace {

Report sample_report() {
    Report r;
    r.target = "somos2";
    r.rows = {{"p1_integral", 0.5078339228, 1.5e-13, 412, 3.25}, {"polylog_series", 0.50783392280701, 2e-15, 60, 0.01}};
    r.verdict = Verdict::consistent;
    r.notes = {{"exp(p1_integral)", 1.6616879496}, {"exp(polylog_series)", 1.66168794963359}};
    return r;
}

}  // namespace

TEST(Report, JsonRoundTripIsExact) {
    Report r = sample_report();
    Report back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
    EXPECT_EQ(back, r);
}

TEST(Report, JsonRoundTripRandomValues) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int trial = 0; trial < 50; ++trial) {
        Report r;
        r.target = "t" + std::to_string(trial);
        for (int i = 0; i < 4; ++i)
            r.rows.push_back({"m" + std::to_string(i), u(rng) / 7.0, std::abs(u(rng)) * 1e-12,
                              static_cast<std::int64_t>(rng() % 100000), std::abs(u(rng))});
        r.verdict = static_cast<Verdict>(trial % 3);
        Report back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
        ASSERT_EQ(back, r);
    }
}

TEST(Report, JsonSchema) {
    nlohmann::json j = to_json(sample_report());
    EXPECT_EQ(j.at("target"), "somos2");
    EXPECT_EQ(j.at("verdict"), "consistent");
    ASSERT_EQ(j.at("rows").size(), 2u);
    for (const char* key : {"method", "value", "err_est", "work", "runtime_ms"}) EXPECT_TRUE(j["rows"][0].contains(key));
}

TEST(Report, VerdictStringsRoundTrip) {
    for (Verdict v : {Verdict::consistent, Verdict::inconsistent, Verdict::partial})
        EXPECT_EQ(verdict_from_string(to_string(v)), v);
    EXPECT_THROW(verdict_from_string("maybe"), DomainError);
}

TEST(Report, PairwiseVerdict) {
    std::vector<ReportRow> rows = {{"a", 1.0, 1e-9, 1, 0}, {"b", 1.0 + 1.5e-9, 1e-9, 1, 0}};
    EXPECT_EQ(pairwise_verdict(rows), Verdict::consistent);
    rows[1].value = 1.0 + 3e-9;
    EXPECT_EQ(pairwise_verdict(rows), Verdict::inconsistent);
    EXPECT_EQ(pairwise_verdict(rows, 2e-9), Verdict::consistent);
    rows.push_back({"c", 5.0, 1e-9, 1, 0});
    EXPECT_EQ(pairwise_verdict(rows, 2e-9), Verdict::inconsistent);
}

TEST(Report, CsvHeaderAndRows) {
    std::string csv = to_csv(sample_report());
    EXPECT_EQ(csv.rfind("method,value,err_est,work,runtime_ms\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Report, Fmt15) {
    EXPECT_EQ(fmt15(0.5), "0.5");
    EXPECT_EQ(fmt15(1.0 / 3.0), "0.333333333333333");
}

TEST(Registry, EveryMethodResolvesAndNamesAreUnique) {
    std::set<std::string> names;
    for (const auto& rec : constant_registry()) {
        EXPECT_TRUE(names.insert(rec.name).second) << rec.name;
        EXPECT_FALSE(rec.methods.empty()) << rec.name;
        EXPECT_GT(reference_precision(rec), 0.0) << rec.name;
        std::set<std::string> methods(rec.methods.begin(), rec.methods.end());
        EXPECT_EQ(methods.size(), rec.methods.size()) << rec.name;
    }
    EXPECT_THROW(find_constant("no_such_constant"), DomainError);
    EXPECT_THROW(compute_constant("catalan", "no_such_method"), DomainError);
}

TEST(Registry, JsonSchema) {
    nlohmann::json j = registry_to_json();
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), constant_registry().size());
    for (const auto& e : j) {
        EXPECT_TRUE(e.at("name").is_string());
        EXPECT_TRUE(e.at("reference").is_number());
        std::string p = e.at("provenance");
        EXPECT_TRUE(p == "paper" || p == "derived-oracle") << p;
        EXPECT_TRUE(e.at("methods").is_array());
    }
}

TEST(Registry, ReferencePrecisionFromPrintedDigits) {
    EXPECT_DOUBLE_EQ(reference_precision(find_constant("catalan")), 5e-9);
    EXPECT_DOUBLE_EQ(reference_precision(find_constant("somos2")), 5e-6);
}

TEST(Registry, CatalanRowsAgreeWithReference) {
    Report r = run_constant("catalan");
    EXPECT_EQ(r.verdict, Verdict::consistent);
    ASSERT_EQ(r.rows.size(), find_constant("catalan").methods.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        EXPECT_EQ(r.rows[i].method, find_constant("catalan").methods[i]);
        EXPECT_NEAR(r.rows[i].value, 0.91596559, 5e-8);
    }
}

TEST(Registry, SingleMethodGivesOneRow) {
    Report r = run_constant("zeta3", "euler_sum");
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_NEAR(r.rows[0].value, 1.2020569031595942854, 1e-9);
}

TEST(Registry, DeterministicAcrossRuns) {
    for (const char* name : {"catalan", "somos2", "zeta_prime2"}) {
        Report a = run_constant(name), b = run_constant(name);
        ASSERT_EQ(a.rows.size(), b.rows.size());
        for (std::size_t i = 0; i < a.rows.size(); ++i) {
            EXPECT_EQ(a.rows[i].value, b.rows[i].value) << name;
            EXPECT_EQ(a.rows[i].err_est, b.rows[i].err_est) << name;
            EXPECT_EQ(a.rows[i].work, b.rows[i].work) << name;
        }
        EXPECT_EQ(a.verdict, b.verdict);
    }
}

TEST(Registry, SomosNotesAreExpOfRows) {
    Report r = run_constant("somos2");
    ASSERT_EQ(r.notes.size(), r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) EXPECT_DOUBLE_EQ(r.notes[i].second, std::exp(r.rows[i].value));
}

TEST(Tables, JsonRoundTrip) {
    ConvergenceTable t = convergence_table("L4", 2, 10);
    EXPECT_EQ(table_from_json(nlohmann::json::parse(to_json(t).dump())), t);
}

TEST(Tables, CsvHeader) {
    std::string csv = to_csv(convergence_table("gamma_addison", 2, 5));
    EXPECT_EQ(csv.rfind("depth,value,residual\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(Tables, ResidualsShrink) {
    for (auto [series, k, n] : {std::tuple{"gamma_addison", 2, 12}, std::tuple{"zeta_prime", 2, 12},
                                std::tuple{"zeta_prime", 3, 8}, std::tuple{"L4", 2, 12}}) {
        ConvergenceTable t = convergence_table(series, k, n);
        ASSERT_EQ(static_cast<int>(t.rows.size()), n);
        EXPECT_LT(t.rows.back().residual, t.rows.front().residual * 1e-2) << series << " k=" << k;
        for (int i = 0; i < n; ++i) EXPECT_EQ(t.rows[i].depth, i + 1);
    }
}

TEST(Tables, DomainErrors) {
    EXPECT_THROW(convergence_table("nope", 2, 5), DomainError);
    EXPECT_THROW(convergence_table("L4", 2, 0), DomainError);
    EXPECT_THROW(convergence_table("L4", 2, 41), DomainError);
    EXPECT_THROW(convergence_table("zeta_prime", 5, 5), DomainError);
    EXPECT_THROW(convergence_table("gamma_addison", 3, 5), DomainError);
}
