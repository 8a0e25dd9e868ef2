#include <gtest/gtest.h>

#include "addison/eval.hpp"
#include "addison/verify.hpp"

using namespace addison;

TEST(Verify, SuiteNames) {
    for (Suite s : {Suite::core, Suite::appendix_a, Suite::appendix_b, Suite::all})
        EXPECT_EQ(suite_from_string(to_string(s)), s);
    EXPECT_THROW(suite_from_string("extra"), DomainError);
    EXPECT_DOUBLE_EQ(default_tolerance(Suite::core), 1e-8);
    EXPECT_DOUBLE_EQ(default_tolerance(Suite::appendix_a), 1e-5);
    EXPECT_DOUBLE_EQ(default_tolerance(Suite::appendix_b), 1e-5);
}

TEST(Verify, AppendixBPassesAndReportsDeviations) {
    int seen = 0;
    static int* counter = nullptr;
    counter = &seen;
    VerifyOutcome out = run_verify(Suite::appendix_b, std::nullopt, [](const CheckResult&) { ++*counter; });
    EXPECT_EQ(seen, static_cast<int>(out.checks.size()));
    EXPECT_TRUE(out.all_pass());
    for (const auto& c : out.checks) {
        EXPECT_EQ(c.suite, "appendix_b");
        EXPECT_TRUE(c.error.empty()) << c.id << ": " << c.error;
        EXPECT_EQ(c.pass, c.residual <= c.tol) << c.id;
    }
    ASSERT_FALSE(out.deviations.empty());
    for (const auto& d : out.deviations) {
        EXPECT_LT(d.adopted_residual, d.rejected_residual) << d.id;
        EXPECT_NE(d.adopted, d.rejected);
    }
}

TEST(Verify, DeviationsMarkdownSections) {
    VerifyOutcome out;
    out.deviations.push_back({"core", "sample", "Sample title", "form a", "form b (printed)", false, "x = 1", 1e-12, 0.5});
    std::string md = deviations_markdown(out);
    EXPECT_EQ(md.rfind("# Deviations", 0), 0u);
    for (const char* piece : {"## Sample title", "`sample`", "adopted: form a", "rejected: form b (printed)",
                              "printed form adopted: no", "evaluated at: x = 1", "adopted residual: 1.000e-12",
                              "rejected residual: 5.000e-01"})
        EXPECT_NE(md.find(piece), std::string::npos) << piece;
}
