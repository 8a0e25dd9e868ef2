#pragma once

#include <optional>
#include <string>
#include <vector>

namespace addison {

enum class Suite { core, appendix_a, appendix_b, all };

/// Throws DomainError for an unknown name.
Suite suite_from_string(const std::string& s);
std::string to_string(Suite s);

/// 1e-8 for core, 1e-5 for the appendix suites.
double default_tolerance(Suite s);

struct CheckResult {
    std::string suite;
    std::string id;
    std::string description;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string error;  // set when the check threw
};

/// A formula whose printed form fails validation or is ambiguous, with the
/// reading adopted and the one rejected; exactly one of the two is the printed form.
struct Deviation {
    std::string suite;
    std::string id;
    std::string title;
    std::string adopted;
    std::string rejected;
    bool printed_is_adopted = false;
    std::string evaluated_at;
    double adopted_residual = 0.0;
    double rejected_residual = 0.0;
};

struct VerifyOutcome {
    std::vector<CheckResult> checks;
    std::vector<Deviation> deviations;

    bool all_pass() const;
};

/// Runs the invariant checks of a suite. Checks with a pinned tolerance use it; the
/// registry agreement checks use tol (or the suite default when unset).
/// on_check, if given, is called after each check in order.
VerifyOutcome run_verify(Suite suite, std::optional<double> tol = std::nullopt,
                         void (*on_check)(const CheckResult&) = nullptr);

/// Markdown text of deviations.md: one section per adopted variant with both residuals.
std::string deviations_markdown(const VerifyOutcome& outcome);

}  // namespace addison
