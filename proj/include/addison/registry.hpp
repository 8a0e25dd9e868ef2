#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "addison/eval.hpp"
#include "addison/report.hpp"

namespace addison {

enum class Provenance { paper, derived_oracle };

std::string to_string(Provenance p);

/// A registered constant: every listed method is callable through compute_constant.
struct ConstantRecord {
    std::string name;
    std::vector<std::string> methods;
    double reference = 0.0;
    /// The reference as printed; its last digit fixes the reference precision.
    std::string reference_text;
    Provenance provenance = Provenance::derived_oracle;
    /// The reference is for exp(value) rather than value (sigma_2 against ln sigma_2).
    bool reference_is_exp = false;
    std::string description;
};

/// Immutable after first use; order is registration order.
const std::vector<ConstantRecord>& constant_registry();

/// Throws DomainError for an unknown name.
const ConstantRecord& find_constant(const std::string& name);

/// Throws DomainError for an unknown name or method.
Eval compute_constant(const std::string& name, const std::string& method);

/// Half a unit in the last printed digit of reference_text.
double reference_precision(const ConstantRecord& rec);

/// [{name, reference, provenance, methods[]}]
nlohmann::json registry_to_json();

/// One row per method ("all") or the named method, rows computed concurrently.
/// The verdict allows `slack` on top of the pairwise error estimates.
Report run_constant(const std::string& name, const std::string& method = "all", double slack = 0.0);

}  // namespace addison
