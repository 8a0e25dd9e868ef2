#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace addison {

struct TableRow {
    int depth = 0;
    double value = 0.0;
    double residual = 0.0;  // |value - oracle|

    bool operator==(const TableRow&) const = default;
};

struct ConvergenceTable {
    std::string series;
    double oracle = 0.0;
    std::vector<TableRow> rows;

    bool operator==(const ConvergenceTable&) const = default;
};

/// Registered families: gamma_addison, gamma_vacca, zeta_prime (k in {2, 3, 4}), L4 (k is the
/// argument s). depth runs 1..nmax; throws DomainError for an unknown series or bad k, nmax.
ConvergenceTable convergence_table(const std::string& series, int k, int nmax);

std::vector<std::string> table_series();

/// Header `depth,value,residual`.
std::string to_csv(const ConvergenceTable& t);
std::string to_text(const ConvergenceTable& t);
nlohmann::json to_json(const ConvergenceTable& t);
ConvergenceTable table_from_json(const nlohmann::json& j);

}  // namespace addison
