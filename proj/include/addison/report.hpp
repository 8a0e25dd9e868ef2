#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace addison {

struct ReportRow {
    std::string method;
    double value = 0.0;
    double err_est = 0.0;
    std::int64_t work = 0;
    double runtime_ms = 0.0;

    bool operator==(const ReportRow&) const = default;
};

enum class Verdict { consistent, inconsistent, partial };

/// One target evaluated by one or more methods.
struct Report {
    std::string target;
    std::vector<ReportRow> rows;
    Verdict verdict = Verdict::consistent;
    /// Extra named values shown alongside the rows (e.g. sigma_2 next to ln sigma_2).
    std::vector<std::pair<std::string, double>> notes;

    bool operator==(const Report&) const = default;
};

/// consistent iff every pair satisfies |v_i - v_j| <= e_i + e_j + slack.
Verdict pairwise_verdict(const std::vector<ReportRow>& rows, double slack = 0.0);

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Header `method,value,err_est,work,runtime_ms`, one line per row.
std::string to_csv(const Report& r);
std::string to_text(const Report& r);

/// 15 significant digits in scientific-free form where possible.
std::string fmt15(double x);

}  // namespace addison
