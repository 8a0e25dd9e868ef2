#include "addison/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "addison/eval.hpp"

namespace addison {

Verdict pairwise_verdict(const std::vector<ReportRow>& rows, double slack) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            double d = std::abs(rows[i].value - rows[j].value);
            if (!(d <= rows[i].err_est + rows[j].err_est + slack)) return Verdict::inconsistent;
        }
    return Verdict::consistent;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::inconsistent: return "inconsistent";
        case Verdict::partial: return "partial";
    }
    return "partial";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "consistent") return Verdict::consistent;
    if (s == "inconsistent") return Verdict::inconsistent;
    if (s == "partial") return Verdict::partial;
    throw DomainError("unknown verdict: " + s);
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"method", row.method},
                        {"value", row.value},
                        {"err_est", row.err_est},
                        {"work", row.work},
                        {"runtime_ms", row.runtime_ms}});
    nlohmann::json j = {{"target", r.target}, {"rows", rows}, {"verdict", to_string(r.verdict)}};
    if (!r.notes.empty()) {
        nlohmann::json notes = nlohmann::json::array();
        for (const auto& [k, v] : r.notes) notes.push_back({{"name", k}, {"value", v}});
        j["notes"] = notes;
    }
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.target = j.at("target").get<std::string>();
    for (const auto& row : j.at("rows"))
        r.rows.push_back({row.at("method").get<std::string>(), row.at("value").get<double>(),
                          row.at("err_est").get<double>(), row.at("work").get<std::int64_t>(),
                          row.at("runtime_ms").get<double>()});
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (j.contains("notes"))
        for (const auto& n : j.at("notes"))
            r.notes.emplace_back(n.at("name").get<std::string>(), n.at("value").get<double>());
    return r;
}

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

namespace {

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

}  // namespace

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "method,value,err_est,work,runtime_ms\n";
    for (const auto& row : r.rows)
        os << row.method << ',' << fmt15(row.value) << ',' << fmt15(row.err_est) << ',' << row.work << ','
           << fmt_ms(row.runtime_ms) << '\n';
    return os.str();
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << r.target << '\n';
    for (const auto& row : r.rows) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "  %-22s %-22s +- %-10.3g work=%-10lld %s ms\n", row.method.c_str(),
                      fmt15(row.value).c_str(), row.err_est, static_cast<long long>(row.work),
                      fmt_ms(row.runtime_ms).c_str());
        os << buf;
    }
    for (const auto& [k, v] : r.notes) os << "  " << k << " = " << fmt15(v) << '\n';
    os << "verdict: " << to_string(r.verdict) << '\n';
    return os.str();
}

}  // namespace addison
