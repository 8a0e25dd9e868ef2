#include "addison/tables.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "addison/clausen.hpp"
#include "addison/eval.hpp"
#include "addison/report.hpp"
#include "addison/series.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

constexpr double kGamma = std::numbers::egamma;

ConvergenceTable from_values(const std::string& name, double oracle, const std::vector<double>& values) {
    ConvergenceTable t{name, oracle, {}};
    for (std::size_t i = 0; i < values.size(); ++i)
        t.rows.push_back({static_cast<int>(i) + 1, values[i], std::abs(values[i] - oracle)});
    return t;
}

}  // namespace

std::vector<std::string> table_series() { return {"gamma_addison", "gamma_vacca", "zeta_prime", "L4"}; }

ConvergenceTable convergence_table(const std::string& series, int k, int nmax) {
    if (nmax < 1 || nmax > 40) throw DomainError("table: nmax must be in [1, 40]");
    std::vector<double> v;
    if (series == "gamma_addison") {
        if (k != 2) throw DomainError("table gamma_addison: only k = 2");
        for (int d = 1; d <= nmax; ++d) v.push_back(gamma_addison(1, d).value);
        return from_values(series, kGamma, v);
    }
    if (series == "gamma_vacca") {
        if (k != 2) throw DomainError("table gamma_vacca: only k = 2");
        if (nmax > 30) throw DomainError("table gamma_vacca: nmax must be <= 30");
        // depth d sums the first 2^(d+1) terms
        for (int d = 1; d <= nmax; ++d) v.push_back(gamma_vacca(2, 1L << (d + 1), false).value);
        return from_values(series, kGamma, v);
    }
    if (series == "zeta_prime") {
        if (k < 2 || k > 4) throw DomainError("table zeta_prime: k must be 2, 3 or 4");
        if (nmax > 24) throw DomainError("table zeta_prime: nmax must be <= 24");
        return from_values(series, zeta_nderiv(1, 2.0).value, zeta_prime_addison_partials(2.0, k, nmax));
    }
    if (series == "L4") {
        if (k < 0) throw DomainError("table L4: k (the argument s) must be >= 0");
        if (nmax > 24) throw DomainError("table L4: nmax must be <= 24");
        return from_values(series, dirichlet_L4(k).value, L4_addison_partials(k, nmax));
    }
    throw DomainError("unknown series: " + series);
}

std::string to_csv(const ConvergenceTable& t) {
    std::ostringstream os;
    os << "depth,value,residual\n";
    for (const auto& r : t.rows) os << r.depth << ',' << fmt15(r.value) << ',' << fmt15(r.residual) << '\n';
    return os.str();
}

std::string to_text(const ConvergenceTable& t) {
    std::ostringstream os;
    os << t.series << " (oracle " << fmt15(t.oracle) << ")\n";
    for (const auto& r : t.rows) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %3d  %-22s %.3e\n", r.depth, fmt15(r.value).c_str(), r.residual);
        os << buf;
    }
    return os.str();
}

nlohmann::json to_json(const ConvergenceTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) rows.push_back({{"depth", r.depth}, {"value", r.value}, {"residual", r.residual}});
    return {{"series", t.series}, {"oracle", t.oracle}, {"rows", rows}};
}

ConvergenceTable table_from_json(const nlohmann::json& j) {
    ConvergenceTable t;
    t.series = j.at("series").get<std::string>();
    t.oracle = j.at("oracle").get<double>();
    for (const auto& r : j.at("rows"))
        t.rows.push_back({r.at("depth").get<int>(), r.at("value").get<double>(), r.at("residual").get<double>()});
    return t;
}

}  // namespace addison
