#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "addison/clausen.hpp"
#include "addison/constants.hpp"
#include "addison/kinkelin.hpp"
#include "addison/lerch.hpp"
#include "addison/negazeta.hpp"
#include "addison/registry.hpp"
#include "addison/report.hpp"
#include "addison/series.hpp"
#include "addison/tables.hpp"
#include "addison/verify.hpp"
#include "addison/zeta.hpp"

using namespace addison;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Args = std::map<std::string, double>;

struct Function {
    std::string name;
    std::string method;
    std::vector<std::string> params;
    Args defaults;
    std::function<Eval(const Args&)> run;
};

int as_int(const Args& a, const std::string& key) {
    double v = a.at(key);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw DomainError("--" + key + " must be an integer");
    return static_cast<int>(v);
}

const std::vector<Function>& functions() {
    static const std::vector<Function> fns = {
        {"lerch", "integral", {"z", "s", "a"}, {}, [](const Args& a) { return lerch_phi(a.at("z"), a.at("s"), a.at("a")); }},
        {"lerch_sderiv", "integral", {"z", "s", "a"}, {},
         [](const Args& a) { return lerch_phi_sderiv(a.at("z"), a.at("s"), a.at("a")); }},
        {"polylog", "integral", {"s", "z"}, {}, [](const Args& a) { return polylog(a.at("s"), a.at("z")); }},
        {"zeta", "p1_integral", {"s"}, {}, [](const Args& a) { return zeta(a.at("s")); }},
        {"hurwitz", "p1_integral", {"s", "a"}, {}, [](const Args& a) { return hurwitz(a.at("s"), a.at("a")); }},
        {"zeta_nderiv", "p1_integral", {"n", "s"}, {},
         [](const Args& a) { return zeta_nderiv(as_int(a, "n"), a.at("s")); }},
        {"hurwitz_sderiv", "p1_integral", {"s", "a"}, {},
         [](const Args& a) { return hurwitz_sderiv(a.at("s"), a.at("a")); }},
        {"stieltjes", "p1_integral", {"n", "a"}, {}, [](const Args& a) { return stieltjes(as_int(a, "n"), a.at("a")); }},
        {"digamma", "p1_integral", {"a"}, {}, [](const Args& a) { return digamma(a.at("a")); }},
        {"clausen", "polylog", {"n", "theta"}, {}, [](const Args& a) { return clausen(as_int(a, "n"), a.at("theta")); }},
        {"sinint", "series", {"z"}, {}, [](const Args& a) { return sinint(a.at("z")); }},
        {"cosint", "series_cf", {"z"}, {}, [](const Args& a) { return cosint(a.at("z")); }},
        {"dirichlet_L4", "hurwitz_combo", {"s"}, {}, [](const Args& a) { return dirichlet_L4(a.at("s")); }},
        {"L4_addison", "addison", {"s"}, {}, [](const Args& a) { return L4_addison(a.at("s")); }},
        {"somos_ln", "polylog_series", {"t"}, {}, [](const Args& a) { return somos_ln(a.at("t")); }},
        {"somos_recurrence", "closed_form", {"n", "t"}, {{"t", 2.0}},
         [](const Args& a) { return somos_recurrence(as_int(a, "n"), a.at("t")); }},
        {"euler_sum_H", "digamma_integral", {"s", "a"}, {}, [](const Args& a) { return euler_sum_H(a.at("s"), a.at("a")); }},
        {"hyperfactorial", "quadrature", {"x"}, {}, [](const Args& a) { return hyperfactorial(a.at("x")); }},
        {"gamma_moment_sin", "onef2_a12", {"alpha"}, {},
         [](const Args& a) { return gamma_moment_sin(a.at("alpha"), MomentSinMethod::onef2_a12); }},
        {"a_k", "stieltjes_b2", {"k", "q"}, {},
         [](const Args& a) { return a_k(as_int(a, "k"), a.at("q"), AkMethod::stieltjes_b2); }},
        {"zeta_prime_addison", "addison", {"s", "k"}, {{"k", 2.0}},
         [](const Args& a) { return zeta_prime_addison(a.at("s"), as_int(a, "k")); }},
        {"loggamma_addison", "addison", {"z"}, {}, [](const Args& a) { return loggamma_addison(a.at("z")); }},
        {"hurwitz_prime_addison", "addison", {"s", "a"}, {},
         [](const Args& a) { return hurwitz_prime_addison(a.at("s"), a.at("a")); }},
    };
    return fns;
}

double parse_real(const std::string& label, const std::string& text) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError(label + ": not a number: " + text);
    }
}

std::optional<double> env_tol() {
    const char* e = std::getenv("ADDISON_TOL");
    if (!e || !*e) return std::nullopt;
    double v = parse_real("ADDISON_TOL", e);
    if (!(v > 0.0)) throw UsageError("ADDISON_TOL must be > 0");
    return v;
}

// flag > ADDISON_TOL > none
std::optional<double> resolve_tol(const std::optional<double>& flag) {
    if (flag) {
        if (!(*flag > 0.0)) throw UsageError("--tol must be > 0");
        return flag;
    }
    return env_tol();
}

void check_format(const std::string& f) {
    if (f != "text" && f != "json" && f != "csv") throw UsageError("--format must be text, json or csv");
}

void print_report(const Report& r, const std::string& format) {
    if (format == "json")
        std::cout << to_json(r).dump(2) << '\n';
    else if (format == "csv")
        std::cout << to_csv(r);
    else
        std::cout << to_text(r);
}

int cmd_eval(const std::vector<std::string>& rest, std::string format) {
    if (rest.empty()) throw UsageError("eval: missing function name");
    const std::string& name = rest[0];
    const Function* fn = nullptr;
    for (const auto& f : functions())
        if (f.name == name) fn = &f;
    if (!fn) throw UsageError("eval: unknown function: " + name);

    Args args = fn->defaults;
    for (std::size_t i = 1; i < rest.size(); i += 2) {
        const std::string& flag = rest[i];
        if (flag.rfind("--", 0) != 0) throw UsageError("eval: expected --name value, got " + flag);
        if (i + 1 >= rest.size()) throw UsageError("eval: missing value for " + flag);
        std::string key = flag.substr(2);
        if (key == "format") {
            format = rest[i + 1];
            continue;
        }
        if (std::find(fn->params.begin(), fn->params.end(), key) == fn->params.end())
            throw UsageError("eval " + name + ": unknown argument --" + key);
        args[key] = parse_real(flag, rest[i + 1]);
    }
    check_format(format);
    std::string target = name + "(";
    for (std::size_t i = 0; i < fn->params.size(); ++i) {
        const std::string& p = fn->params[i];
        if (!args.count(p)) throw UsageError("eval " + name + ": missing --" + p);
        target += (i ? ", " : "") + p + "=" + fmt15(args[p]);
    }
    target += ")";

    Report rep;
    rep.target = target;
    ReportRow row;
    row.method = fn->method;
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        Eval e = fn->run(args);
        row.value = e.value;
        row.err_est = e.err_est;
        row.work = e.work;
    } catch (const NumericFailure& f) {
        row.value = f.partial().value;
        row.err_est = f.partial().err_est;
        row.work = f.partial().work;
        rep.verdict = Verdict::partial;
        std::cerr << "numeric failure: " << f.what() << " (partial value " << fmt15(row.value) << ")\n";
        code = kExitNumeric;
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back(row);
    print_report(rep, format);
    return code;
}

int cmd_constant(const std::string& name, const std::string& method, const std::optional<double>& tol_flag,
                 const std::string& format, bool list) {
    check_format(format);
    if (list) {
        std::cout << registry_to_json().dump(2) << '\n';
        return 0;
    }
    if (name.empty()) throw UsageError("constant: missing name (try --list)");
    std::optional<double> tol = resolve_tol(tol_flag);
    Report rep = run_constant(name, method, tol.value_or(0.0));
    print_report(rep, format);
    if (format == "text") {
        const ConstantRecord& rec = find_constant(name);
        std::cout << "reference " << rec.reference_text << (rec.reference_is_exp ? " (for exp of the value)" : "")
                  << " [" << to_string(rec.provenance) << "]\n";
    }
    return rep.verdict == Verdict::consistent ? 0 : kExitNumeric;
}

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

int cmd_verify(const std::string& suite_name, const std::optional<double>& tol_flag, const std::string& out_path,
               const std::string& format) {
    if (format != "text" && format != "json") throw UsageError("verify: --format must be text or json");
    Suite suite = suite_from_string(suite_name);
    std::optional<double> tol = resolve_tol(tol_flag);
    auto t0 = std::chrono::steady_clock::now();
    static bool stream_text = false;
    stream_text = format == "text";
    VerifyOutcome out = run_verify(suite, tol, [](const CheckResult& c) {
        if (!stream_text) return;
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.suite << ' ' << c.id << "  residual " << fmt_sci(c.residual)
                  << "  tol " << fmt_sci(c.tol) << "  " << c.description;
        if (!c.error.empty()) std::cout << "  [" << c.error << "]";
        std::cout << std::endl;
    });
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ofstream md(out_path);
    if (!md) throw UsageError("verify: cannot write " + out_path);
    md << deviations_markdown(out);

    std::size_t passed = 0;
    for (const auto& c : out.checks) passed += c.pass;
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : out.checks)
            checks.push_back({{"suite", c.suite},
                              {"id", c.id},
                              {"description", c.description},
                              {"residual", c.residual},
                              {"tol", c.tol},
                              {"pass", c.pass},
                              {"error", c.error}});
        nlohmann::json devs = nlohmann::json::array();
        for (const auto& d : out.deviations)
            devs.push_back({{"id", d.id},
                            {"title", d.title},
                            {"adopted", d.adopted},
                            {"rejected", d.rejected},
                            {"printed_is_adopted", d.printed_is_adopted},
                            {"adopted_residual", d.adopted_residual},
                            {"rejected_residual", d.rejected_residual}});
        std::cout << nlohmann::json{{"suite", suite_name},
                                    {"tolerance", tol.value_or(default_tolerance(suite))},
                                    {"checks", checks}, {"deviations", devs},
                                    {"pass", out.all_pass()}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << passed << '/' << out.checks.size() << " checks passed in " << fmt15(secs) << " s; "
                  << out.deviations.size() << " deviations written to " << out_path << '\n';
    }
    return out.all_pass() ? 0 : kExitNumeric;
}

int cmd_table(const std::string& series, int k, int nmax, const std::string& format) {
    check_format(format);
    ConvergenceTable t = convergence_table(series, k, nmax);
    if (format == "json")
        std::cout << to_json(t).dump(2) << '\n';
    else if (format == "csv")
        std::cout << to_csv(t);
    else
        std::cout << to_text(t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Addison-type series, P1 integral representations and the constants they produce"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* eval = app.add_subcommand("eval", "Evaluate one function: eval <function> --arg value ...");
    eval->prefix_command();
    eval->add_option("--format", format, "text, json or csv");

    std::string const_name, const_method = "all";
    std::optional<double> const_tol;
    bool const_list = false;
    auto* constant = app.add_subcommand("constant", "Compute a registered constant by one or all methods");
    constant->add_option("name", const_name, "Registered constant");
    constant->add_option("--method", const_method, "all or a method id");
    constant->add_option("--tol", const_tol, "Extra agreement slack between methods");
    constant->add_option("--format", format, "text, json or csv");
    constant->add_flag("--list", const_list, "Print the registry as JSON");

    std::string suite = "core", out_path = "deviations.md";
    std::optional<double> verify_tol;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite and write deviations.md");
    verify->add_option("--suite", suite, "core, appendix_a, appendix_b or all");
    verify->add_option("--tol", verify_tol, "Tolerance for the registry agreement checks");
    verify->add_option("--out", out_path, "Path of the deviations file");
    verify->add_option("--format", format, "text or json");

    std::string series;
    int k = 2, nmax = 10;
    auto* table = app.add_subcommand("table", "Convergence table of an Addison-type series");
    table->add_option("series", series, "gamma_addison, gamma_vacca, zeta_prime or L4")->required();
    table->add_option("--k", k, "Subdivision base (zeta_prime) or argument s (L4)");
    table->add_option("--nmax", nmax, "Largest depth");
    table->add_option("--format", format, "text, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval->remaining(), format);
        if (*constant) return cmd_constant(const_name, const_method, const_tol, format, const_list);
        if (*verify) return cmd_verify(suite, verify_tol, out_path, format);
        if (*table) return cmd_table(series, k, nmax, format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}
