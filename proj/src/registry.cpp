#include "addison/registry.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>

#include "addison/clausen.hpp"
#include "addison/constants.hpp"
#include "addison/kinkelin.hpp"
#include "addison/quad.hpp"
#include "addison/series.hpp"
#include "addison/zeta.hpp"

namespace addison {

namespace {

constexpr double kPi = std::numbers::pi;

struct Method {
    std::string id;
    std::function<Eval()> run;
};

struct Entry {
    ConstantRecord record;
    std::vector<Method> methods;
};

Entry make(std::string name, std::string ref_text, Provenance prov, std::string description,
           std::vector<Method> methods, bool ref_is_exp = false) {
    Entry e;
    e.record.name = std::move(name);
    e.record.reference_text = ref_text;
    e.record.reference = std::stod(ref_text);
    e.record.provenance = prov;
    e.record.reference_is_exp = ref_is_exp;
    e.record.description = std::move(description);
    for (const auto& m : methods) e.record.methods.push_back(m.id);
    e.methods = std::move(methods);
    return e;
}

Eval quad_lgamma01() {
    return integrate_finite([](double x) { return std::lgamma(x); }, 0.0, 1.0, precise_spec(1e-14));
}

std::vector<Entry> build() {
    using P = Provenance;
    std::vector<Entry> r;
    r.push_back(make("catalan", "0.91596559", P::paper, "Catalan's constant G",
                     {{"clausen", [] { return clausen(2, kPi / 2); }},
                      {"cosint_form", [] { return catalan(); }},
                      {"L4", [] { return L4_addison(2.0); }},
                      {"hurwitz_combo", [] { return dirichlet_L4(2.0, L4Method::hurwitz_combo); }}}));
    r.push_back(make("somos2", "1.66169", P::paper, "ln sigma_2; the reference is sigma_2",
                     {{"p1_integral", [] { return somos_ln(2.0, SomosMethod::p1_integral); }},
                      {"exp_integral", [] { return somos_ln(2.0, SomosMethod::exp_integral); }},
                      {"polylog_series", [] { return somos_ln(2.0, SomosMethod::polylog_series); }}},
                     true));
    r.push_back(make("kinkelin", "-0.165421", P::paper, "Kinkelin's constant zeta'(-1)",
                     {{"laplace_a1", [] { return kinkelin(KinkelinMethod::laplace_a1); }},
                      {"gamma_moment_a2", [] { return kinkelin(KinkelinMethod::gamma_moment_a2); }},
                      {"series_a5", [] { return kinkelin(KinkelinMethod::series_a5); }},
                      {"p1_a8", [] { return kinkelin(KinkelinMethod::p1_a8); }}}));
    r.push_back(make("gamma_moment_x", "0.92746", P::paper, "int_0^1 x Gamma(x) dx",
                     {{"taylor_a3", [] { return gamma_moment_x(MomentXMethod::taylor_a3); }},
                      {"laplace_a10", [] { return gamma_moment_x(MomentXMethod::laplace_a10); }},
                      {"direct", [] { return gamma_moment_x(MomentXMethod::direct); }}}));
    r.push_back(make("gamma_moment_sin", "0.872427", P::paper, "int_0^1 sin(x) Gamma(x) dx",
                     {{"laplace_a9", [] { return gamma_moment_sin(1.0, MomentSinMethod::laplace_a9); }},
                      {"onef2_a12", [] { return gamma_moment_sin(1.0, MomentSinMethod::onef2_a12); }},
                      {"antiderivative_a13",
                       [] { return gamma_moment_sin(1.0, MomentSinMethod::antiderivative_a13); }}}));
    r.push_back(make("glaisher_lnA", "0.24875447703378426959", P::derived_oracle, "ln A, Glaisher-Kinkelin",
                     {{"zeta_nderiv", [] { return glaisher_lnA(); }},
                      {"addison_k2",
                       [] {
                           Eval z = zeta_prime_addison(2.0, 2);
                           Eval r = scaled(z, -1.0 / (2.0 * kPi * kPi));
                           r.value += (std::log(2.0 * kPi) + std::numbers::egamma) / 12.0;
                           return with_floor(r);
                       }},
                      {"kinkelin", [] {
                           Eval r = scaled(kinkelin(KinkelinMethod::laplace_a1), -1.0);
                           r.value += 1.0 / 12.0;
                           return with_floor(r);
                       }}}));
    r.push_back(make("zeta_prime2", "-0.93754825431584375370", P::derived_oracle, "zeta'(2)",
                     {{"zeta_nderiv", [] { return zeta_nderiv(1, 2.0); }},
                      {"addison_k2", [] { return zeta_prime_addison(2.0, 2); }},
                      {"addison_k3", [] { return zeta_prime_addison(2.0, 3); }},
                      {"addison_k4", [] { return zeta_prime_addison(2.0, 4); }},
                      {"hurwitz_addison", [] { return hurwitz_prime_addison(2.0, 1.0); }}}));
    r.push_back(make("euler_gamma", "0.57721566490153286061", P::derived_oracle, "Euler's constant",
                     {{"addison_form1", [] { return gamma_addison(1); }},
                      {"addison_form2", [] { return gamma_addison(2); }},
                      {"vacca", [] { return gamma_vacca(2); }},
                      {"zeta_alternating", [] { return scaled(zeta_gamma_series(1), -1.0); }},
                      {"zeta_minus_one", [] { return scaled(zeta_gamma_series(2), -1.0); }}}));
    r.push_back(make("ln_sqrt_2pi", "0.91893853320467274178", P::derived_oracle, "int_0^1 ln Gamma = ln sqrt(2 pi)",
                     {{"addison", [] { return log_sqrt_2pi_addison(); }}, {"quadrature", quad_lgamma01}}));
    r.push_back(make("L4_prime1", "0.19290131679691242936", P::derived_oracle, "L'(1) for the character mod 4",
                     {{"stieltjes", [] { return L4_prime1(); }},
                      {"gamma_closed", [] { return with_floor(exact(L4_prime1_closed_form())); }}}));
    r.push_back(make("zeta3", "1.2020569031595942854", P::derived_oracle, "zeta(3) = H(2, 1)",
                     {{"zeta_p1", [] { return zeta(3.0); }}, {"euler_sum", [] { return euler_sum_H(2.0, 1.0); }}}));
    return r;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = build();
    return e;
}

const Entry& find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.record.name == name) return e;
    throw DomainError("unknown constant: " + name);
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::paper ? "paper" : "derived-oracle"; }

const std::vector<ConstantRecord>& constant_registry() {
    static const std::vector<ConstantRecord> recs = [] {
        std::vector<ConstantRecord> v;
        for (const auto& e : entries()) v.push_back(e.record);
        return v;
    }();
    return recs;
}

const ConstantRecord& find_constant(const std::string& name) { return find_entry(name).record; }

Eval compute_constant(const std::string& name, const std::string& method) {
    for (const auto& m : find_entry(name).methods)
        if (m.id == method) return m.run();
    throw DomainError("unknown method '" + method + "' for constant " + name);
}

double reference_precision(const ConstantRecord& rec) {
    const std::string& t = rec.reference_text;
    auto dot = t.find('.');
    int decimals = dot == std::string::npos ? 0 : static_cast<int>(t.size() - dot - 1);
    return 0.5 * std::pow(10.0, -decimals);
}

nlohmann::json registry_to_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rec : constant_registry())
        out.push_back({{"name", rec.name},
                       {"reference", rec.reference},
                       {"provenance", to_string(rec.provenance)},
                       {"methods", rec.methods}});
    return out;
}

Report run_constant(const std::string& name, const std::string& method, double slack) {
    const Entry& e = find_entry(name);
    std::vector<const Method*> chosen;
    for (const auto& m : e.methods)
        if (method == "all" || m.id == method) chosen.push_back(&m);
    if (chosen.empty()) throw DomainError("unknown method '" + method + "' for constant " + name);

    struct Outcome {
        ReportRow row;
        bool failed = false;
    };
    std::vector<std::future<Outcome>> jobs;
    for (const Method* m : chosen)
        jobs.push_back(std::async(std::launch::async, [m] {
            Outcome o;
            o.row.method = m->id;
            auto t0 = std::chrono::steady_clock::now();
            Eval v;
            try {
                v = m->run();
            } catch (const NumericFailure& f) {
                v = f.partial();
                o.failed = true;
            }
            o.row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            o.row.value = v.value;
            o.row.err_est = v.err_est;
            o.row.work = v.work;
            return o;
        }));
    Report rep;
    rep.target = name;
    bool any_failed = false;
    for (auto& j : jobs) {
        Outcome o = j.get();  // std::future rethrows DomainError here
        any_failed = any_failed || o.failed;
        rep.rows.push_back(o.row);
    }
    rep.verdict = any_failed ? Verdict::partial : pairwise_verdict(rep.rows, slack);
    if (e.record.reference_is_exp)
        for (const auto& row : rep.rows) rep.notes.emplace_back("exp(" + row.method + ")", std::exp(row.value));
    return rep;
}

}  // namespace addison
