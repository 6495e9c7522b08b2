// gauss-sum: exact and numeric evaluation of normalized quadratic Gauss sums
// Φ(a,b), plus verification sweeps for the identities they satisfy.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 invalid input,
// 3 size bound exceeded.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gausssum/acceptance.hpp"
#include "gausssum/errors.hpp"
#include "gausssum/evaluator.hpp"
#include "gausssum/modular.hpp"
#include "gausssum/oracle.hpp"
#include "gausssum/render.hpp"
#include "gausssum/sweep.hpp"

using namespace gausssum;

namespace {

struct GlobalFlags {
    bool json = false;
    double tol = 1e-6;
    int workers = 0;
    std::int64_t max_modulus = 0;  // 0 → per-operation defaults

    std::int64_t sum_bound() const { return max_modulus > 0 ? max_modulus : kDefaultSumBound; }
    std::int64_t factor_bound() const {
        return max_modulus > 0 ? max_modulus : kDefaultFactorBound;
    }
    std::int64_t count_bound() const {
        return max_modulus > 0 ? max_modulus : kDefaultCountBound;
    }
};

void print_numeric(const ComplexApprox& c) {
    std::printf("numeric: re=%.17g im=%.17g err<=%.3g\n", c.re, c.im, c.err);
}

int cmd_eval(const GlobalFlags& g, std::int64_t a, std::int64_t b, bool trace,
             bool assume_ls) {
    std::optional<EvalResult> exact;
    bool used_ls = false;
    if (b % 2 == 0) {
        exact = eval_phi({a, b}, g.factor_bound());
    } else if (assume_ls && a % 2 == 0) {
        exact = EvalResult{eval_phi_assuming_ls(a, b, g.factor_bound()), {}};
        used_ls = true;
    }
    const ComplexApprox numeric = phi_numeric(a, b, g.sum_bound());
    if (g.json) {
        ordered_json j;
        j["modulus"] = a;
        j["numerator"] = b;
        j["exact"] = exact ? exact_to_json(exact->value) : ordered_json(nullptr);
        j["assumes_ls"] = used_ls;
        j["numeric"] = approx_to_json(numeric);
        if (trace && exact && !used_ls) j["trace"] = trace_to_json(exact->trace);
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (exact)
        std::printf("exact: %s%s\n", exact->value.str().c_str(),
                    used_ls ? "  (assumes-LS)" : "");
    else
        std::printf("exact: n/a (odd numerator)\n");
    print_numeric(numeric);
    if (trace && exact && !used_ls)
        for (const TraceStep& s : exact->trace.steps)
            std::printf("  %-15s %s\n", step_rule_name(s.rule), s.note.c_str());
    return 0;
}

int report_sweep(const GlobalFlags& g, const SweepSummary& s) {
    if (g.json) {
        std::cout << summary_to_json(s).dump() << "\n";
    } else {
        std::printf("%s: %lld cases, %lld passes, %zu failures (%.2fs)\n",
                    s.description.c_str(), static_cast<long long>(s.total),
                    static_cast<long long>(s.passes), s.failures.size(), s.wall_seconds);
        for (std::size_t i = 0; i < s.failures.size() && i < 10; ++i) {
            const VerificationReport& r = s.failures[i];
            std::printf("  FAIL %s%s diff=%.3g\n", r.query.c_str(),
                        r.failing_step ? (" [" + *r.failing_step + "]").c_str() : "",
                        r.difference);
        }
    }
    return s.failures.empty() ? 0 : 1;
}

int cmd_verify_ls(const GlobalFlags& g, std::int64_t max_a, std::int64_t max_b) {
    const int workers = g.workers > 0 ? g.workers : default_workers();
    const SweepSummary s = run_sweep(
        "verify-ls a<=" + std::to_string(max_a) + " b<=" + std::to_string(max_b),
        max_a * max_b, workers, [&](std::int64_t idx) -> std::optional<VerificationReport> {
            const std::int64_t a = idx / max_b + 1;
            const std::int64_t b = idx % max_b + 1;
            VerificationReport rep = verify_ls(a, b, g.tol, g.sum_bound());
            if (!rep.pass) return rep;
            return std::nullopt;
        });
    return report_sweep(g, s);
}

int cmd_count_sqrt(const GlobalFlags& g, std::int64_t t, std::int64_t m) {
    const std::int64_t brute = count_sqrt_brute(t, m, g.count_bound());
    const auto pp = as_prime_power(m);
    std::optional<std::int64_t> closed;
    if (m == 1)
        closed = 1;  // x ≡ 0 is the single residue
    else if (pp)
        closed = count_sqrt_closed(t, pp->first, pp->second);
    const bool match = !closed || *closed == brute;
    if (g.json) {
        ordered_json j;
        j["t"] = t;
        j["m"] = m;
        j["brute"] = brute;
        j["closed"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
        j["prime_power"] = static_cast<bool>(pp);
        j["match"] = match;
        std::cout << j.dump() << "\n";
    } else {
        std::printf("brute: %lld\n", static_cast<long long>(brute));
        if (closed)
            std::printf("closed: %lld\n", static_cast<long long>(*closed));
        else
            std::printf("closed: n/a (not a prime power)\n");
        if (!match) std::printf("MISMATCH between closed form and enumeration\n");
    }
    return match ? 0 : 1;
}

int cmd_fourier(const GlobalFlags& g, std::int64_t p, int k, std::int64_t l) {
    const VerificationReport rep = fourier_check(p, k, l, g.tol, g.sum_bound());
    if (g.json)
        std::cout << report_to_json(rep).dump() << "\n";
    else
        std::printf("%s: %s diff=%.3g tol=%.3g\n", rep.query.c_str(),
                    rep.pass ? "pass" : "fail", rep.difference, rep.tolerance);
    return rep.pass ? 0 : 1;
}

int cmd_sylvester(const GlobalFlags& g, std::int64_t a, std::int64_t b) {
    const std::int64_t closed = sylvester_count(a, b);
    const std::int64_t brute = sylvester_brute(a, b, g.count_bound());
    const bool match = closed == brute;
    if (g.json) {
        ordered_json j{{"a", a}, {"b", b}, {"closed", closed}, {"brute", brute},
                       {"match", match}};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("closed: %lld\nbrute: %lld\n", static_cast<long long>(closed),
                    static_cast<long long>(brute));
        if (!match) std::printf("MISMATCH between closed form and enumeration\n");
    }
    return match ? 0 : 1;
}

int cmd_table(const GlobalFlags& g, const TableOptions& topt) {
    const ordered_json table = make_table(topt);
    if (g.json)
        std::cout << table.dump() << "\n";
    else
        std::cout << table_to_csv(table);
    return 0;
}

int cmd_self_test(const GlobalFlags& g) {
    AcceptanceOptions opt;
    opt.tol = g.tol;
    opt.workers = g.workers;
    if (!g.json) opt.log = &std::cout;
    const auto results = run_acceptance(opt);
    if (g.json) {
        std::cout << criteria_to_json(results).dump() << "\n";
    } else {
        std::printf("%s\n", all_passed(results) ? "self-test: all criteria passed"
                                                : "self-test: FAILURES");
    }
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalized quadratic Gauss sums: exact evaluation and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_option("--tol", g.tol, "numeric tolerance")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads (0 = available parallelism)");
    app.add_option("--max-modulus", g.max_modulus, "override size bounds");

    auto* eval = app.add_subcommand("eval", "evaluate phi(a,b)");
    std::int64_t ev_a = 1, ev_b = 0;
    bool ev_trace = false, ev_assume = false;
    eval->add_option("a", ev_a, "modulus (positive)")->required();
    eval->add_option("b", ev_b, "numerator")->required();
    eval->add_flag("--trace", ev_trace, "print the derivation steps");
    eval->add_flag("--assume-ls", ev_assume,
                   "evaluate odd numerators over even moduli via the relation");

    auto* vls = app.add_subcommand("verify-ls", "check phi(a,2b) = sqrt(i)*phi(2b,-a)");
    std::int64_t vls_a = 50, vls_b = 50;
    vls->add_option("--max-a", vls_a, "a range 1..max-a")->capture_default_str();
    vls->add_option("--max-b", vls_b, "b range 1..max-b")->capture_default_str();

    auto* cs = app.add_subcommand("count-sqrt", "count x with x^2 = t (mod m)");
    std::int64_t cs_t = 0, cs_m = 1;
    cs->add_option("t", cs_t, "target residue")->required();
    cs->add_option("m", cs_m, "modulus (positive)")->required();

    auto* fc = app.add_subcommand("fourier-check",
                                  "finite Fourier expansion of phi(p^k,2l)");
    std::int64_t fc_p = 3, fc_l = 1;
    int fc_k = 1;
    fc->add_option("--p", fc_p, "prime")->required();
    fc->add_option("--k", fc_k, "exponent")->required();
    fc->add_option("--l", fc_l, "numerator/2, coprime to p")->capture_default_str();

    auto* sy = app.add_subcommand("sylvester", "lattice count (a-1)(b-1)/2 vs enumeration");
    std::int64_t sy_a = 1, sy_b = 1;
    sy->add_option("a", sy_a, "odd positive")->required();
    sy->add_option("b", sy_b, "odd positive, coprime to a")->required();

    auto* tb = app.add_subcommand("table", "emit a value table (CSV, or JSON with --json)");
    TableOptions topt;
    tb->add_option("kind", topt.kind, "lemma1|prop10|prop11|reflection")->required();
    tb->add_option("--max", topt.max, "rows for lemma1")->capture_default_str();
    tb->add_option("--p", topt.p, "prime for prop10/reflection")->capture_default_str();
    tb->add_option("--max-k", topt.max_k, "max exponent")->capture_default_str();
    tb->add_option("--l", topt.l, "numerator/2")->capture_default_str();

    app.add_subcommand("self-test", "run the full acceptance suite");

    try {
        app.parse(argc, argv);

        if (eval->parsed()) return cmd_eval(g, ev_a, ev_b, ev_trace, ev_assume);
        if (vls->parsed()) return cmd_verify_ls(g, vls_a, vls_b);
        if (cs->parsed()) return cmd_count_sqrt(g, cs_t, cs_m);
        if (fc->parsed()) return cmd_fourier(g, fc_p, fc_k, fc_l);
        if (sy->parsed()) return cmd_sylvester(g, sy_a, sy_b);
        if (tb->parsed()) {
            topt.sum_bound = g.sum_bound();
            return cmd_table(g, topt);
        }
        return cmd_self_test(g);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bound_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
