#include "gausssum/render.hpp"

#include <cstdio>
#include <stdexcept>

#include "gausssum/modular.hpp"
#include "gausssum/oracle.hpp"

namespace gausssum {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ordered_json exact_to_json(const ExactGaussValue& v) {
    return ordered_json::parse(v.to_json());
}

ordered_json approx_to_json(const ComplexApprox& c) {
    return ordered_json{{"re", c.re}, {"im", c.im}, {"err", c.err}};
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["query"] = r.query;
    j["exact"] = r.exact ? exact_to_json(*r.exact) : ordered_json(nullptr);
    j["lhs"] = approx_to_json(r.lhs);
    j["rhs"] = approx_to_json(r.rhs);
    j["difference"] = r.difference;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["failing_step"] = r.failing_step ? ordered_json(*r.failing_step) : ordered_json(nullptr);
    return j;
}

ordered_json summary_to_json(const SweepSummary& s, std::size_t max_failures) {
    ordered_json j;
    j["description"] = s.description;
    j["total"] = s.total;
    j["passes"] = s.passes;
    j["failures"] = static_cast<std::int64_t>(s.failures.size());
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < s.failures.size() && i < max_failures; ++i)
        arr.push_back(report_to_json(s.failures[i]));
    j["failure_reports"] = std::move(arr);
    j["wall_seconds"] = s.wall_seconds;
    return j;
}

ordered_json trace_to_json(const DerivationTrace& t) {
    ordered_json steps = ordered_json::array();
    for (const TraceStep& s : t.steps) {
        steps.push_back(ordered_json{{"rule", step_rule_name(s.rule)},
                                     {"modulus", s.modulus},
                                     {"numerator", s.numerator},
                                     {"factor", exact_to_json(s.factor)},
                                     {"note", s.note}});
    }
    return ordered_json{{"modulus", t.modulus}, {"numerator", t.numerator},
                        {"steps", std::move(steps)}};
}

ordered_json criteria_to_json(const std::vector<CriterionResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const CriterionResult& r : results) {
        arr.push_back(ordered_json{{"index", r.index},
                                   {"name", r.name},
                                   {"pass", r.passed},
                                   {"cases", r.total},
                                   {"failures", r.failures},
                                   {"seconds", r.seconds},
                                   {"detail", r.detail}});
    }
    return ordered_json{{"criteria", std::move(arr)},
                        {"pass", all_passed(results)}};
}

namespace {

ordered_json table_row(std::initializer_list<std::pair<const char*, std::int64_t>> inputs,
                       const ExactGaussValue& exact, const ComplexApprox& numeric) {
    ordered_json row;
    for (const auto& [name, value] : inputs) row[name] = value;
    row["exact"] = exact_to_json(exact);
    row["re"] = numeric.re;
    row["im"] = numeric.im;
    return row;
}

}  // namespace

ordered_json make_table(const TableOptions& opt) {
    ordered_json rows = ordered_json::array();
    ordered_json columns = ordered_json::array();
    if (opt.kind == "lemma1") {
        columns = {"a", "exact", "re", "im"};
        for (std::int64_t a = 1; a <= opt.max; ++a)
            rows.push_back(table_row({{"a", a}}, phi_base(a),
                                     phi_numeric(a, 2, opt.sum_bound)));
    } else if (opt.kind == "prop10") {
        columns = {"p", "k", "l", "exact", "re", "im"};
        for (int k = 1; k <= opt.max_k; ++k) {
            rows.push_back(table_row({{"p", opt.p}, {"k", k}, {"l", opt.l}},
                                     phi_odd_prime_power(opt.p, k, opt.l),
                                     phi_numeric(ipow(opt.p, k), 2 * opt.l, opt.sum_bound)));
        }
    } else if (opt.kind == "prop11") {
        columns = {"k", "l", "exact", "re", "im"};
        for (int k = 1; k <= opt.max_k; ++k) {
            rows.push_back(table_row({{"k", k}, {"l", opt.l}}, phi_two_power(k, opt.l),
                                     phi_numeric(ipow(2, k), 2 * opt.l, opt.sum_bound)));
        }
    } else if (opt.kind == "reflection") {
        columns = {"p", "k", "l", "exact", "re", "im"};
        for (int k = 1; k <= opt.max_k; ++k) {
            const std::int64_t q = ipow(opt.p, k);
            const ComplexApprox product =
                approx_mul(phi_numeric(q, 2 * opt.l, opt.sum_bound),
                           phi_numeric(q, -2 * opt.l, opt.sum_bound));
            rows.push_back(table_row({{"p", opt.p}, {"k", k}, {"l", opt.l}},
                                     reflection_product(opt.p, k, opt.l), product));
        }
    } else {
        throw std::invalid_argument("unknown table kind '" + opt.kind + "'");
    }
    return ordered_json{{"kind", opt.kind}, {"columns", std::move(columns)},
                        {"rows", std::move(rows)}};
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string table_to_csv(const ordered_json& table) {
    std::string out;
    const auto& columns = table.at("columns");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ",";
        out += columns[i].get<std::string>();
    }
    out += "\n";
    for (const auto& row : table.at("rows")) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ",";
            const std::string col = columns[i].get<std::string>();
            const auto& cell = row.at(col);
            if (col == "exact")
                out += csv_quote(cell.dump());
            else if (cell.is_number_float())
                out += format_double(cell.get<double>());
            else
                out += cell.dump();
        }
        out += "\n";
    }
    return out;
}

}  // namespace gausssum
