#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <string_view>

#include "qplab/families.hpp"
#include "qplab/mock_theta.hpp"
#include "qplab/partitions.hpp"
#include "qplab/qengine.hpp"
#include "qplab/registry.hpp"

namespace qplab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<std::size_t> env_max_order() {
    const char* raw = std::getenv("QPLAB_MAX_ORDER");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(raw, &pos);
    } catch (const std::exception&) {
        throw UsageError("QPLAB_MAX_ORDER must be a non-negative integer");
    }
    if (pos != std::string_view(raw).size()) throw UsageError("QPLAB_MAX_ORDER must be a non-negative integer");
    return static_cast<std::size_t>(v);
}

std::size_t capped(std::size_t requested, const char* what, std::ostream& err) {
    const auto cap = env_max_order();
    if (cap && requested > *cap) {
        err << "note: " << what << " " << requested << " capped to " << *cap << " by QPLAB_MAX_ORDER\n";
        return *cap;
    }
    return requested;
}

std::string big(const BigInt& v) { return v.str(); }

json report_json(const IdentityReport& r) {
    json j;
    j["id"] = r.id;
    j["order"] = r.order_checked;
    j["status"] = std::string(to_string(r.status));
    if (r.mismatch) {
        j["mismatch"] = {{"n", r.mismatch->index}, {"lhs", big(r.mismatch->lhs)}, {"rhs", big(r.mismatch->rhs)}};
    } else {
        j["mismatch"] = nullptr;
    }
    j["notes"] = r.status == VerifyStatus::skipped && !r.skip_reason.empty()
                     ? (r.notes.empty() ? r.skip_reason : r.notes + " " + r.skip_reason)
                     : r.notes;
    j["elapsed_ms"] = r.elapsed.count();
    return j;
}

void print_report_line(const IdentityReport& r, std::ostream& out) {
    std::string label;
    switch (r.status) {
        case VerifyStatus::pass: label = "PASS"; break;
        case VerifyStatus::mismatch: label = r.negative_control ? "XFAIL" : "FAIL"; break;
        case VerifyStatus::skipped: label = "SKIP"; break;
    }
    out << std::left << std::setw(6) << label << std::setw(40) << r.id << " order " << r.order_checked;
    if (r.clamped) out << " (of " << r.order_requested << ")";
    if (r.mismatch) {
        out << "  first mismatch at q^" << r.mismatch->index << ": " << r.mismatch->lhs << " vs " << r.mismatch->rhs;
    }
    if (r.status == VerifyStatus::skipped) out << "  " << r.skip_reason;
    out << "  " << r.elapsed.count() << " ms\n";
}

int cmd_verify(const std::optional<std::string>& id, bool all, std::optional<std::size_t> order, std::size_t budget,
               unsigned threads, bool as_json, std::ostream& out, std::ostream& err) {
    if (id.has_value() == all) throw UsageError("verify needs exactly one of --id or --all");

    VerifyOptions options;
    options.enumeration_budget = capped(budget, "enumeration budget", err);
    options.threads = threads;
    if (order) {
        options.order = capped(*order, "order", err);
    } else if (const auto cap = env_max_order()) {
        options.order = *cap;  // a case default above the cap is still capped
    }

    std::vector<IdentityReport> reports;
    if (all) {
        reports = verify_all(options);
    } else {
        try {
            reports.push_back(verify(*id, options));
        } catch (const UnknownIdentity& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
    }

    if (as_json) {
        if (all) {
            json doc = json::array();
            for (const auto& r : reports) doc.push_back(report_json(r));
            out << doc.dump(2) << "\n";
        } else {
            out << report_json(reports.front()).dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) print_report_line(r, out);
        std::size_t passed = 0;
        for (const auto& r : reports) passed += r.status == VerifyStatus::pass;
        out << passed << " of " << reports.size() << " cases passed";
        if (all_as_expected(reports)) out << "; all as expected";
        out << "\n";
    }
    return all_as_expected(reports) ? kOk : kMismatch;
}

// "<numerator coefficients>/<factors>", e.g. "0,0,1,1/(1-q)(1-q^3)^2".
std::pair<std::vector<long long>, std::vector<BinomialFactor>> parse_rational(const std::string& spec) {
    const auto slash = spec.find('/');
    const std::string num_text = spec.substr(0, slash);
    std::vector<long long> numerator;
    std::stringstream ss(num_text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t pos = 0;
            numerator.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad numerator coefficient '" + item + "'");
        }
    }
    if (numerator.empty()) throw UsageError("empty numerator");

    std::vector<BinomialFactor> factors;
    if (slash == std::string::npos) return {numerator, factors};
    const std::string den = spec.substr(slash + 1);
    static const std::regex factor_re(R"(\(1([+-])q(?:\^(\d+))?\)(?:\^(\d+))?)");
    std::size_t consumed = 0;
    for (auto it = std::sregex_iterator(den.begin(), den.end(), factor_re); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (static_cast<std::size_t>(m.position()) != consumed) break;
        consumed += m.length();
        BinomialFactor f;
        f.sign = m[1] == "-" ? 1 : -1;
        f.exponent = m[2].matched ? std::stoul(m[2]) : 1;
        f.multiplicity = m[3].matched ? std::stoul(m[3]) : 1;
        if (f.exponent == 0 || f.multiplicity == 0) throw UsageError("factor exponents must be positive");
        factors.push_back(f);
    }
    if (consumed != den.size()) throw UsageError("bad denominator '" + den + "'; expected factors like (1-q^3)^2");
    return {numerator, factors};
}

Series coefficients_of(const std::string& target, std::size_t order) {
    if (target == "omega") return mock_theta({MockFunction::omega, MockForm::defining, ArgumentSign::plus}, order);
    if (target == "psi") return mock_theta({MockFunction::psi, MockForm::defining, ArgumentSign::plus}, order);
    if (target == "nu") return mock_theta({MockFunction::nu, MockForm::defining, ArgumentSign::plus}, order);
    if (target == "nu-neg") return mock_theta({MockFunction::nu, MockForm::defining, ArgumentSign::minus}, order);
    if (target == "theta") return theta_squares(order, false);
    if (target == "theta-alt") return theta_squares(order, true);
    if (target.rfind("family:", 0) == 0) {
        std::string rest = target.substr(7);
        bool signed_variant = false;
        if (const auto colon = rest.find(':'); colon != std::string::npos) {
            if (rest.substr(colon + 1) != "signed") throw UsageError("unknown family variant in '" + target + "'");
            signed_variant = true;
            rest.resize(colon);
        }
        const auto f = parse_family(rest);
        if (!f) throw UsageError("unknown family '" + rest + "'");
        return sum_over_smallest(family_templates(*f).get(signed_variant), order);
    }
    if (target.rfind("rational:", 0) == 0) {
        const auto [num, den] = parse_rational(target.substr(9));
        return rational_series(num, den, order);
    }
    throw UsageError("unknown target '" + target + "'");
}

int cmd_coeffs(const std::string& target, std::size_t order, bool csv, bool as_json, std::ostream& out,
               std::ostream& err) {
    if (csv && as_json) throw UsageError("--csv and --json are exclusive");
    order = capped(order, "order", err);
    Series s = [&] {
        try {
            return coefficients_of(target, order);
        } catch (const SeriesError& e) {
            throw UsageError(e.what());
        }
    }();
    const auto c = s.coeffs();
    if (as_json) {
        json values = json::array();
        for (const auto& v : c) values.push_back(big(v));
        out << json{{"target", target}, {"order", order}, {"coefficients", values}}.dump(2) << "\n";
    } else if (csv) {
        out << "n,coefficient\n";
        for (std::size_t n = 0; n < c.size(); ++n) out << n << "," << c[n] << "\n";
    } else {
        out << to_string(s) << "\n";
    }
    return kOk;
}

int cmd_enum(const std::string& family, std::size_t n, std::size_t budget, bool list, bool stats, std::ostream& out,
             std::ostream& err) {
    const auto f = parse_family(family);
    if (!f) throw UsageError("unknown family '" + family + "'");
    budget = capped(budget, "enumeration budget", err);
    if (n > budget) {
        throw UsageError("n = " + std::to_string(n) + " exceeds the enumeration budget " + std::to_string(budget));
    }
    const FamilySpec spec = family_spec(*f);
    if (list) {
        for (const auto& p : enumerate_family(spec, n)) out << to_listing(p) << "\n";
    } else {
        const FamilyTally tally = tally_family(spec, n);
        out << family_name(*f) << "(" << n << ") = " << tally.filtered(spec.filter) << "\n";
        out << "signed = " << count_family(spec, n, true) << "\n";
    }
    if (stats) {
        const FamilyTally tally = tally_family(spec, n);
        const std::string name(family_name(*f));
        const StatisticFilter filters[] = {{Parity::even, std::nullopt},
                                           {Parity::odd, std::nullopt},
                                           {std::nullopt, Parity::even},
                                           {std::nullopt, Parity::odd}};
        for (int j = 0; j < 4; ++j) out << name << j << "(" << n << ") = " << tally.filtered(filters[j]) << "\n";
    }
    return kOk;
}

int cmd_list(std::ostream& out) {
    for (const auto& c : list_identities()) {
        out << std::left << std::setw(40) << c.id << " " << c.description << "\n";
    }
    return kOk;
}

int cmd_show(const std::string& id, std::ostream& out, std::ostream& err) {
    try {
        const IdentityCase& c = find_identity(id);
        out << "id:       " << c.id << "\n"
            << "claim:    " << c.description << "\n"
            << "source:   " << c.source << "\n"
            << "order:    " << c.default_order << (c.enumeration_backed() ? " (enumeration-backed)" : "") << "\n"
            << "lhs:      " << describe(*c.lhs) << "\n"
            << "rhs:      " << describe(*c.rhs) << "\n";
        if (!c.notes.empty()) out << "notes:    " << c.notes << "\n";
        if (c.negative_control) out << "expected: mismatch (negative control)\n";
        for (const auto& r : rejected_readings()) {
            if (r.case_id != c.id) continue;
            const Comparison cmp = check(r);
            out << "rejected: " << r.description << "\n          ";
            if (cmp.mismatch) {
                out << "fails at q^" << cmp.mismatch->index << ": " << cmp.mismatch->lhs << " vs "
                    << cmp.mismatch->rhs << "\n";
            } else {
                out << "agrees through q^" << r.order << "\n";
            }
        }
        return kOk;
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series identities and two-color partition families"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "Check registered identities coefficient by coefficient");
    std::optional<std::string> id;
    bool all = false;
    std::optional<std::size_t> order;
    std::size_t budget = 24;
    unsigned threads = 0;
    bool as_json = false;
    verify_cmd->add_option("--id", id, "Identity id (see `list`)");
    verify_cmd->add_flag("--all", all, "Verify every registered identity");
    verify_cmd->add_option("--order", order, "Truncation order N (coefficients 0..N-1 compared)");
    verify_cmd->add_option("--enum-budget", budget, "Largest order for enumeration-backed cases")
        ->capture_default_str();
    verify_cmd->add_option("--threads", threads, "Worker threads; 0 uses the hardware concurrency");
    verify_cmd->add_flag("--json", as_json, "Emit JSON reports");

    auto* coeffs_cmd = app.add_subcommand("coeffs", "Print series coefficients 0..N");
    std::string target;
    std::size_t coeff_order = 60;
    bool csv = false;
    bool coeff_json = false;
    coeffs_cmd
        ->add_option("--target", target,
                     "omega|psi|nu|nu-neg|theta|theta-alt|family:<id>[:signed]|rational:<num>/<factors>")
        ->required();
    coeffs_cmd->add_option("--order", coeff_order, "Highest coefficient index")->capture_default_str();
    coeffs_cmd->add_flag("--csv", csv, "CSV with header n,coefficient");
    coeffs_cmd->add_flag("--json", coeff_json, "JSON document");

    auto* enum_cmd = app.add_subcommand("enum", "Enumerate a two-color partition family");
    std::string family;
    std::size_t n = 0;
    std::size_t enum_budget = 24;
    bool list = false;
    bool stats = false;
    enum_cmd->add_option("--family", family, "E|F|Tomega|Tpsi|Tnu|A|B|C")->required();
    enum_cmd->add_option("--n", n, "Partitioned integer")->required();
    enum_cmd->add_option("--enum-budget", enum_budget, "Largest admissible n")->capture_default_str();
    enum_cmd->add_flag("--list", list, "List the partitions, one per line");
    enum_cmd->add_flag("--stats", stats, "Counts by parity of #even parts and of #parts");

    auto* list_cmd = app.add_subcommand("list", "List registered identities");
    auto* show_cmd = app.add_subcommand("show", "Show how both sides of an identity are computed");
    std::string show_id;
    show_cmd->add_option("--id", show_id, "Identity id")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (*verify_cmd) return cmd_verify(id, all, order, budget, threads, as_json, out, err);
        if (*coeffs_cmd) return cmd_coeffs(target, coeff_order, csv, coeff_json, out, err);
        if (*enum_cmd) return cmd_enum(family, n, enum_budget, list, stats, out, err);
        if (*list_cmd) return cmd_list(out);
        if (*show_cmd) return cmd_show(show_id, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qplab::cli
