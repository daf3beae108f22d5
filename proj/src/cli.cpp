#include "qplane/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qplane/elaborate.hpp"
#include "qplane/identities.hpp"

namespace qplane {

namespace {

constexpr int kDefaultOrder = 6;
constexpr int kMaxNumeric = 64;  // cap on every numeric command-line input

int emit_reports(const std::vector<IdentityReport>& reports,
                 const std::string& format, std::ostream& out) {
    if (format == "json") {
        if (reports.size() == 1) {
            out << report_json(reports.front()) << "\n";
        } else {
            out << "[";
            for (size_t i = 0; i < reports.size(); ++i)
                out << (i == 0 ? "\n" : ",\n") << report_json(reports[i]);
            out << "\n]\n";
        }
    } else {
        for (const auto& r : reports)
            out << report_text(r) << "\n";
    }
    bool all_hold = std::all_of(reports.begin(), reports.end(),
                                [](const IdentityReport& r) { return r.holds; });
    return all_hold ? 0 : 1;
}

int cmd_normalize(const std::string& input, int order, const std::string& format,
                  std::ostream& out) {
    ExprPtr ast = parse(input);
    PlaneElement e = elaborate(*ast, TruncationOrder(order));
    if (format == "json") {
        nlohmann::ordered_json j;
        j["input"] = input;
        j["order"] = order;
        j["normalized"] = e.to_string();
        out << j.dump() << "\n";
    } else {
        out << e.to_string() << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& input, const std::string& q_text, int order,
             const std::string& format, std::ostream& out) {
    ExprPtr ast = parse(input);
    PlaneElement e = elaborate(*ast, TruncationOrder(order));
    Rational q0 = Rational::from_string(q_text);
    PlaneElement value = evaluate_coefficients(e, q0);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["input"] = input;
        j["order"] = order;
        j["q"] = q0.to_string();
        j["value"] = value.to_string();
        out << j.dump() << "\n";
    } else {
        out << value.to_string() << "\n";
    }
    return 0;
}

struct CheckRequest {
    IdentityId id;
    std::vector<long> params;
};

// Maps the `check` arguments onto one suite entry, rejecting flags that do
// not belong to the chosen identity.
CheckRequest resolve_check(const std::string& name, int order, bool order_given,
                        std::optional<int> m, std::optional<int> n) {
    auto reject = [&](const std::string& message) -> CheckRequest {
        throw CLI::ValidationError("check", message);
    };
    auto order_only = [&](IdentityId id) {
        if (m || n)
            reject("--m/--n only apply to 'check coeff5' and 'check xpower'");
        return CheckRequest{id, {order}};
    };
    if (name == "direct") return order_only(IdentityId::direct);
    if (name == "reversed") return order_only(IdentityId::reversed);
    if (name == "intermediate") return order_only(IdentityId::intermediate);
    if (name == "qbinom") return order_only(IdentityId::qbinom);
    if (name == "classical") return order_only(IdentityId::classical_limit);
    if (name == "xpower") {
        if (order_given || m)
            reject("'check xpower' takes only --n");
        if (!n)
            reject("'check xpower' requires --n");
        if (*n < 1)
            reject("'check xpower' requires --n >= 1");
        return CheckRequest{IdentityId::xpower, {*n}};
    }
    if (name == "coeff5") {
        if (order_given)
            reject("'check coeff5' takes --m and --n, not --order");
        if (!m || !n)
            reject("'check coeff5' requires both --m and --n");
        return CheckRequest{IdentityId::coeff5, {*m, *n}};
    }
    return reject("unknown identity '" + name +
                  "' (expected direct, reversed, intermediate, xpower, coeff5, "
                  "qbinom, or classical)");
}

std::vector<SuiteEntry> suite_battery(int max_order, int max_mn, int max_xpower) {
    std::vector<SuiteEntry> config;
    for (long N = 0; N <= max_order; ++N)
        config.push_back({IdentityId::direct, {N}});
    for (long N = 0; N <= max_order; ++N)
        config.push_back({IdentityId::reversed, {N}});
    for (long N = 0; N <= std::min(max_order, 8); ++N)
        config.push_back({IdentityId::intermediate, {N}});
    for (long n = 1; n <= max_xpower; ++n)
        config.push_back({IdentityId::xpower, {n}});
    for (long m = 0; m <= max_mn; ++m)
        for (long n = 0; n <= max_mn; ++n)
            config.push_back({IdentityId::coeff5, {m, n}});
    for (long n = 0; n <= max_mn; ++n)
        config.push_back({IdentityId::qbinom, {n}});
    config.push_back({IdentityId::classical_limit, {max_order}});
    return config;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symbolic calculator and identity checker for the "
                 "quantum plane x*y = qinv*y*x",
                 "qplane"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string expr_text;
    int order = kDefaultOrder;

    CLI::App* normalize = app.add_subcommand(
        "normalize", "expand an expression into normal-ordered form");
    normalize->add_option("expr", expr_text, "expression to normalize")->required();
    normalize->add_option("--order", order, "total-degree cutoff")
        ->check(CLI::Range(0, kMaxNumeric))
        ->capture_default_str();
    add_format(normalize);

    std::string identity;
    std::optional<int> m_opt, n_opt;
    CLI::App* check = app.add_subcommand(
        "check", "verify one identity exactly and report the discrepancy");
    check->add_option("identity", identity,
                      "direct|reversed|intermediate|xpower|coeff5|qbinom|classical")
        ->required();
    check->add_option("--order", order, "total-degree cutoff / expansion size")
        ->check(CLI::Range(0, kMaxNumeric))
        ->capture_default_str();
    check->add_option("--m", m_opt, "first index (coeff5)")
        ->check(CLI::Range(0, kMaxNumeric));
    check->add_option("--n", n_opt, "second index (coeff5) or power (xpower)")
        ->check(CLI::Range(0, kMaxNumeric));
    add_format(check);

    int max_order = 10, max_mn = 15, max_xpower = 25;
    unsigned threads = 0;
    CLI::App* suite = app.add_subcommand(
        "suite", "run the full identity battery across parameter ranges");
    suite->add_option("--max-order", max_order,
                      "largest truncation order for the series checks")
        ->check(CLI::Range(0, kMaxNumeric))
        ->capture_default_str();
    suite->add_option("--max-mn", max_mn,
                      "largest index for the coefficient and binomial checks")
        ->check(CLI::Range(0, kMaxNumeric))
        ->capture_default_str();
    suite->add_option("--max-xpower", max_xpower,
                      "largest power for the x-power expansion check")
        ->check(CLI::Range(1, kMaxNumeric))
        ->capture_default_str();
    suite->add_option("--threads", threads, "worker threads (0 = auto)")
        ->check(CLI::Range(0, 256))
        ->capture_default_str();
    add_format(suite);

    std::string q_text;
    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate an expression's coefficients at a rational q");
    eval->add_option("expr", expr_text, "expression to evaluate")->required();
    eval->add_option("--q", q_text, "rational value A/B for q")->required();
    eval->add_option("--order", order, "total-degree cutoff")
        ->check(CLI::Range(0, kMaxNumeric))
        ->capture_default_str();
    add_format(eval);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (normalize->parsed())
            return cmd_normalize(expr_text, order, format, out);
        if (check->parsed()) {
            CheckRequest request = resolve_check(identity, order,
                                           check->count("--order") > 0, m_opt,
                                           n_opt);
            IdentityReport report = run_check({request.id, request.params});
            return emit_reports({report}, format, out);
        }
        if (suite->parsed()) {
            auto reports =
                run_suite(suite_battery(max_order, max_mn, max_xpower), threads);
            return emit_reports(reports, format, out);
        }
        if (eval->parsed())
            return cmd_eval(expr_text, q_text, order, format, out);
    } catch (const CLI::ValidationError& e) {
        err << "qplane: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "qplane: " << e.what() << "\n";
        return 2;
    } catch (const ElaborateError& e) {
        err << "qplane: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "qplane: error: " << e.what() << "\n";
        return 2;
    }
    err << "qplane: no command given\n";
    return 2;
}

}  // namespace qplane
