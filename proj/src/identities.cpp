#include "qplane/identities.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qplane/qcombinatorics.hpp"

namespace qplane {

namespace {

using Discrepancy = std::variant<std::monostate, RatFun, PlaneElement>;

bool discrepancy_is_zero(const Discrepancy& d) {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return false;
            else
                return v.is_zero();
        },
        d);
}

std::string discrepancy_text(const Discrepancy& d) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return "n/a";
            else
                return v.to_string();
        },
        d);
}

template <typename Body>
IdentityReport timed_check(IdentityId id, std::vector<long> params, Body&& body) {
    IdentityReport report;
    report.id = id;
    report.params = std::move(params);
    auto start = std::chrono::steady_clock::now();
    report.discrepancy = body();
    report.elapsed = std::chrono::steady_clock::now() - start;
    report.holds = discrepancy_is_zero(report.discrepancy);
    return report;
}

PlaneElement correction_term() {
    LaurentPoly q_minus_1 = LaurentPoly::q_power(1) - LaurentPoly::q_power(0);
    return PlaneElement::monomial(RatFun(q_minus_1), 1, 1);
}

// Whether params[0] is a truncation/expansion order for JSON reporting.
bool first_param_is_order(IdentityId id) {
    switch (id) {
        case IdentityId::direct:
        case IdentityId::reversed:
        case IdentityId::intermediate:
        case IdentityId::qbinom:
        case IdentityId::classical_limit:
            return true;
        case IdentityId::xpower:
        case IdentityId::coeff5:
            return false;
    }
    return false;
}

std::string params_text(const IdentityReport& report) {
    std::ostringstream out;
    const auto& p = report.params;
    switch (report.id) {
        case IdentityId::direct:
        case IdentityId::reversed:
        case IdentityId::intermediate:
        case IdentityId::classical_limit:
            if (!p.empty()) out << "order=" << p[0];
            break;
        case IdentityId::xpower:
        case IdentityId::qbinom:
            if (!p.empty()) out << "n=" << p[0];
            break;
        case IdentityId::coeff5:
            if (p.size() >= 2) out << "m=" << p[0] << " n=" << p[1];
            break;
    }
    return out.str();
}

}  // namespace

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::direct: return "direct";
        case IdentityId::reversed: return "reversed";
        case IdentityId::intermediate: return "intermediate";
        case IdentityId::xpower: return "xpower";
        case IdentityId::coeff5: return "coeff5";
        case IdentityId::qbinom: return "qbinom";
        case IdentityId::classical_limit: return "classical";
    }
    throw std::invalid_argument("identity_name: unknown identity id");
}

PlaneElement reversed_argument() {
    return PlaneElement::x() + PlaneElement::y() + correction_term();
}

std::pair<PlaneElement, PlaneElement> direct_sides(TruncationOrder cutoff) {
    PlaneElement lhs = mul(q_exp(PlaneElement::x(), cutoff),
                           q_exp(PlaneElement::y(), cutoff), cutoff);
    PlaneElement rhs = q_exp(PlaneElement::x() + PlaneElement::y(), cutoff);
    return {std::move(lhs), std::move(rhs)};
}

std::pair<PlaneElement, PlaneElement> reversed_sides(TruncationOrder cutoff) {
    PlaneElement lhs = mul(q_exp(PlaneElement::y(), cutoff),
                           q_exp(PlaneElement::x(), cutoff), cutoff);
    PlaneElement rhs = q_exp(reversed_argument(), cutoff);
    return {std::move(lhs), std::move(rhs)};
}

std::pair<PlaneElement, PlaneElement> intermediate_sides(TruncationOrder cutoff) {
    PlaneElement lhs = mul(q_exp(PlaneElement::y(), cutoff),
                           q_exp(PlaneElement::x(), cutoff), cutoff);
    PlaneElement rhs = mul(mul(q_exp(PlaneElement::x(), cutoff),
                               q_exp(correction_term(), cutoff), cutoff),
                           q_exp(PlaneElement::y(), cutoff), cutoff);
    return {std::move(lhs), std::move(rhs)};
}

std::pair<PlaneElement, PlaneElement> xpower_sides(int n) {
    if (n < 1)
        throw std::invalid_argument("xpower_sides: n must be >= 1");
    PlaneElement lhs = pow(PlaneElement::x(), n);
    PlaneElement rhs;
    PlaneElement falling = PlaneElement::one();  // (x-1)(x-q)...(x-q^(r-1))
    for (int r = 0; r <= n; ++r) {
        if (r > 0) {
            PlaneElement factor = PlaneElement::x() -
                PlaneElement::constant(RatFun(LaurentPoly::q_power(r - 1)));
            falling = falling * factor;
        }
        RatFun weight(q_shifted_product(n, r), q_shifted_product(r, r));
        rhs += weight * falling;
    }
    return {std::move(lhs), std::move(rhs)};
}

std::pair<PlaneElement, PlaneElement> qbinom_sides(int n) {
    if (n < 0)
        throw std::invalid_argument("qbinom_sides: n must be >= 0");
    PlaneElement lhs = pow(PlaneElement::x() + PlaneElement::y(), n,
                           TruncationOrder(n));
    PlaneElement rhs;
    for (int r = 0; r <= n; ++r)
        rhs += PlaneElement::monomial(gauss_binomial(n, r), r, n - r);
    return {std::move(lhs), std::move(rhs)};
}

std::pair<RatFun, RatFun> coeff5_sides(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("coeff5_sides: m and n must be >= 0");
    RatFun lhs = reordering_coefficient_sum(m, n);
    RatFun rhs(LaurentPoly::q_power(0), q_factorial(m) * q_factorial(n));
    return {std::move(lhs), std::move(rhs)};
}

IdentityReport check_direct(TruncationOrder cutoff) {
    return timed_check(IdentityId::direct, {cutoff.value}, [&]() -> Discrepancy {
        auto [lhs, rhs] = direct_sides(cutoff);
        return lhs - rhs;
    });
}

IdentityReport check_reversed(TruncationOrder cutoff) {
    return timed_check(IdentityId::reversed, {cutoff.value}, [&]() -> Discrepancy {
        auto [lhs, rhs] = reversed_sides(cutoff);
        return lhs - rhs;
    });
}

IdentityReport check_intermediate(TruncationOrder cutoff) {
    return timed_check(IdentityId::intermediate, {cutoff.value}, [&]() -> Discrepancy {
        auto [lhs, rhs] = intermediate_sides(cutoff);
        return lhs - rhs;
    });
}

IdentityReport check_xpower(int n) {
    return timed_check(IdentityId::xpower, {n}, [&]() -> Discrepancy {
        auto [lhs, rhs] = xpower_sides(n);
        return lhs - rhs;
    });
}

IdentityReport check_coeff5(int m, int n) {
    return timed_check(IdentityId::coeff5, {m, n}, [&]() -> Discrepancy {
        auto [lhs, rhs] = coeff5_sides(m, n);
        return lhs - rhs;
    });
}

IdentityReport check_qbinom(int n) {
    return timed_check(IdentityId::qbinom, {n}, [&]() -> Discrepancy {
        auto [lhs, rhs] = qbinom_sides(n);
        return lhs - rhs;
    });
}

IdentityReport check_classical_limit(TruncationOrder cutoff) {
    return timed_check(IdentityId::classical_limit, {cutoff.value},
                       [&]() -> Discrepancy {
        Rational one(1);
        PlaneElement series = q_exp(PlaneElement::x(), cutoff);
        PlaneElement expected;
        for (int m = 0; m <= cutoff.value; ++m) {
            Rational inv_fact =
                factorial(static_cast<unsigned long>(m)).reciprocal();
            expected += PlaneElement::monomial(RatFun(inv_fact), m, 0);
        }
        PlaneElement diff = evaluate_coefficients(series, one) - expected;
        // The reversed relation's correction term dies at q = 1, so its
        // argument collapses to x + y.
        diff += evaluate_coefficients(correction_term(), one);
        return diff;
    });
}

IdentityReport run_check(const SuiteEntry& entry) {
    const auto& p = entry.params;
    auto need = [&](size_t count) {
        if (p.size() != count)
            throw std::invalid_argument("run_check: " + identity_name(entry.id) +
                                        " expects " + std::to_string(count) +
                                        " parameter(s)");
    };
    auto as_int = [](long v) {
        if (v < 0 || v > std::numeric_limits<int>::max())
            throw std::invalid_argument("run_check: parameter out of range");
        return static_cast<int>(v);
    };
    switch (entry.id) {
        case IdentityId::direct:
            need(1);
            return check_direct(TruncationOrder(as_int(p[0])));
        case IdentityId::reversed:
            need(1);
            return check_reversed(TruncationOrder(as_int(p[0])));
        case IdentityId::intermediate:
            need(1);
            return check_intermediate(TruncationOrder(as_int(p[0])));
        case IdentityId::xpower:
            need(1);
            return check_xpower(as_int(p[0]));
        case IdentityId::coeff5:
            need(2);
            return check_coeff5(as_int(p[0]), as_int(p[1]));
        case IdentityId::qbinom:
            need(1);
            return check_qbinom(as_int(p[0]));
        case IdentityId::classical_limit:
            need(1);
            return check_classical_limit(TruncationOrder(as_int(p[0])));
    }
    throw std::invalid_argument("run_check: unknown identity id");
}

std::vector<IdentityReport> run_suite(const std::vector<SuiteEntry>& config,
                                      unsigned max_threads) {
    std::vector<IdentityReport> reports(config.size());
    if (config.empty())
        return reports;

    unsigned workers = max_threads != 0 ? max_threads
                                        : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1,
                                   static_cast<unsigned>(config.size()));

    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= config.size())
                return;
            try {
                reports[i] = run_check(config[i]);
            } catch (const std::exception& ex) {
                reports[i] = IdentityReport{};
                reports[i].id = config[i].id;
                reports[i].params = config[i].params;
                reports[i].error = ex.what();
            } catch (...) {
                reports[i] = IdentityReport{};
                reports[i].id = config[i].id;
                reports[i].params = config[i].params;
                reports[i].error = "unknown error";
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    return reports;
}

std::string report_text(const IdentityReport& report) {
    std::ostringstream out;
    out << identity_name(report.id);
    std::string params = params_text(report);
    if (!params.empty())
        out << " " << params;
    out << ": " << (report.holds ? "holds" : "FAILED");
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " (" << report.elapsed.count() << " ms)";
    if (!report.error.empty())
        out << " error: " << report.error;
    else if (!report.holds)
        out << " discrepancy: " << discrepancy_text(report.discrepancy);
    return out.str();
}

std::string report_json(const IdentityReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = identity_name(report.id);
    j["params"] = report.params;
    if (!report.params.empty() && first_param_is_order(report.id))
        j["order"] = report.params[0];
    else
        j["order"] = nullptr;
    j["holds"] = report.holds;
    if (std::holds_alternative<std::monostate>(report.discrepancy))
        j["discrepancy"] = nullptr;
    else
        j["discrepancy"] = discrepancy_text(report.discrepancy);
    j["elapsed_ms"] = report.elapsed.count();
    if (!report.error.empty())
        j["error"] = report.error;
    return j.dump();
}

}  // namespace qplane
