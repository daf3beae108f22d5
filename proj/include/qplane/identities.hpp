#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qplane/plane_element.hpp"

namespace qplane {

enum class IdentityId {
    direct,           // expq(x)*expq(y) = expq(x+y)
    reversed,         // expq(y)*expq(x) = expq(x+y+(q-1)xy)
    intermediate,     // expq(y)*expq(x) = expq(x)*expq((q-1)xy)*expq(y)
    xpower,           // x^n as a sum of falling products (x-1)(x-q)...
    coeff5,           // reordering coefficient sum = 1/([m]![n]!)
    qbinom,           // (x+y)^n = sum of Gaussian binomials times x^r y^(n-r)
    classical_limit,  // q = 1 collapses expq to the ordinary exponential
};

// The token the CLI and reports use for each identity.
std::string identity_name(IdentityId id);

struct IdentityReport {
    IdentityId id;
    std::vector<long> params;  // {N}, {n}, or {m, n} depending on the check
    bool holds = false;
    // LHS - RHS; monostate when the check errored before producing one.
    std::variant<std::monostate, RatFun, PlaneElement> discrepancy;
    std::chrono::duration<double, std::milli> elapsed{0};
    std::string error;  // empty unless the check threw
};

// Left- and right-hand sides, exposed separately so numeric and matrix
// oracles can evaluate each side independently of the symbolic comparison.
std::pair<PlaneElement, PlaneElement> direct_sides(TruncationOrder cutoff);
std::pair<PlaneElement, PlaneElement> reversed_sides(TruncationOrder cutoff);
std::pair<PlaneElement, PlaneElement> intermediate_sides(TruncationOrder cutoff);
std::pair<PlaneElement, PlaneElement> xpower_sides(int n);
std::pair<PlaneElement, PlaneElement> qbinom_sides(int n);
std::pair<RatFun, RatFun> coeff5_sides(int m, int n);

// The argument of the right-hand exponential in the reversed relation,
// normal-ordered: x + y + (q-1)xy.
PlaneElement reversed_argument();

IdentityReport check_direct(TruncationOrder cutoff);
IdentityReport check_reversed(TruncationOrder cutoff);
IdentityReport check_intermediate(TruncationOrder cutoff);
IdentityReport check_xpower(int n);  // n >= 1
IdentityReport check_coeff5(int m, int n);
IdentityReport check_qbinom(int n);
IdentityReport check_classical_limit(TruncationOrder cutoff);

struct SuiteEntry {
    IdentityId id;
    std::vector<long> params;
};

// Dispatches one entry to the matching check.
IdentityReport run_check(const SuiteEntry& entry);

// Runs every entry (across threads when max_threads != 1) and returns the
// reports in config order. A check that throws becomes a holds=false report
// carrying the error text instead of aborting the suite.
std::vector<IdentityReport> run_suite(const std::vector<SuiteEntry>& config,
                                      unsigned max_threads = 0);

// One line per report: "<identity> <params> holds|FAILED <ms>" plus the
// discrepancy when the check failed.
std::string report_text(const IdentityReport& report);

// Stable schema: identity, params, order, holds, discrepancy, elapsed_ms
// always present ("order" and "discrepancy" may be null); "error" added
// when the check errored.
std::string report_json(const IdentityReport& report);

}  // namespace qplane
