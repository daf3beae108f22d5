// Acceptance gate: one self-contained check per release criterion, each
// printed as a single [PASS]/[FAIL] line. Exits nonzero if any criterion
// fails. Every comparison is exact; there are no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "qplane/cli.hpp"
#include "qplane/elaborate.hpp"
#include "qplane/expr.hpp"
#include "qplane/identities.hpp"
#include "qplane/matrix_rep.hpp"
#include "qplane/plane_element.hpp"
#include "qplane/qcombinatorics.hpp"

using namespace qplane;
using qplane::testing::lp_of;
using qplane::testing::qbinom_recurrence;
using qplane::testing::random_expr;
using qplane::testing::random_positive_q0;
using qplane::testing::swap_rewrite;

namespace {

int failures = 0;

// Runs one criterion and prints exactly one line for it. The body may append
// to `detail` (timings, counterexample info); exceptions count as failure.
void criterion(int number, const std::string& description,
               const std::function<bool(std::string&)>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << description;
    if (!detail.empty())
        std::cout << " — " << detail;
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

std::string seconds_text(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << s << " s";
    return out.str();
}

// Runs `check` for every order 0..max_order, requiring every report to hold
// and the total runtime to stay under `budget_s` seconds.
bool holds_through_order(const std::function<IdentityReport(TruncationOrder)>& check,
                         int max_order, double budget_s, std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (int N = 0; N <= max_order; ++N)
        all = all && check(TruncationOrder(N)).holds;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
                   .count();
    detail = seconds_text(s);
    return all && s < budget_s;
}

}  // namespace

int main() {
    criterion(1,
              "expq(x)*expq(y) = expq(x+y) exactly at every order 0..10, "
              "under 60 s",
              [](std::string& detail) {
                  return holds_through_order(check_direct, 10, 60.0, detail);
              });

    criterion(2,
              "expq(y)*expq(x) = expq(x+y+(1-qinv)*y*x) exactly at every "
              "order 0..10, under 120 s",
              [](std::string& detail) {
                  return holds_through_order(check_reversed, 10, 120.0, detail);
              });

    criterion(3,
              "three-factor form expq(x)*expq((q-1)*x*y)*expq(y) matches "
              "expq(y)*expq(x) at every order 0..8",
              [](std::string& detail) {
                  return holds_through_order(check_intermediate, 8, 600.0,
                                             detail);
              });

    criterion(4,
              "x^n equals its expansion over falling products "
              "(x-1)(x-q)...(x-q^(r-1)) for every 1 <= n <= 25",
              [](std::string&) {
                  bool all = true;
                  for (int n = 1; n <= 25; ++n)
                      all = all && check_xpower(n).holds;
                  return all;
              });

    criterion(5,
              "reordering coefficient sum collapses to 1/([m]![n]!) and is "
              "symmetric in m, n for every 0 <= m, n <= 15",
              [](std::string&) {
                  bool all = true;
                  for (int m = 0; m <= 15; ++m) {
                      for (int n = 0; n <= 15; ++n) {
                          all = all && check_coeff5(m, n).holds;
                          all = all && coeff5_sides(m, n).first ==
                                           coeff5_sides(n, m).first;
                      }
                  }
                  return all;
              });

    criterion(6,
              "(x+y)^n expands with Gaussian binomial coefficients for "
              "n <= 15, which satisfy the additive recurrence "
              "B(n+1,r) = B(n,r-1) + q^r B(n,r) for 0 <= r <= n <= 15",
              [](std::string&) {
                  bool all = true;
                  for (int n = 0; n <= 15; ++n)
                      all = all && check_qbinom(n).holds;
                  for (int n = 0; n <= 15; ++n) {
                      for (int r = 0; r <= n; ++r) {
                          all = all && gauss_binomial(n, r) ==
                                           RatFun(qbinom_recurrence(n, r));
                          RatFun lifted =
                              gauss_binomial(n, r - 1) +
                              RatFun(LaurentPoly::q_power(r)) *
                                  gauss_binomial(n, r);
                          all = all && gauss_binomial(n + 1, r) == lifted;
                      }
                  }
                  return all;
              });

    criterion(7,
              "normal ordering closed form: y^m x^n = q^(mn) x^n y^m agrees "
              "with exhaustive adjacent-swap rewriting for every m, n <= 8",
              [](std::string&) {
                  bool all = true;
                  for (int m = 0; m <= 8; ++m) {
                      for (int n = 0; n <= 8; ++n) {
                          std::string word(static_cast<size_t>(m), 'y');
                          word.append(static_cast<size_t>(n), 'x');
                          PlaneElement closed = PlaneElement::monomial(
                              RatFun(LaurentPoly::q_power(
                                  static_cast<long>(m) * n)),
                              n, m);
                          all = all && normal_order_word(word) == closed;
                          auto [swaps, sorted] = swap_rewrite(word);
                          all = all && swaps == static_cast<long>(m) * n;
                          std::string expected(static_cast<size_t>(n), 'x');
                          expected.append(static_cast<size_t>(m), 'y');
                          all = all && sorted == expected;
                      }
                  }
                  return all;
              });

    criterion(8,
              "at q = 1 the series coefficients become 1/m! for m <= 10 and "
              "the y*x correction term vanishes",
              [](std::string&) {
                  bool all = true;
                  PlaneElement at_one =
                      evaluate_coefficients(q_exp(PlaneElement::x(),
                                                  TruncationOrder(10)),
                                            Rational(1));
                  for (int m = 0; m <= 10; ++m) {
                      Rational inv_mfact =
                          factorial(static_cast<unsigned long>(m)).reciprocal();
                      all = all && at_one.coeff(m, 0) == RatFun(inv_mfact);
                  }
                  all = all && check_classical_limit(TruncationOrder(10)).holds;
                  PlaneElement arg_at_one =
                      evaluate_coefficients(reversed_argument(), Rational(1));
                  all = all &&
                        arg_at_one == PlaneElement::x() + PlaneElement::y();
                  return all;
              });

    criterion(9,
              "each symbolic equality also holds numerically at 3 random "
              "rational q0 per check and in the nilpotent matrix pair "
              "X Y = q0^-1 Y X",
              [](std::string&) {
                  bool all = true;
                  std::mt19937 rng(20240901);
                  auto agree_numerically = [&](const PlaneElement& lhs,
                                               const PlaneElement& rhs) {
                      for (int trial = 0; trial < 3; ++trial) {
                          Rational q0 = random_positive_q0(rng);
                          all = all && evaluate_coefficients(lhs, q0) ==
                                           evaluate_coefficients(rhs, q0);
                      }
                  };
                  TruncationOrder N(5);
                  auto [d1, d2] = direct_sides(N);
                  agree_numerically(d1, d2);
                  auto [r1, r2] = reversed_sides(N);
                  agree_numerically(r1, r2);
                  auto [i1, i2] = intermediate_sides(N);
                  agree_numerically(i1, i2);
                  auto [p1, p2] = xpower_sides(8);
                  agree_numerically(p1, p2);
                  auto [b1, b2] = qbinom_sides(8);
                  agree_numerically(b1, b2);
                  auto [c1, c2] = coeff5_sides(6, 5);
                  for (int trial = 0; trial < 3; ++trial) {
                      Rational q0 = random_positive_q0(rng);
                      all = all && c1.eval(q0) == c2.eval(q0);
                  }
                  for (const Rational& q0 : {Rational(2), Rational(5, 7)}) {
                      PlaneRep rep = nilpotent_rep(5, q0);
                      all = all && satisfies_plane_relation(rep);
                      TruncationOrder M(4);
                      auto [dl, dr] = direct_sides(M);
                      all = all && evaluate(dl, rep) == evaluate(dr, rep);
                      auto [rl, rr] = reversed_sides(M);
                      all = all && evaluate(rl, rep) == evaluate(rr, rep);
                  }
                  return all;
              });

    criterion(10,
              "negative control: replacing the correction coefficient "
              "(1-qinv) by (1-q) breaks the reversed relation at order 2 "
              "with a nonzero x*y discrepancy",
              [](std::string& detail) {
                  TruncationOrder cutoff(2);
                  // The genuine relation must hold at this order for the
                  // control to mean anything.
                  if (!check_reversed(cutoff).holds)
                      return false;
                  PlaneElement lhs =
                      mul(q_exp(PlaneElement::y(), cutoff),
                          q_exp(PlaneElement::x(), cutoff), cutoff);
                  // (1-q)*y*x normal-orders to (q - q^2)*x*y.
                  PlaneElement bad_arg =
                      PlaneElement::x() + PlaneElement::y() +
                      PlaneElement::monomial(
                          RatFun(lp_of({{1, 1}, {2, -1}})), 1, 1);
                  PlaneElement diff = lhs - q_exp(bad_arg, cutoff);
                  RatFun xy = diff.coeff(1, 1);
                  if (xy.is_zero())
                      return false;
                  detail = "x*y discrepancy " + xy.to_string();
                  return !diff.is_zero();
              });

    criterion(11,
              "command line: 100 generated expressions round-trip through "
              "the grammar, exit codes are 0/1/2 as documented, and the "
              "report JSON keeps its schema",
              [](std::string&) {
                  bool all = true;

                  // Grammar round-trip: rendering reparses to an equal tree,
                  // and for series-free expressions the printable normal form
                  // re-evaluates to the same element.
                  std::mt19937 rng(20240902);
                  for (int trial = 0; trial < 100; ++trial) {
                      ExprPtr tree = random_expr(rng, 4, true);
                      all = all &&
                            expr_equal(*tree, *parse(render_expr(*tree)));
                  }
                  TruncationOrder cutoff(6);
                  for (int trial = 0; trial < 50; ++trial) {
                      ExprPtr tree = random_expr(rng, 4, false);
                      PlaneElement value = elaborate(*tree, cutoff);
                      all = all && elaborate(*parse(render_parseable(value)),
                                             cutoff) == value;
                  }

                  // Exit codes: 0 = success, 2 = usage/parse/evaluation
                  // error. (1 is reserved for a failed check; every shipped
                  // identity holds, so it cannot arise here.)
                  auto exit_code = [](std::vector<std::string> args) {
                      std::ostringstream out, err;
                      return run_cli(std::move(args), out, err);
                  };
                  all = all && exit_code({"normalize", "y*x"}) == 0;
                  all = all && exit_code({"check", "direct", "--order", "4"}) == 0;
                  all = all && exit_code({"eval", "y*x", "--q", "2/3"}) == 0;
                  all = all && exit_code({"normalize", "x +"}) == 2;
                  all = all && exit_code({"check", "nosuch"}) == 2;
                  all = all && exit_code({"eval", "expq(x)", "--q", "-1"}) == 2;
                  all = all && exit_code({}) == 2;

                  // JSON schema: fixed key set in a fixed order, "order"
                  // null exactly for the two index-parameterized checks,
                  // "error" present only on errored reports.
                  const std::vector<std::string> expected_keys = {
                      "identity", "params",     "order",
                      "holds",    "discrepancy", "elapsed_ms"};
                  auto keys_of = [](const nlohmann::ordered_json& j) {
                      std::vector<std::string> keys;
                      for (auto it = j.begin(); it != j.end(); ++it)
                          keys.push_back(it.key());
                      return keys;
                  };
                  auto check_json = [&](std::vector<std::string> args,
                                        bool order_is_null) {
                      std::ostringstream out, err;
                      args.push_back("--format");
                      args.push_back("json");
                      if (run_cli(std::move(args), out, err) != 0)
                          return false;
                      auto j = nlohmann::ordered_json::parse(out.str());
                      return keys_of(j) == expected_keys &&
                             j["order"].is_null() == order_is_null &&
                             j["holds"] == true;
                  };
                  all = all && check_json({"check", "direct", "--order", "3"},
                                          false);
                  all = all && check_json({"check", "qbinom", "--order", "5"},
                                          false);
                  all = all && check_json({"check", "xpower", "--n", "4"}, true);
                  all = all &&
                        check_json({"check", "coeff5", "--m", "2", "--n", "3"},
                                   true);
                  {
                      std::ostringstream out, err;
                      int code = run_cli({"suite", "--max-order", "1",
                                          "--max-mn", "1", "--max-xpower", "1",
                                          "--format", "json"},
                                         out, err);
                      auto arr = nlohmann::ordered_json::parse(out.str());
                      all = all && code == 0 && arr.is_array();
                      for (const auto& j : arr)
                          all = all && keys_of(j) == expected_keys;
                  }
                  return all;
              });

    if (failures == 0) {
        std::cout << "acceptance: all 11 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED"
              << std::endl;
    return 1;
}
