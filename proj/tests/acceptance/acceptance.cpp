// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "monorec/decisions.hpp"
#include "monorec/numtheory.hpp"
#include "monorec/oracle.hpp"
#include "monorec/recurrence.hpp"
#include "monorec/regions.hpp"
#include "support/agreement.hpp"
#include "support/generators.hpp"

using namespace monorec;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

class Checks {
public:
    void expect(bool condition, const std::string& what) {
        if (!condition) {
            failed_.push_back(what);
        }
    }
    [[nodiscard]] Outcome outcome(std::string detail) const {
        if (failed_.empty()) {
            return {true, std::move(detail)};
        }
        std::string joined;
        for (const auto& f : failed_) {
            joined += (joined.empty() ? "" : "; ") + f;
        }
        return {false, joined};
    }

private:
    std::vector<std::string> failed_;
};

json cli_json(const std::vector<std::string>& args, int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return code == 0 ? json::parse(out.str()) : json();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    return os.str();
}

// First `places` digits after the point, no rounding.
std::string truncated(const QuadElem& value, int places) {
    const std::string text = value.to_decimal(12);
    return text.substr(0, text.find('.') + 1 + static_cast<std::size_t>(places));
}

Outcome fibonacci_triple() {
    Checks c;
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    const json doc = cli_json({"analyze", "--a", "1", "--b", "-1", "--h-init", "1"}, code);
    const double elapsed = seconds_since(start);
    c.expect(code == 0, "analyze exited with " + std::to_string(code));
    if (code == 0) {
        for (const char* p : {"p1", "p2", "p3"}) {
            c.expect(doc["properties"][p] == true, std::string(p) + " not holding");
        }
        c.expect(doc["oracle"]["window"] == 300, "window is not 300");
        for (const char* w : {"p1_from_k", "p2", "p3"}) {
            c.expect(doc["oracle"][w]["holds_on_window"] == true &&
                         doc["oracle"][w]["first_violation"].is_null(),
                     std::string(w) + " window has a violation");
        }
    }
    c.expect(elapsed < 1.0, "runtime " + fmt_seconds(elapsed));
    return c.outcome("P1, P2, P3 hold; windows clean; " + fmt_seconds(elapsed));
}

Outcome lucas() {
    Checks c;
    const RecurrenceSpec spec = RecurrenceSpec::make(1, -1, 2, 1);
    const WindowReport p1 = check_p1_window(spec, 0, 300);
    c.expect(!nondecreasing_from(spec, 0).holds, "P1 from 0 decided as holding");
    c.expect(p1.first_violation == std::optional<std::int64_t>(0), "P1 first violation not 0");
    c.expect(eventually_nondecreasing(spec).holds, "eventual P1 decided as failing");
    c.expect(find_n0(spec, 600) == std::optional<std::int64_t>(1), "witness n0 is not 1");
    c.expect(weighted_monotone(spec).holds, "P3 decided as failing");
    c.expect(check_p3_window(spec, 300).holds_on_window, "P3 window violated");

    const auto d = ratio_distances(spec, 2);
    c.expect(d.size() >= 2 && d[0] && d[1], "missing distances");
    std::string shown;
    if (d.size() >= 2 && d[0] && d[1]) {
        const std::string d0 = truncated(*d[0], 2);
        const std::string d1 = truncated(*d[1], 2);
        c.expect(d0 == "1.11" && d1 == "1.38", "distances " + d0 + ", " + d1);
        c.expect(cmp_abs(*d[0], *d[1]) < 0, "first distance is not smaller");
        shown = d0 + "... <= " + d1 + "...";
    }
    const WindowReport p2 = check_p2_window(spec, 300);
    c.expect(p2.first_violation == std::optional<std::int64_t>(0), "P2 first violation not 0");
    return c.outcome("P1 fails at 0, n0 = 1, P3 holds, P2 " + shown + " violates at 0");
}

Outcome example_one() {
    Checks c;
    const RecurrenceSpec spec = make_h_spec(1, Rational(1, 4), 1);
    c.expect(!positive_monotone_h(spec).holds, "P1 decided as holding");
    c.expect(ratio_monotone_h(spec).holds, "P2 decided as failing");
    c.expect(weighted_monotone(spec).holds, "P3 decided as failing");
    c.expect(!check_p1_window(spec, 0, 300).holds_on_window, "P1 window clean");
    c.expect(check_p2_window(spec, 300).holds_on_window, "P2 window violated");
    c.expect(check_p3_window(spec, 300).holds_on_window, "P3 window violated");
    const SequenceWindow w = iterate(spec, 64);
    for (std::int64_t n = 0; n <= 64; ++n) {
        mpz_class pow2 = 1;
        pow2 <<= static_cast<mp_bitcnt_t>(n);
        const Rational expected(mpz_class(n + 1), pow2);
        c.expect(w.at(n) == expected, "a_" + std::to_string(n) + " != (n+1)/2^n");
    }
    return c.outcome("P1 fails, P2 and P3 hold; a_n = (n+1) 2^-n for n <= 64");
}

Outcome example_two() {
    Checks c;
    const RecurrenceSpec spec = make_h_spec(1, -3, 1);
    c.expect(positive_monotone_h(spec).holds, "P1 decided as failing");
    c.expect(!ratio_monotone_h(spec).holds, "P2 decided as holding");
    c.expect(!weighted_monotone(spec).holds, "P3 decided as holding");
    c.expect(check_p1_window(spec, 0, 300).holds_on_window, "P1 window violated");
    c.expect(!check_p2_window(spec, 300).holds_on_window, "P2 window clean");
    c.expect(!check_p3_window(spec, 300).holds_on_window, "P3 window clean");
    const auto r = weighted_residuals(spec, 3);
    const std::vector<std::string> expected{"1.30", "1.69", "2.21"};
    std::string shown;
    for (std::size_t i = 0; i < expected.size() && i < r.size(); ++i) {
        const std::string d = truncated(r[i], 2);
        c.expect(d == expected[i], "residual " + std::to_string(i) + " is " + d);
        shown += (shown.empty() ? "" : ", ") + d;
    }
    c.expect(r.size() == 3, "expected 3 residuals");
    return c.outcome("P1 holds, P2 and P3 fail; residuals " + shown);
}

Outcome counterexample() {
    Checks c;
    const RecurrenceSpec spec = RecurrenceSpec::make(Rational(1, 10), Rational(-21, 5), 1, 3);
    const SequenceWindow w = iterate(spec, 2);
    c.expect(w.at(2) == Rational(9, 2), "a_2 = " + w.at(2).to_string());
    const QuadElem beta = order_by_modulus(spec.roots()).beta;
    const QuadElem q = beta * QuadElem(w.at(1) / w.at(2));
    c.expect(q.is_rational() && q.as_rational().abs() == Rational(4, 3),
             "|beta a_1/a_2| = " + q.to_string());
    const WindowReport p2 = check_p2_window(spec, 300);
    c.expect(p2.first_violation == std::optional<std::int64_t>(1), "P2 first violation not 1");
    return c.outcome("a_2 = 9/2, |beta a_1/a_2| = 4/3, P2 violates at n = 1");
}

Outcome enumeration() {
    Checks c;
    int code = 0;
    const json doc = cli_json({"enumerate", "--a-max", "3"}, code);
    c.expect(code == 0, "enumerate exited with " + std::to_string(code));
    const std::vector<std::pair<int, int>> expected{{1, -1}, {2, -2}, {2, -1}, {3, -3},
                                                    {3, -2}, {3, -1}, {3, 1}};
    std::vector<std::pair<int, int>> got;
    if (code == 0) {
        for (const auto& p : doc["pairs"]) {
            got.emplace_back(p["a"].get<int>(), p["b"].get<int>());
        }
    }
    c.expect(got == expected, "pairs differ");
    return c.outcome("7 pairs (1,-1) .. (3,1)");
}

Outcome characterization() {
    Checks c;
    for (const char* bound : {"10", "100", "1000"}) {
        int code = 0;
        const json doc = cli_json({"characterize", "--scan-bound", bound}, code);
        c.expect(code == 0 && doc["characterization"] == json::parse("[[1, -1]]"),
                 std::string("scan bound ") + bound);
    }
    int code = 0;
    const json doc = cli_json({"characterize"}, code);
    c.expect(code == 0 && doc["characterization"] == json::parse("[[1, -1]]"), "default bound");
    return c.outcome("[(1, -1)] at scan bounds 10, 100, 1000");
}

Outcome intersection_grids() {
    Checks c;
    const auto start = std::chrono::steady_clock::now();
    const IdentityCheck root = verify_intersection_identity(RegionId::D, {-3, 3, -3, 3}, 201);
    const IdentityCheck coeff = verify_intersection_identity(RegionId::DP, {-1, 5, -7, 5}, 201);
    const double elapsed = seconds_since(start);
    c.expect(root.points == 201 * 201 && root.mismatches == 0,
             "root plane mismatches " + std::to_string(root.mismatches));
    c.expect(coeff.points == 201 * 201 && coeff.mismatches == 0,
             "coefficient plane mismatches " + std::to_string(coeff.mismatches));
    c.expect(elapsed < 30.0, "runtime " + fmt_seconds(elapsed));
    return c.outcome("2 x 40401 points, 0 mismatches; " + fmt_seconds(elapsed));
}

Outcome oracle_suite() {
    Checks c;
    const testing::AgreementStats stats = testing::run_agreement_suite(20240601, 500);
    c.expect(stats.specs == 500, "ran " + std::to_string(stats.specs) + " specs");
    c.expect(stats.negative_discriminant > 0 && stats.negative_discriminant < stats.specs,
             "only one discriminant sign");
    for (const auto& f : stats.failures) {
        c.expect(false, f);
    }
    return c.outcome(std::to_string(stats.specs) + " specs (" +
                     std::to_string(stats.negative_discriminant) + " complex, " +
                     std::to_string(stats.h_type) + " h-type), " +
                     std::to_string(stats.comparisons) + " verdicts agree");
}

Outcome closed_form() {
    Checks c;
    testing::Gen gen(0xC105ED);
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const RecurrenceSpec spec = gen.spec(testing::Gen::Disc::nonnegative);
        const SequenceWindow w = iterate(spec, 200);
        for (std::int64_t n = 0; n <= 200; ++n) {
            mismatches += closed_form_term(spec, n) == w.at(n) ? 0 : 1;
        }
    }
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatching terms");
    return c.outcome("200 specs x 201 terms identical");
}

Outcome pisot() {
    Checks c;
    for (const IntCoeffPair p : {IntCoeffPair{1, -1}, IntCoeffPair{2, -1}, IntCoeffPair{3, -1}}) {
        c.expect(is_quadratic_pisot(p), "expected Pisot");
    }
    for (const IntCoeffPair p : {IntCoeffPair{1, -3}, IntCoeffPair{3, 2}}) {
        c.expect(!is_quadratic_pisot(p), "expected non-Pisot");
    }
    const auto pairs = enumerate_generalized_fibonacci(20);
    for (const auto& p : pairs) {
        c.expect(is_quadratic_pisot(p),
                 "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ") not Pisot");
    }
    return c.outcome("examples match; all " + std::to_string(pairs.size()) +
                     " enumerated pairs with a <= 20 are Pisot");
}

Outcome ratio_limit_check() {
    Checks c;
    const RecurrenceSpec spec = make_h_spec(1, -1, 1);
    const SequenceWindow w = iterate(spec, 61);
    const double ratio = w.at(61).to_double() / w.at(60).to_double();
    const RatioLimit limit = ratio_limit(spec);
    c.expect(limit.converges && limit.limit.has_value(), "no limit");
    std::string decimal;
    if (limit.limit) {
        decimal = limit.limit->to_decimal(16);
        c.expect(decimal.rfind("1.618033988749", 0) == 0, "limit renders as " + decimal);
        c.expect(std::fabs(ratio - limit.limit->to_double()) < 1e-9, "ratio too far from limit");
    }
    c.expect(std::fabs(ratio - 1.618033988749) < 1e-9, "ratio too far from 1.618033988749");
    std::ostringstream os;
    os.precision(15);
    os << "a_61/a_60 = " << ratio << ", limit " << decimal;
    return c.outcome(os.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"Fibonacci triple", fibonacci_triple},
        {"Lucas", lucas},
        {"h-type a=1, b=1/4", example_one},
        {"h-type a=1, b=-3", example_two},
        {"counterexample a=1/10, b=-21/5", counterexample},
        {"enumeration a <= 3", enumeration},
        {"boundary characterization", characterization},
        {"intersection grids 201x201", intersection_grids},
        {"oracle agreement, 500 specs", oracle_suite},
        {"closed form vs iteration", closed_form},
        {"Pisot", pisot},
        {"Fibonacci ratio limit", ratio_limit_check},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] "
                  << criteria[i].first << ": " << outcome.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
