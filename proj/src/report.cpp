#include "monorec/report.hpp"

#include <algorithm>
#include <string>

#include "monorec/error.hpp"

namespace monorec {

namespace {

using nlohmann::json;

json optional_index(const std::optional<std::int64_t>& index) {
    return index ? json(*index) : json(nullptr);
}

std::string_view property_name(Property property) {
    switch (property) {
        case Property::P1: return "P1";
        case Property::P2: return "P2";
        case Property::P3: return "P3";
    }
    return "?";
}

void require_agreement(const char* what, bool decided, bool observed, const std::string& detail) {
    if (decided != observed) {
        throw Inconsistency(std::string(what) + ": decision says " +
                            (decided ? "holds" : "fails") + " but the oracle " +
                            (observed ? "found no violation" : "found a violation") + " (" +
                            detail + ")");
    }
}

json roots_json(const RootPair& roots) {
    json out;
    out["discriminant"] = exact_json(roots.discriminant);
    out["discriminant_sign"] = static_cast<int>(roots.discriminant_sign);
    if (roots.real()) {
        const OrderedRoots ordered = order_by_modulus(roots);
        out["alpha_plus"] = exact_json(*roots.alpha_plus);
        out["alpha_minus"] = exact_json(*roots.alpha_minus);
        out["alpha"] = exact_json(ordered.alpha);
        out["beta"] = exact_json(ordered.beta);
        out["modulus_gap_sign"] = modulus_gap_sign(roots.a, roots.b);
    } else {
        out["modulus_squared"] = exact_json(*roots.modulus_squared);
    }
    return out;
}

}  // namespace

json exact_json(const QuadElem& value) {
    return {{"exact", value.to_string()}, {"decimal", value.to_decimal(kDecimalDigits)}};
}

json exact_json(const Rational& value) {
    return exact_json(QuadElem(value));
}

json spec_json(const RecurrenceSpec& spec) {
    json out{{"a", spec.a().to_string()},
             {"b", spec.b().to_string()},
             {"v0", spec.v0().to_string()},
             {"v1", spec.v1().to_string()},
             {"h_type", spec.h_type()}};
    if (spec.h_type()) {
        out["h_init"] = spec.v0().to_string();
    }
    return out;
}

json verdict_json(const Verdict& verdict) {
    return {{"holds", verdict.holds}, {"branch", std::string(branch_name(verdict.branch))}};
}

json window_json(const WindowReport& report) {
    return {{"property", std::string(property_name(report.property))},
            {"checked_range", {report.range_begin, report.range_end}},
            {"holds_on_window", report.holds_on_window},
            {"first_violation", optional_index(report.first_violation)},
            {"skipped_indices", report.skipped_indices}};
}

json orbit_json(const RiccatiOrbit& orbit) {
    json states = json::array();
    for (const auto& s : orbit.states) {
        states.push_back(exact_json(s));
    }
    return {{"a", orbit.a.to_string()},
            {"b", orbit.b.to_string()},
            {"states", states},
            {"terminated_early", optional_index(orbit.terminated_early)}};
}

json analyze(const RecurrenceSpec& spec, const AnalysisOptions& options) {
    const std::int64_t window = options.window;
    const std::int64_t k = options.from_k;
    if (window < 1 || k < 0 || k >= window) {
        throw InvalidArgument("analyze needs window >= 1 and 0 <= from_k < window");
    }
    const RootPair roots = spec.roots();
    const bool nonzero_start = !spec.v0().is_zero() && !spec.v1().is_zero();

    json report;
    report["schema"] = kSchemaVersion;
    report["command"] = "analyze";
    report["spec"] = spec_json(spec);
    report["roots"] = roots_json(roots);
    report["hartman_aurel_sufficient"] = hartman_aurel_sufficient(spec.a(), spec.b());

    json verdicts;
    json oracle;
    oracle["window"] = window;

    // P1 from k.
    const Verdict from_k = nondecreasing_from(spec, k);
    const WindowReport p1_window = check_p1_window(spec, k, window);
    require_agreement("P1 from k", from_k.holds, p1_window.holds_on_window,
                      "k = " + std::to_string(k));
    json from_k_json = verdict_json(from_k);
    from_k_json["k"] = k;
    verdicts["p1_from_k"] = from_k_json;
    oracle["p1_from_k"] = window_json(p1_window);

    // P1 eventually.
    const Verdict eventual = eventually_nondecreasing(spec);
    const std::int64_t witness_cap = 2 * window;
    const auto n0 = find_n0(spec, witness_cap);
    require_agreement("P1 eventually", eventual.holds, n0.has_value() && *n0 <= window,
                      "witness cap " + std::to_string(witness_cap));
    verdicts["p1_eventual"] = verdict_json(eventual);
    oracle["p1_n0_witness"] = {{"n_cap", witness_cap}, {"n0", optional_index(n0)}};

    // P1 for h-type initial values.
    std::optional<Verdict> p1_h;
    if (spec.h_type()) {
        p1_h = positive_monotone_h(spec);
        const WindowReport h_window = (k == 0) ? p1_window : check_p1_window(spec, 0, window);
        require_agreement("P1 h-type", p1_h->holds, h_window.holds_on_window, "k = 0");
        verdicts["p1_positive_h"] = verdict_json(*p1_h);
        oracle["p1_h"] = window_json(h_window);
    }

    // P2.
    std::optional<Verdict> p2_h;
    if (roots.real()) {
        oracle["p2"] = window_json(check_p2_window(spec, window));
    } else {
        oracle["p2"] = nullptr;
    }
    if (nonzero_start) {
        const Verdict p2_eventual = eventually_ratio_monotone(spec);
        if (roots.real()) {
            const WindowReport tail = check_p2_window(spec, window, witness_cap);
            require_agreement("P2 eventually", p2_eventual.holds, tail.holds_on_window,
                              "tail [" + std::to_string(window) + ", " +
                                  std::to_string(witness_cap) + "]");
            oracle["p2_tail"] = window_json(tail);
        }
        verdicts["p2_eventual"] = verdict_json(p2_eventual);
    } else {
        verdicts["p2_eventual"] = nullptr;
    }
    if (spec.h_type()) {
        p2_h = ratio_monotone_h(spec);
        if (roots.real()) {
            require_agreement("P2 h-type", p2_h->holds,
                              oracle["p2"]["holds_on_window"].get<bool>(), "all n");
        }
        verdicts["p2_all_n"] = verdict_json(*p2_h);
    }

    // P3.
    const Verdict p3 = weighted_monotone(spec);
    const WindowReport p3_window = check_p3_window(spec, window);
    require_agreement("P3", p3.holds, p3_window.holds_on_window, "all n");
    verdicts["p3"] = verdict_json(p3);
    oracle["p3"] = window_json(p3_window);

    report["verdicts"] = verdicts;
    report["oracle"] = oracle;
    report["properties"] = {
        {"p1", p1_h ? p1_h->holds : from_k.holds},
        {"p2", p2_h ? json(p2_h->holds) : json(nullptr)},
        {"p3", p3.holds},
    };

    // Previews.
    const SequenceWindow terms = iterate(spec, std::max<std::int64_t>(options.preview, 1));
    json prefix = json::array();
    for (const auto& t : terms.terms) {
        prefix.push_back(t.to_string());
    }
    report["sequence_prefix"] = prefix;

    if (roots.real()) {
        json distances = json::array();
        for (const auto& d : ratio_distances(spec, options.preview)) {
            distances.push_back(d ? exact_json(*d) : json(nullptr));
        }
        json residuals = json::array();
        for (const auto& r : weighted_residuals(spec, options.preview)) {
            residuals.push_back(exact_json(r));
        }
        report["p2_distances"] = distances;
        report["p3_residuals"] = residuals;
    }

    if (nonzero_start) {
        const RatioLimit limit = ratio_limit(spec);
        json limit_json{{"converges", limit.converges}};
        if (limit.converges) {
            limit_json["limit"] = exact_json(*limit.limit);
            limit_json["which_root"] = *limit.which_root == RootLabel::alpha ? "alpha" : "beta";
        }
        report["ratio_limit"] = limit_json;
        if (roots.real()) {
            try {
                report["exceptional_zero"] = optional_index(exceptional_zero(spec));
            } catch (const Unsupported&) {
                report["exceptional_zero"] = "search horizon exhausted";
            }
        } else {
            report["exceptional_zero"] = nullptr;
        }
    } else {
        report["ratio_limit"] = nullptr;
        report["exceptional_zero"] = nullptr;
    }

    if (nonzero_start) {
        const RiccatiOrbit orbit =
            riccati_orbit(spec.a(), spec.b(), spec.v1() / spec.v0(), options.preview);
        report["riccati_prefix"] = orbit_json(orbit);
    } else {
        report["riccati_prefix"] = nullptr;
    }
    return report;
}

}  // namespace monorec
