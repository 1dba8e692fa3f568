#pragma once

/**
 * @file report.hpp
 * @brief JSON rendering of analyses, with decision/oracle cross-checks.
 *
 * Every exact value is emitted as {"exact": "...", "decimal": "..."} where the
 * decimal carries 12 significant digits. Objects use sorted keys and carry no
 * timestamps, so identical inputs give byte-identical output.
 */

#include <cstdint>

#include <json.hpp>

#include "monorec/decisions.hpp"
#include "monorec/oracle.hpp"
#include "monorec/qfield.hpp"
#include "monorec/recurrence.hpp"
#include "monorec/riccati.hpp"

namespace monorec {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kDecimalDigits = 12;

nlohmann::json exact_json(const QuadElem& value);
nlohmann::json exact_json(const Rational& value);
nlohmann::json spec_json(const RecurrenceSpec& spec);
nlohmann::json verdict_json(const Verdict& verdict);
nlohmann::json window_json(const WindowReport& report);
nlohmann::json orbit_json(const RiccatiOrbit& orbit);

struct AnalysisOptions {
    std::int64_t window = 300;
    std::int64_t from_k = 0;
    std::int64_t preview = 8;  // entries in the distance/residual/term previews
};

/// Full analysis of one recurrence. Every verdict is checked against its
/// oracle window and Inconsistency is thrown on any disagreement:
///  - all-n verdicts (P1 from k, P1 h-type, P2 h-type, P3) against the exact
///    window [.., window];
///  - eventual P1 against the witness find_n0(2*window) <= window;
///  - eventual P2 against a violation-free P2 window on [window, 2*window].
nlohmann::json analyze(const RecurrenceSpec& spec, const AnalysisOptions& options = {});

}  // namespace monorec
