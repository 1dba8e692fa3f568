#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monorec/error.hpp"
#include "monorec/numtheory.hpp"
#include "monorec/recurrence.hpp"
#include "monorec/regions.hpp"
#include "monorec/report.hpp"
#include "monorec/riccati.hpp"

namespace monorec::cli {

namespace {

using nlohmann::json;

struct InitialValues {
    std::string a;
    std::string b;
    std::string h_init;
    std::string v0;
    std::string v1;
};

void add_spec_options(CLI::App* sub, InitialValues& iv) {
    sub->add_option("--a", iv.a, "coefficient a (p/q or integer)")->required();
    sub->add_option("--b", iv.b, "coefficient b (p/q or integer)")->required();
    auto* h = sub->add_option("--h-init", iv.h_init, "a_{-1} = 0, a_0 = c");
    auto* v0 = sub->add_option("--v0", iv.v0, "a_0");
    auto* v1 = sub->add_option("--v1", iv.v1, "a_1");
    h->excludes(v0);
    h->excludes(v1);
}

RecurrenceSpec spec_from(const InitialValues& iv) {
    const Rational a = Rational::parse(iv.a);
    const Rational b = Rational::parse(iv.b);
    if (!iv.h_init.empty()) {
        return make_h_spec(a, b, Rational::parse(iv.h_init));
    }
    if (iv.v0.empty() || iv.v1.empty()) {
        throw InvalidArgument("give either --h-init or both --v0 and --v1");
    }
    return RecurrenceSpec::make(a, b, Rational::parse(iv.v0), Rational::parse(iv.v1));
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InvalidArgument("cannot open output file '" + path + "'");
    }
    file << text;
}

void check_format(const std::string& format) {
    if (format != "json" && format != "csv") {
        throw InvalidArgument("--format must be json or csv");
    }
}

bool ends_with(const std::string& text, std::string_view suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BoundingBox parse_bbox(const std::string& text) {
    std::vector<Rational> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        parts.push_back(Rational::parse(item));
    }
    if (parts.size() != 4) {
        throw InvalidArgument("--bbox expects x0,x1,y0,y1");
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

json pair_json(const IntCoeffPair& pair) {
    return {{"a", pair.a},
            {"b", pair.b},
            {"c", pair.additive_c()},
            {"difference_form", difference_form(pair)},
            {"additive_form", additive_form(pair)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact monotonicity analysis of second-order linear recurrences", "monorec"};
    app.require_subcommand(1);

    std::function<void()> action;

    // analyze
    InitialValues analyze_iv;
    AnalysisOptions analyze_opts;
    std::string analyze_out;
    auto* analyze_cmd = app.add_subcommand("analyze", "decide P1-P3 and cross-check the oracle");
    add_spec_options(analyze_cmd, analyze_iv);
    analyze_cmd->add_option("--window", analyze_opts.window, "oracle window N")
        ->capture_default_str();
    analyze_cmd->add_option("--from-k", analyze_opts.from_k, "start index k for P1")
        ->capture_default_str();
    analyze_cmd->add_option("--out", analyze_out, "write JSON here instead of stdout");
    analyze_cmd->callback([&] {
        action = [&] { emit(analyze(spec_from(analyze_iv), analyze_opts), analyze_out, out); };
    });

    // sequence
    InitialValues seq_iv;
    std::int64_t seq_n = 0;
    std::string seq_format = "json";
    auto* seq_cmd = app.add_subcommand("sequence", "exact terms a_0 .. a_N");
    add_spec_options(seq_cmd, seq_iv);
    seq_cmd->add_option("--n", seq_n, "last index N")->required();
    seq_cmd->add_option("--format", seq_format, "json or csv")->capture_default_str();
    seq_cmd->callback([&] {
        action = [&] {
            check_format(seq_format);
            const RecurrenceSpec spec = spec_from(seq_iv);
            const SequenceWindow window = iterate(spec, seq_n);
            if (seq_format == "csv") {
                out << "n,value\n";
                for (std::size_t i = 0; i < window.terms.size(); ++i) {
                    out << i << ',' << window.terms[i] << '\n';
                }
                return;
            }
            json terms = json::array();
            for (const auto& t : window.terms) {
                terms.push_back(t.to_string());
            }
            emit({{"schema", kSchemaVersion},
                  {"command", "sequence"},
                  {"spec", spec_json(spec)},
                  {"terms", terms}},
                 "", out);
        };
    });

    // enumerate
    std::int64_t a_max = 0;
    std::string enum_format = "json";
    auto* enum_cmd =
        app.add_subcommand("enumerate", "integer (a, b) in D' passing the irreducibility test");
    enum_cmd->add_option("--a-max", a_max, "largest a")->required();
    enum_cmd->add_option("--format", enum_format, "json or csv")->capture_default_str();
    enum_cmd->callback([&] {
        action = [&] {
            check_format(enum_format);
            const auto pairs = enumerate_generalized_fibonacci(a_max);
            if (enum_format == "csv") {
                out << "a,b,c,difference_form,additive_form\n";
                for (const auto& p : pairs) {
                    out << p.a << ',' << p.b << ',' << p.additive_c() << ",\""
                        << difference_form(p) << "\",\"" << additive_form(p) << "\"\n";
                }
                return;
            }
            json list = json::array();
            for (const auto& p : pairs) {
                list.push_back(pair_json(p));
            }
            emit({{"schema", kSchemaVersion},
                  {"command", "enumerate"},
                  {"a_max", a_max},
                  {"pairs", list}},
                 "", out);
        };
    });

    // regions
    std::string region_text;
    std::string bbox_text;
    std::int64_t resolution = 0;
    std::string region_out;
    auto* regions_cmd = app.add_subcommand("regions", "rasterize a domain to PGM or CSV");
    regions_cmd->add_option("--region", region_text, "D1|D2|D3|D|D1P|D2P|D3P|DP")->required();
    regions_cmd->add_option("--bbox", bbox_text, "x0,x1,y0,y1")->required();
    regions_cmd->add_option("--res", resolution, "cells per axis")->required();
    regions_cmd->add_option("--out", region_out, "output path ending in .pgm or .csv")
        ->required();
    regions_cmd->callback([&] {
        action = [&] {
            const auto region = parse_region(region_text);
            if (!region || *region == RegionId::DP_BOUNDARY) {
                throw InvalidArgument("unknown region '" + region_text + "'");
            }
            const bool pgm = ends_with(region_out, ".pgm");
            if (!pgm && !ends_with(region_out, ".csv")) {
                throw InvalidArgument("--out must end in .pgm or .csv");
            }
            const RasterGrid grid = rasterize(*region, parse_bbox(bbox_text), resolution);
            std::ofstream file(region_out, std::ios::binary);
            if (!file) {
                throw InvalidArgument("cannot open output file '" + region_out + "'");
            }
            if (pgm) {
                write_pgm(grid, file);
            } else {
                write_csv(grid, file);
            }
            emit({{"schema", kSchemaVersion},
                  {"command", "regions"},
                  {"region", region_text},
                  {"resolution", resolution},
                  {"members", grid.member_count()},
                  {"path", region_out},
                  {"format", pgm ? "pgm" : "csv"}},
                 "", out);
        };
    });

    // riccati
    std::string ric_a;
    std::string ric_b;
    std::string ric_b0;
    std::int64_t ric_n = 0;
    auto* ric_cmd = app.add_subcommand("riccati", "orbit of s -> (a s - b)/s");
    ric_cmd->add_option("--a", ric_a)->required();
    ric_cmd->add_option("--b", ric_b)->required();
    ric_cmd->add_option("--b0", ric_b0, "initial state")->required();
    ric_cmd->add_option("--n", ric_n, "number of steps")->required();
    ric_cmd->callback([&] {
        action = [&] {
            const RiccatiOrbit orbit = riccati_orbit(Rational::parse(ric_a), Rational::parse(ric_b),
                                                     Rational::parse(ric_b0), ric_n);
            json doc = orbit_json(orbit);
            doc["schema"] = kSchemaVersion;
            doc["command"] = "riccati";
            doc["b0"] = orbit.states.front().to_string();
            emit(doc, "", out);
        };
    });

    // characterize
    std::int64_t scan_bound = kDefaultScanBound;
    auto* char_cmd = app.add_subcommand(
        "characterize", "irreducible integer points on the boundary of D'");
    char_cmd->add_option("--scan-bound", scan_bound)->capture_default_str();
    char_cmd->callback([&] {
        action = [&] {
            json pairs = json::array();
            for (const auto& p : boundary_characterization(scan_bound)) {
                pairs.push_back({p.a, p.b});
            }
            emit({{"schema", kSchemaVersion},
                  {"command", "characterize"},
                  {"scan_bound", scan_bound},
                  {"characterization", pairs}},
                 "", out);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (action) {
            action();
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const Inconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}

}  // namespace monorec::cli
