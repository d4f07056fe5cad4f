// Command-line driver: boundary slopes, family classification, epimorphism
// pair construction, partial-order obstruction battery, and the census
// verification suites.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twobridge/census.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/order.hpp"
#include "twobridge/ors.hpp"
#include "twobridge/report.hpp"

namespace {

using namespace twobridge;

constexpr int kExitOk = 0;
constexpr int kExitAnomaly = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidKnot = 3;

constexpr long long kPathListLimit = 20000;

struct Output {
    std::string format = "text";
    std::string path;

    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            if (!body.empty() && body.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << body;
    }
};

Rational parse_knot_spec(const std::string& text) {
    if (text.find('[') != std::string::npos) return eval_cf(parse_cf(text));
    return parse_rational(text);
}

TwoBridgeKnot knot_from_spec(const std::string& text) {
    Rational x = parse_knot_spec(text);
    return normalize_knot(x.numerator(), x.denominator());
}

int cmd_slopes(const std::string& spec, const Output& out) {
    Rational x = parse_knot_spec(spec);
    TwoBridgeKnot knot = normalize_knot(x.numerator(), x.denominator());
    Int rep = x.numerator() % knot.q();
    if (rep < 0) rep += knot.q();
    Rational fraction(rep, knot.q());

    SlopeMultiset slopes = boundary_slopes(knot, rep);
    std::vector<MinimalPath> paths;
    const bool list_paths = slopes.path_count() <= kPathListLimit;
    if (list_paths) paths = enumerate_minimal_expansions(knot, rep);

    if (out.format == "json") {
        out.write(knot_slopes_json(knot, fraction, list_paths ? &paths : nullptr, slopes).dump(2));
    } else {
        out.write(knot_slopes_text(knot, fraction, list_paths ? &paths : nullptr, slopes));
    }
    return kExitOk;
}

int cmd_classify(const std::string& spec, const Output& out) {
    TwoBridgeKnot knot = knot_from_spec(spec);
    auto tag = classify_family(knot);
    auto tier = corollary_arithmetic(knot);
    SlopeMultiset computed = boundary_slopes(knot);
    Json doc = classification_json(knot, tag, tier, computed);
    if (out.format == "json") {
        out.write(doc.dump(2));
    } else {
        std::ostringstream os;
        os << "K_{" << knot.str() << "}: ";
        if (tag)
            os << "family " << family_name(tag->family) << ", chirality " << tag->chirality_sign;
        else
            os << "no family (5 or more distinct slopes)";
        os << "\ndistinct slopes: " << computed.distinct_count() << "\narithmetic tier: " << tier.tier << "\n";
        for (const std::string& c : tier.matched_conditions) os << "  condition: " << c << "\n";
        out.write(os.str());
    }
    return kExitOk;
}

int cmd_ors(const std::string& seed_text, const std::string& word_text, const Output& out) {
    ContinuedFraction seed_cf = parse_cf(seed_text);
    OrsWord word = parse_ors_word(word_text);
    OrsPair pair = ors_apply(seed_cf.quotients, word);
    Theorem42Result check = theorem42_check(pair);
    if (out.format == "json") {
        out.write(ors_pair_json(pair, check).dump(2));
    } else {
        std::ostringstream os;
        os << "seed " << ContinuedFraction(0, pair.seed).str() << "  word " << word.str() << "\n"
           << "raw     " << pair.raw_cf.str() << "\n"
           << "reduced " << pair.reduced_cf.str() << "\n"
           << "child K_{" << pair.child_value.str() << "}  parent K_{" << pair.parent.str() << "}\n"
           << "dichotomy: " << (check.branch == Dichotomy::torus_case ? "torus" : "at_least_five")
           << "  distinct slopes: " << check.distinct_slopes << "\n";
        out.write(os.str());
    }
    return kExitOk;
}

int cmd_order(const std::string& spec1, const std::string& spec2, const Output& out) {
    TwoBridgeKnot k1 = knot_from_spec(spec1);
    TwoBridgeKnot k2 = knot_from_spec(spec2);
    OrderVerdict verdict = candidate_battery(k1, k2);
    if (out.format == "json") {
        out.write(order_verdict_json(k1, k2, verdict).dump(2));
    } else if (out.format == "csv") {
        out.write("k1,k2,verdict,failing_check,witness_d\n" + order_verdict_csv_row(k1, k2, verdict) + "\n");
    } else {
        std::ostringstream os;
        os << "K_{" << k1.str() << "} >= K_{" << k2.str() << "}: " << verdict.verdict_string() << "\n";
        for (const CheckOutcome& c : verdict.checks)
            os << "  " << c.name << ": " << (c.passed ? "pass" : "fail") << " (" << c.detail << ")\n";
        if (verdict.survives) {
            os << "  witness d:";
            for (long long d : verdict.witness_d) os << " " << d;
            os << "\n";
        }
        out.write(os.str());
    }
    return kExitOk;
}

int cmd_scan_minimality(const std::string& spec, long long q_max, int jobs, const Output& out) {
    if (!spec.empty()) {
        MinimalityReport report = minimality_scan(knot_from_spec(spec));
        if (out.format == "json")
            out.write(minimality_report_json(report).dump(2));
        else if (out.format == "csv")
            out.write(minimality_report_csv(report));
        else {
            std::ostringstream os;
            os << "K_{" << report.k1.str() << "}: " << report.candidates.size() << " candidates, "
               << report.survivor_indices.size() << " survivors\n";
            for (const ScanCandidate& c : report.candidates) {
                os << "  K_{" << c.k2.str() << "}: " << c.verdict.verdict_string();
                if (!c.case_label.empty()) os << "  case " << c.case_label;
                os << "\n";
            }
            out.write(os.str());
        }
        return report.survivor_indices.empty() ? kExitOk : kExitAnomaly;
    }

    // Sweep every three-slope knot up to q_max.
    CensusConfig config;
    config.q_max = q_max;
    config.jobs = jobs;
    CheckResult result = run_census_check("minimality", config);
    std::ostringstream os;
    os << "minimality scan over 3-slope knots, q <= " << q_max << ": " << result.cases << " cases, "
       << result.anomalies.size() << " anomalies\n";
    for (const std::string& a : result.anomalies) os << "  " << a << "\n";
    out.write(os.str());
    return result.passed() ? kExitOk : kExitAnomaly;
}

int cmd_census(const CensusConfig& config, const Output& out) {
    CensusReport report;
    std::ostringstream text;
    for (const std::string& name : census_check_names()) {
        if (!config.checks.empty() && !config.checks.count(name)) continue;
        CheckResult result = run_census_check(name, config);
        std::cout << (result.passed() ? "[PASS] " : "[FAIL] ") << result.name << "  cases=" << result.cases
                  << "  anomalies=" << result.anomalies.size() << "  (" << result.seconds << "s)" << std::endl;
        text << result.name << ": " << (result.passed() ? "pass" : "fail") << " cases=" << result.cases
             << " anomalies=" << result.anomalies.size() << "\n";
        for (const std::string& a : result.anomalies) text << "  " << a << "\n";
        report.results.push_back(std::move(result));
    }

    if (!out.path.empty() || out.format != "text") {
        if (out.format == "json") {
            Json doc;
            doc["q_max"] = config.q_max;
            doc["seed"] = config.seed;
            Json checks = Json::array();
            for (const CheckResult& r : report.results) {
                Json c;
                c["name"] = r.name;
                c["cases"] = r.cases;
                c["anomalies"] = r.anomalies;
                checks.push_back(std::move(c));
            }
            doc["checks"] = std::move(checks);
            doc["anomaly_count"] = report.anomaly_count();
            out.write(doc.dump(2));
        } else if (out.format == "csv") {
            std::ostringstream csv;
            csv << "check,cases,anomalies\n";
            for (const CheckResult& r : report.results)
                csv << r.name << "," << r.cases << "," << r.anomalies.size() << "\n";
            out.write(csv.str());
        } else {
            out.write(text.str());
        }
    }
    std::cout << (report.ok() ? "census clean" : "census found anomalies") << std::endl;
    return report.ok() ? kExitOk : kExitAnomaly;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact boundary-slope and partial-order toolkit for 2-bridge knots"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", out.path, "write the report to this file");
    long long q_max = 999;
    app.add_option("--q-max", q_max, "largest denominator to scan");
    int jobs = twobridge::default_jobs();
    app.add_option("--jobs", jobs, "worker threads");
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "seed for randomized sweeps");
    app.fallthrough();

    std::string knot_spec, knot_spec2, seed_text, word_text, checks_text;

    CLI::App* slopes = app.add_subcommand("slopes", "minimal Farey paths and boundary slopes of a knot");
    slopes->add_option("knot", knot_spec, "knot as p/q or a continued fraction r+[b1,b2,...]")->required();

    CLI::App* classify = app.add_subcommand("classify", "match the knot against the few-slope families");
    classify->add_option("knot", knot_spec, "knot as p/q or a continued fraction")->required();

    CLI::App* ors = app.add_subcommand("ors", "apply an epimorphism-word to a seed expansion");
    ors->add_option("--seed", seed_text, "strongly positive seed vector, e.g. [3]")->required();
    ors->add_option("--word", word_text, "word syllables c1:e1,c2:e2,... with e in {+,-}")->required();

    CLI::App* order = app.add_subcommand("order", "necessary-condition battery for K1 >= K2");
    order->add_option("k1", knot_spec, "candidate larger knot")->required();
    order->add_option("k2", knot_spec2, "candidate smaller knot")->required();

    CLI::App* scan = app.add_subcommand("scan-minimality", "battery against all proper-divisor candidates");
    scan->add_option("knot", knot_spec, "knot as p/q or a continued fraction");

    CLI::App* census = app.add_subcommand("census", "run the verification suites");
    census->add_option("--checks", checks_text, "comma-separated subset of the check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (slopes->parsed()) return cmd_slopes(knot_spec, out);
        if (classify->parsed()) return cmd_classify(knot_spec, out);
        if (ors->parsed()) return cmd_ors(seed_text, word_text, out);
        if (order->parsed()) return cmd_order(knot_spec, knot_spec2, out);
        if (scan->parsed()) return cmd_scan_minimality(knot_spec, q_max, jobs, out);
        if (census->parsed()) {
            CensusConfig config;
            config.q_max = q_max;
            config.jobs = jobs;
            config.seed = seed;
            if (!checks_text.empty()) {
                std::istringstream in(checks_text);
                std::string item;
                while (std::getline(in, item, ',')) {
                    const auto& known = census_check_names();
                    if (std::find(known.begin(), known.end(), item) == known.end()) {
                        std::cerr << "unknown check: " << item << std::endl;
                        return kExitUsage;
                    }
                    config.checks.insert(item);
                }
            }
            return cmd_census(config, out);
        }
    } catch (const twobridge::KnotError& e) {
        std::cerr << "invalid knot: " << e.what() << std::endl;
        return kExitInvalidKnot;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitAnomaly;
    }
    return kExitUsage;
}
