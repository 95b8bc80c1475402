#include "app.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratrec/detail/splitmix64.hpp"
#include "ratrec/ratrec.hpp"

namespace ratrec::cli {
namespace {

using nlohmann::json;

json to_json(const Rational& value) {
    return json{{"num", value.numerator().to_string()},
                {"den", value.denominator().to_string()}};
}

json to_json(const ConvergentStep& step) {
    return json{{"index", step.index},
                {"quotient", step.quotient.to_string()},
                {"h", step.h.to_string()},
                {"k", step.k.to_string()}};
}

json thresholds_json(const BoundedTarget& bound) {
    return json{{"legacy", threshold_legacy(bound).to_string()},
                {"improved", threshold_improved(bound).to_string()},
                {"uniqueness", threshold_uniqueness(bound).to_string()}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string trail_values(const std::vector<ConvergentStep>& steps) {
    std::string line;
    for (const ConvergentStep& s : steps) {
        if (!line.empty()) line += ", ";
        line += s.value().to_string();
    }
    return line;
}

// Oracle guard, overridable through RATRECOVER_MAX_ORACLE_N.
unsigned long long oracle_scan_limit() {
    const char* env = std::getenv("RATRECOVER_MAX_ORACLE_N");
    if (env == nullptr || *env == '\0') return kDefaultOracleScanLimit;
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw std::invalid_argument("RATRECOVER_MAX_ORACLE_N is not a number: " +
                                    std::string(env));
    return value;
}

int cmd_recover(const std::string& approx_text, long long bound_value, bool as_json,
                std::ostream& out) {
    BoundedTarget bound(bound_value);
    Rational approx = parse_decimal(approx_text);
    RecoveryResult result = recover(approx, bound);
    if (as_json) {
        json doc{{"input", approx_text},
                 {"bound", bound_value},
                 {"thresholds", thresholds_json(bound)},
                 {"result", to_json(result.recovered)},
                 {"certified", result.certified},
                 {"termination", to_string(result.termination)},
                 {"residual", result.residual.to_string()},
                 {"trail", json::array()},
                 {"next", nullptr}};
        for (const ConvergentStep& s : result.trail) doc["trail"].push_back(to_json(s));
        if (result.next_step) doc["next"] = to_json(*result.next_step);
        emit(out, doc);
    } else {
        out << "trail: " << trail_values(result.trail) << "\n";
        if (result.next_step)
            out << "next beyond bound: " << result.next_step->value() << "\n";
        out << "termination: " << to_string(result.termination) << "\n";
        out << "residual: " << result.residual << "\n";
        out << "certified: " << (result.certified ? "yes" : "no") << "\n";
        out << result.recovered << "\n";
    }
    return result.certified ? 0 : 2;
}

int cmd_cf(const std::string& approx_text, bool as_json, std::ostream& out) {
    Rational value = parse_decimal(approx_text);
    ContinuedFraction cf = cf_expand(value);
    if (as_json) {
        json doc{{"input", approx_text},
                 {"quotients", json::array()},
                 {"canonical", cf.is_canonical()},
                 {"value", value.to_string()}};
        for (const BigInt& q : cf.quotients()) doc["quotients"].push_back(q.to_string());
        emit(out, doc);
    } else {
        out << cf.to_string() << "\n";
    }
    return 0;
}

int cmd_convergents(const std::string& approx_text, bool as_json, std::ostream& out) {
    Rational value = parse_decimal(approx_text);
    auto steps = convergents(cf_expand(value));
    if (as_json) {
        json doc{{"input", approx_text}, {"trail", json::array()}};
        for (const ConvergentStep& s : steps) doc["trail"].push_back(to_json(s));
        emit(out, doc);
    } else {
        for (const ConvergentStep& s : steps)
            out << s.index << " " << s.quotient << " " << s.value() << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& approx_text, long long bound_value, bool as_json,
               std::ostream& out) {
    BoundedTarget bound(bound_value);
    Rational approx = parse_decimal(approx_text);
    std::optional<Rational> found = farey_oracle(approx, bound, oracle_scan_limit());
    if (as_json) {
        json doc{{"input", approx_text},
                 {"bound", bound_value},
                 {"thresholds", thresholds_json(bound)},
                 {"result", found ? to_json(*found) : json(nullptr)},
                 {"certified", found.has_value()}};
        emit(out, doc);
    } else if (found) {
        out << *found << "\n";
    } else {
        out << "no candidate within " << threshold_uniqueness(bound) << "\n";
    }
    return found ? 0 : 2;
}

int cmd_counterexample(long long n, bool as_json, std::ostream& out) {
    CounterexampleInstance inst = make_counterexample(n);
    BoundedTarget bound(n);
    ContinuedFraction cf = cf_expand(inst.approx);
    if (as_json) {
        json doc{{"n", n},
                 {"target", to_json(inst.target)},
                 {"approx", to_json(inst.approx)},
                 {"error", inst.error.to_string()},
                 {"thresholds", thresholds_json(bound)},
                 {"expansion", json::array()}};
        for (const BigInt& q : cf.quotients()) doc["expansion"].push_back(q.to_string());
        emit(out, doc);
    } else {
        out << "target: " << inst.target << "\n";
        out << "approx: " << inst.approx << "\n";
        out << "error: " << inst.error << "\n";
        out << "improved radius: " << threshold_improved(bound) << "\n";
        out << "uniqueness radius: " << threshold_uniqueness(bound) << "\n";
        out << "expansion: " << cf.to_string() << "\n";
    }
    return 0;
}

int cmd_gap(long long n, bool as_json, std::ostream& out) {
    GapReport report = demonstrate_gap(n, oracle_scan_limit());
    if (as_json) {
        json doc{{"n", n},
                 {"target", to_json(report.instance.target)},
                 {"approx", to_json(report.instance.approx)},
                 {"error", report.instance.error.to_string()},
                 {"cf_result", to_json(report.cf.recovered)},
                 {"oracle_result", report.oracle ? to_json(*report.oracle) : json(nullptr)},
                 {"error_above_improved", report.error_above_improved},
                 {"error_within_uniqueness", report.error_within_uniqueness},
                 {"cf_missed", report.cf_missed},
                 {"oracle_hit", report.oracle_hit},
                 {"gap_shown", report.gap_shown()}};
        emit(out, doc);
    } else {
        out << "target: " << report.instance.target << "\n";
        out << "approx: " << report.instance.approx << " (error " << report.instance.error
            << ")\n";
        out << "error above improved radius: " << (report.error_above_improved ? "yes" : "no")
            << "\n";
        out << "error within uniqueness radius: "
            << (report.error_within_uniqueness ? "yes" : "no") << "\n";
        out << "cf result: " << report.cf.recovered
            << (report.cf_missed ? " (missed)" : " (hit)") << "\n";
        if (report.oracle)
            out << "oracle result: " << *report.oracle
                << (report.oracle_hit ? " (hit)" : " (missed)") << "\n";
        else
            out << "oracle result: none\n";
        out << "gap shown: " << (report.gap_shown() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_poly_recover(const std::string& path, long long bound_value, bool as_json,
                     std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    PolynomialApprox poly = parse_polynomial(in);
    BoundedTarget bound(bound_value);
    PolynomialRecovery rec = recover_polynomial(poly, bound);
    if (as_json) {
        json terms = json::array();
        for (const ExactTerm& t : rec.polynomial.terms) {
            json jt = to_json(t.coefficient);
            jt["exponents"] = t.exponents;
            terms.push_back(jt);
        }
        json doc{{"input", path},
                 {"bound", bound_value},
                 {"certified", rec.certified},
                 {"variables", rec.polynomial.variables},
                 {"terms", terms}};
        emit(out, doc);
    } else {
        out << format_polynomial(rec.polynomial);
    }
    return rec.certified ? 0 : 2;
}

}  // namespace

std::string run_bench(long long bound_value, long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("bench: trials must be at least 1");
    BoundedTarget bound(bound_value);
    const Rational zero(0);
    const Rational legacy = threshold_legacy(bound);
    const Rational improved = threshold_improved(bound);
    const Rational uniqueness = threshold_uniqueness(bound);

    struct Band {
        const char* name;
        Rational lo;
        Rational hi;
        bool inject;  // mix in the counterexample family
    };
    const Band bands[] = {
        {"below_legacy", zero, legacy, false},
        {"legacy_to_improved", legacy, improved, false},
        {"improved_to_uniqueness", improved, uniqueness, bound_value >= 3},
    };

    detail::SplitMix64 rng(seed);
    std::string csv = "band,cf_success,oracle_success,trials\n";
    for (const Band& band : bands) {
        long long cf_ok = 0, oracle_ok = 0;
        for (long long t = 0; t < trials; ++t) {
            Rational target, approx;
            if (band.inject && t % 8 == 0) {
                CounterexampleInstance inst = make_counterexample(bound_value);
                target = inst.target;
                approx = inst.approx;
            } else {
                long long den =
                    1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(bound_value)));
                long long num;
                do {
                    num = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * den)));
                } while (std::gcd(num, den) != 1);
                target = Rational(num, den);
                // magnitude strictly inside (lo, hi)
                Rational eps = band.lo + (band.hi - band.lo) *
                                             Rational(1 + static_cast<long long>(rng.below(4095)),
                                                      4096);
                if (rng.flip()) eps = -eps;
                approx = target + eps;
            }
            if (recover(approx, bound).recovered == target) ++cf_ok;
            auto oracle = farey_oracle(approx, bound,
                                       static_cast<unsigned long long>(bound_value));
            if (oracle && *oracle == target) ++oracle_ok;
        }
        char row[160];
        std::snprintf(row, sizeof(row), "%s,%.6f,%.6f,%lld\n", band.name,
                      static_cast<double>(cf_ok) / static_cast<double>(trials),
                      static_cast<double>(oracle_ok) / static_cast<double>(trials), trials);
        csv += row;
    }
    return csv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rational recovery from numeric approximations"};
    app.require_subcommand(1);

    std::string approx_text, input_path;
    long long bound_value = 0, n_value = 0, trials = 0;
    std::uint64_t seed = 0;
    bool as_json = false;

    CLI::App* c_recover = app.add_subcommand(
        "recover", "recover the bounded-denominator rational behind an approximation");
    c_recover->add_option("--approx", approx_text, "approximation (decimal or p/q)")->required();
    c_recover->add_option("--bound", bound_value, "denominator bound N >= 2")->required();
    c_recover->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_cf = app.add_subcommand("cf", "continued-fraction expansion");
    c_cf->add_option("--approx", approx_text, "value (decimal or p/q)")->required();
    c_cf->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_conv = app.add_subcommand("convergents", "convergent table of the expansion");
    c_conv->add_option("--approx", approx_text, "value (decimal or p/q)")->required();
    c_conv->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_oracle =
        app.add_subcommand("oracle", "exhaustive nearest-fraction search up to the bound");
    c_oracle->add_option("--approx", approx_text, "approximation (decimal or p/q)")->required();
    c_oracle->add_option("--bound", bound_value, "denominator bound N >= 2")->required();
    c_oracle->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_counter =
        app.add_subcommand("counterexample", "the family (n-1)/n that defeats recovery");
    c_counter->add_option("--n", n_value, "family parameter n >= 3")->required();
    c_counter->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_gap = app.add_subcommand(
        "gap", "show the counterexample beating recovery but not the oracle");
    c_gap->add_option("--n", n_value, "family parameter n >= 3")->required();
    c_gap->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_poly = app.add_subcommand(
        "poly-recover", "recover exact rational coefficients of a polynomial file");
    c_poly->add_option("--input", input_path, "polynomial file (vars: header + terms)")
        ->required();
    c_poly->add_option("--bound", bound_value, "denominator bound N >= 2")->required();
    c_poly->add_flag("--json", as_json, "emit a JSON document");

    CLI::App* c_bench =
        app.add_subcommand("bench", "per-band success rates of recovery vs oracle (CSV)");
    c_bench->add_option("--bound", bound_value, "denominator bound N >= 2")->required();
    c_bench->add_option("--trials", trials, "trials per band")->required();
    c_bench->add_option("--seed", seed, "seed for the SplitMix64 sampler")->required();

    std::vector<const char*> argv;
    argv.push_back("ratrec");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    }

    try {
        if (c_recover->parsed()) return cmd_recover(approx_text, bound_value, as_json, out);
        if (c_cf->parsed()) return cmd_cf(approx_text, as_json, out);
        if (c_conv->parsed()) return cmd_convergents(approx_text, as_json, out);
        if (c_oracle->parsed()) return cmd_oracle(approx_text, bound_value, as_json, out);
        if (c_counter->parsed()) return cmd_counterexample(n_value, as_json, out);
        if (c_gap->parsed()) return cmd_gap(n_value, as_json, out);
        if (c_poly->parsed()) return cmd_poly_recover(input_path, bound_value, as_json, out);
        if (c_bench->parsed()) {
            out << run_bench(bound_value, trials, seed);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace ratrec::cli
