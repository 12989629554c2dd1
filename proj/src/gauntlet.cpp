#include "tau/gauntlet.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tau/congruence.hpp"
#include "tau/lucas.hpp"

namespace tau {

void apply_config_text(std::istream& in, GauntletConfig& config) {
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto begin = s.find_first_not_of(" \t\r");
            const auto end = s.find_last_not_of(" \t\r");
            return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("gauntlet config: malformed line '" + line + "'");
        if (key == "series_order") {
            config.series_limit = std::stoull(value);
        } else if (key == "curve_bound") {
            config.curve_bound = Int(value);
        } else if (key == "prime_bound") {
            config.prime_bound = std::stoull(value);
        } else if (key == "thue_box") {
            config.thue_box = std::stoull(value);
        } else if (key == "convergent_precision") {
            config.convergent_precision = static_cast<unsigned>(std::stoul(value));
        } else if (key == "defect_max_index") {
            config.defect_max_index = std::stoull(value);
        } else {
            throw std::invalid_argument("gauntlet config: unknown key '" + key + "'");
        }
    }
}

void GauntletConfig::validate() const {
    if (series_limit < 2) throw std::invalid_argument("gauntlet config: series limit must be at least 2");
    if (curve_bound < 1) throw std::invalid_argument("gauntlet config: curve bound must be positive");
    if (prime_bound < 3) throw std::invalid_argument("gauntlet config: prime bound must be at least 3");
    if (thue_box == 0) throw std::invalid_argument("gauntlet config: Thue box must be positive");
    if (convergent_precision < 30) throw std::invalid_argument("gauntlet config: convergent precision too low");
    if (defect_max_index < 3) throw std::invalid_argument("gauntlet config: defect scan index must be at least 3");
    if (prime_bound > series_limit)
        throw std::invalid_argument("gauntlet config: insufficient series order for the prime suites");
}

std::string ReductionTarget::name() const {
    std::ostringstream out;
    out << "reduction-ell" << ell << "-d" << d;
    return out.str();
}

std::vector<ReductionTarget> reduction_targets(uint64_t ell) {
    const CurveInstance c_plus{CurveFamily::C, +1, 6, ell};
    const CurveInstance c_minus{CurveFamily::C, -1, 6, ell};
    const CurveInstance h_plus{CurveFamily::H, +1, 11, ell};
    const CurveInstance h_minus{CurveFamily::H, -1, 11, ell};
    switch (ell) {
        case 3:
            return {{3, 2, std::pair{c_plus, c_minus}}};
        case 5:
            return {{5, 4, std::pair{h_plus, h_minus}}};
        case 7:
            return {{7, 6, ThueTarget{3, Int(7), Int(100)}}};
        case 691:
            return {
                {691, 2, std::pair{c_plus, c_minus}},
                {691, 4, std::pair{h_plus, h_minus}},
                {691, 22, ThueTarget{11, Int(691), Int(100)}},
                {691, 690, ThueTarget{345, Int(691), Int(4)}},
            };
        default:
            throw std::invalid_argument("reduction_targets: ell must be one of 3, 5, 7, 691");
    }
}

CheckReport verify_theorem(const TauOracle& oracle, uint64_t max_n) {
    if (max_n < 2) throw std::invalid_argument("verify_theorem: max_n must be at least 2");
    if (max_n > oracle.limit()) throw std::invalid_argument("verify_theorem: max_n exceeds the oracle limit");
    Stopwatch timer;
    CheckReport report;
    report.name = "theorem-values";
    report.params["max_n"] = std::to_string(max_n);
    for (uint64_t n = 2; n <= max_n; ++n) {
        const Int t = abs(oracle.coefficient(n));
        if (t == 1 || t == 3 || t == 5 || t == 7 || t == 691) {
            Witness w;
            w["n"] = std::to_string(n);
            w["tau_n"] = oracle.coefficient(n).get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

namespace {

CheckReport deligne_report(const TauOracle& oracle) {
    Stopwatch timer;
    CheckReport report;
    report.name = "deligne-bound";
    report.params["limit"] = std::to_string(oracle.limit());
    report.params["primes"] = std::to_string(oracle.primes().size());
    for (uint64_t p : oracle.primes()) {
        const Int& tp = oracle.tau_prime(p);
        if (tp * tp > 4 * int_pow(p, 11)) {
            Witness w;
            w["p"] = std::to_string(p);
            w["tau_p"] = tp.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

CheckReport defect_scan_suite(const TauOracle& oracle, uint64_t prime_bound, std::size_t max_index) {
    Stopwatch timer;
    CheckReport report;
    report.name = "defect-scan-suite";
    report.params["prime_bound"] = std::to_string(prime_bound);
    report.params["max_index"] = std::to_string(max_index);
    std::size_t scanned = 0, skipped = 0, defects = 0;
    for (uint64_t p : oracle.primes()) {
        if (p > prime_bound || p == 2) continue;
        const Int& tp = oracle.tau_prime(p);
        // p | tau(p) falls outside the Lucas setting; those towers stay away
        // from +-1 because p^m divides tau(p^m), which is checked here.
        if (gcd(tp, int_pow(p, 11)) != 1) {
            ++skipped;
            for (unsigned m = 1; m <= 5; ++m) {
                const Int value = tau_prime_power(tp, p, m);
                if (!mpz_divisible_p(value.get_mpz_t(), int_pow(p, m).get_mpz_t())) {
                    Witness w;
                    w["p"] = std::to_string(p);
                    w["m"] = std::to_string(m);
                    w["tau_p^m"] = value.get_str();
                    w["why"] = "p^m does not divide tau(p^m)";
                    report.witnesses.push_back(std::move(w));
                }
            }
            continue;
        }
        ++scanned;
        const LucasSpec spec(tp, int_pow(p, 11));
        for (const DefectRecord& d : defect_scan(spec, max_index)) {
            ++defects;
            const Int v = abs(d.value);
            if (v == 1 || is_probable_prime(v)) {
                Witness w;
                w["p"] = std::to_string(p);
                w["index"] = std::to_string(d.index);
                w["value"] = d.value.get_str();
                w["why"] = "defective value is a unit or a prime";
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.params["primes_scanned"] = std::to_string(scanned);
    report.params["primes_skipped"] = std::to_string(skipped);
    report.params["defects"] = std::to_string(defects);
    report.duration_seconds = timer.seconds();
    return report;
}

std::vector<IntegerPoint> filter_by_bound(std::vector<IntegerPoint> points, const Int& bound) {
    std::erase_if(points, [&](const IntegerPoint& pt) { return abs(pt.x) > bound; });
    return points;
}

void compare_point_sets(const std::string& label, const std::vector<IntegerPoint>& found,
                        const std::vector<IntegerPoint>& expected, CheckReport& report) {
    for (const IntegerPoint& pt : found) {
        if (std::find(expected.begin(), expected.end(), pt) == expected.end()) {
            Witness w;
            w["instance"] = label;
            w["kind"] = "unexpected-point";
            w["x"] = pt.x.get_str();
            w["y"] = pt.y.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
    for (const IntegerPoint& pt : expected) {
        if (std::find(found.begin(), found.end(), pt) == found.end()) {
            Witness w;
            w["instance"] = label;
            w["kind"] = "missing-point";
            w["x"] = pt.x.get_str();
            w["y"] = pt.y.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
}

// Integer points the bounded searches are allowed to see, per instance name.
std::vector<IntegerPoint> known_points(const std::string& curve_name) {
    if (curve_name == "C+_{6,3}") return {{Int(1), Int(-2)}, {Int(1), Int(2)}};
    if (curve_name == "H+_{11,5}")
        return {{Int(-1), Int(-5)}, {Int(-1), Int(5)}, {Int(1), Int(-5)}, {Int(1), Int(5)}};
    if (curve_name == "H+_{2,5}")
        return {{Int(-2), Int(-10)}, {Int(-2), Int(10)}, {Int(-1), Int(-5)}, {Int(-1), Int(5)},
                {Int(1), Int(-5)},   {Int(1), Int(5)},   {Int(2), Int(-10)}, {Int(2), Int(10)}};
    return {};
}

// A curve point would feed back into the tau reduction only with X an odd
// prime; a Thue solution only with X an 11th power of an odd prime.
bool curve_x_is_odd_prime(const Int& x) { return x >= 3 && mpz_odd_p(x.get_mpz_t()) && is_probable_prime(x); }

bool thue_x_is_odd_prime_11th_power(const Int& x) {
    if (x < 2048) return false;  // 3^11 is the smallest odd candidate; 2^11 = 2048 is even
    Int root;
    if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), 11) == 0) return false;
    return curve_x_is_odd_prime(root);
}

void check_curve_target(const CurveInstance& instance, const Int& bound, CheckReport& report) {
    const std::vector<IntegerPoint> found = search_curve(instance, bound);
    compare_point_sets(instance.name(), found, filter_by_bound(known_points(instance.name()), bound), report);
    for (const IntegerPoint& pt : found) {
        if (curve_x_is_odd_prime(pt.x)) {
            Witness w;
            w["instance"] = instance.name();
            w["kind"] = "tau-shaped-point";
            w["x"] = pt.x.get_str();
            w["y"] = pt.y.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
}

std::vector<ThueSolution> expected_thue_solutions(const ThueTarget& target) {
    if (target.m == 3) {
        return {{Int(-3), Int(-5), Int(7)}, {Int(-2), Int(-1), Int(-7)}, {Int(-1), Int(-4), Int(-7)},
                {Int(1), Int(4), Int(7)},   {Int(2), Int(1), Int(7)},    {Int(3), Int(5), Int(-7)}};
    }
    if (target.m == 345) return {{Int(-1), Int(-4), Int(-691)}, {Int(1), Int(4), Int(691)}};
    return {};
}

void check_thue_target(const ThueTarget& target, CheckReport& report) {
    std::ostringstream label;
    label << "F_" << 2 * target.m << "=+-" << target.target.get_str();
    const std::vector<ThueSolution> found = search_F(target.m, target.target, target.x_bound);
    const std::vector<ThueSolution> expected = expected_thue_solutions(target);
    for (const ThueSolution& s : found) {
        if (std::find(expected.begin(), expected.end(), s) == expected.end()) {
            Witness w;
            w["instance"] = label.str();
            w["kind"] = "unexpected-solution";
            w["x"] = s.x.get_str();
            w["y"] = s.y.get_str();
            w["value"] = s.value.get_str();
            report.witnesses.push_back(std::move(w));
        }
        if (thue_x_is_odd_prime_11th_power(s.x)) {
            Witness w;
            w["instance"] = label.str();
            w["kind"] = "tau-shaped-solution";
            w["x"] = s.x.get_str();
            w["y"] = s.y.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
    for (const ThueSolution& s : expected) {
        if (std::find(found.begin(), found.end(), s) == found.end()) {
            Witness w;
            w["instance"] = label.str();
            w["kind"] = "missing-solution";
            w["x"] = s.x.get_str();
            w["y"] = s.y.get_str();
            w["value"] = s.value.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
}

CheckReport reduction_target_report(const ReductionTarget& target, const Int& curve_bound) {
    Stopwatch timer;
    CheckReport report;
    report.name = target.name();
    report.params["ell"] = std::to_string(target.ell);
    report.params["d"] = std::to_string(target.d);
    if (const auto* curves = std::get_if<std::pair<CurveInstance, CurveInstance>>(&target.instance)) {
        report.params["instances"] = curves->first.name() + " " + curves->second.name();
        report.params["bound"] = curve_bound.get_str();
        check_curve_target(curves->first, curve_bound, report);
        check_curve_target(curves->second, curve_bound, report);
    } else {
        const auto& thue = std::get<ThueTarget>(target.instance);
        std::ostringstream label;
        label << "F_" << 2 * thue.m << "=+-" << thue.target.get_str();
        report.params["instances"] = label.str();
        report.params["x_bound"] = thue.x_bound.get_str();
        check_thue_target(thue, report);
    }
    report.duration_seconds = timer.seconds();
    return report;
}

CheckReport lucas_facts_report(const Int& curve_bound) {
    Stopwatch timer;
    CheckReport report;
    report.name = "lucas-number-facts";
    report.params["pell_bound"] = "1000";
    report.params["h25_bound"] = curve_bound.get_str();

    // The Pell anchor curve behind the H_{d,5} classification.
    const CurveInstance h25{CurveFamily::H, +1, 2, 5};
    check_curve_target(h25, curve_bound, report);

    // Pell X-values split the classical Lucas numbers by index parity;
    // enumeration throws if the split fails.
    const PellSplit split = pell_split_enumeration(1000);
    report.params["pell_plus"] = std::to_string(split.plus_x.size());
    report.params["pell_minus"] = std::to_string(split.minus_x.size());

    // L_1 = 1 and L_3 = 4 are the only perfect powers among L_0..L_40.
    const std::vector<Int> lucas = classical_lucas_numbers(41);
    for (std::size_t i = 0; i < lucas.size(); ++i) {
        const bool expected = (i == 1 || i == 3);
        if (is_perfect_power(lucas[i]) != expected) {
            Witness w;
            w["kind"] = "perfect-power-lucas";
            w["index"] = std::to_string(i);
            w["value"] = lucas[i].get_str();
            report.witnesses.push_back(std::move(w));
        }
    }

    // The classical defective Fibonacci anchors.
    const std::vector<DefectRecord> fib_defects = defect_scan(LucasSpec(Int(1), Int(-1)), 30);
    std::vector<std::size_t> indices;
    for (const DefectRecord& d : fib_defects) indices.push_back(d.index);
    if (indices != std::vector<std::size_t>{6, 12}) {
        Witness w;
        w["kind"] = "fibonacci-defects";
        std::ostringstream got;
        for (std::size_t i : indices) got << i << " ";
        w["indices"] = got.str();
        w["expected"] = "6 12";
        report.witnesses.push_back(std::move(w));
    }

    report.duration_seconds = timer.seconds();
    return report;
}

}  // namespace

std::vector<CheckReport> run_gauntlet(const GauntletConfig& config, std::ostream* progress) {
    config.validate();
    std::vector<CheckReport> reports;
    auto emit = [&](CheckReport report) {
        if (progress) *progress << report.to_text() << "\n" << std::flush;
        reports.push_back(std::move(report));
    };

    Stopwatch build_timer;
    const TauOracle oracle = TauOracle::build(config.series_limit);
    if (progress)
        *progress << "# series built to order " << config.series_limit + 1 << " in " << build_timer.seconds()
                  << "s\n";

    emit(verify_congruences(oracle, config.series_limit));
    emit(verify_parity(oracle, config.series_limit));
    emit(deligne_report(oracle));
    emit(cross_check_hecke(oracle));
    emit(verify_m_ell_tables(config.prime_bound));
    emit(defect_scan_suite(oracle, config.prime_bound, config.defect_max_index));
    emit(lucas_facts_report(config.curve_bound));
    for (uint64_t ell : {3ull, 5ull, 7ull, 691ull}) {
        for (const ReductionTarget& target : reduction_targets(ell)) {
            emit(reduction_target_report(target, config.curve_bound));
        }
    }
    emit(check_embedded_thue11(config.thue_box));
    ConvergentFilterOptions convergent_options;
    convergent_options.precision_digits = config.convergent_precision;
    emit(convergent_filter_report(convergent_options));
    emit(verify_theorem(oracle, config.series_limit));
    return reports;
}

}  // namespace tau
