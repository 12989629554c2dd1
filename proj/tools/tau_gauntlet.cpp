#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "tau/congruence.hpp"
#include "tau/curves.hpp"
#include "tau/cyclo.hpp"
#include "tau/gauntlet.hpp"
#include "tau/lucas.hpp"
#include "tau/series.hpp"

namespace {

constexpr uint64_t kMaxSeriesLimit = 100000;  // schoolbook series beyond this is impractical

int report_exit(const tau::CheckReport& report, bool json) {
    std::cout << (json ? report.to_json_line() : report.to_text()) << "\n";
    return report.passed() ? 0 : 1;
}

uint64_t largest_prime_factor(uint64_t n) {
    uint64_t largest = 1;
    for (uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            largest = p;
            n /= p;
        }
    }
    return n > 1 ? n : largest;
}

int run_tau(uint64_t n, bool json) {
    if (n == 0) throw std::invalid_argument("tau: n must be positive");
    const uint64_t lpf = largest_prime_factor(n);
    if (lpf > kMaxSeriesLimit)
        throw std::invalid_argument("tau: largest prime factor exceeds the practical series scale (100000)");
    const tau::TauOracle oracle = tau::TauOracle::build(std::max<uint64_t>(lpf, 1));
    const tau::Int value = oracle.tau(n);
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["tau"] = value.get_str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    return 0;
}

int run_delta(uint64_t order, bool json) {
    const tau::TruncatedSeries series = tau::delta_series(order);
    for (uint64_t n = 1; n < order; ++n) {
        if (json) {
            nlohmann::ordered_json j;
            j["n"] = n;
            j["tau"] = series.coeff(n).get_str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << series.coeff(n).get_str() << "\n";
        }
    }
    return 0;
}

int run_m_ell(uint64_t ell, uint64_t max_prime, bool json) {
    // The four congruence moduli need no series; any other odd prime ell
    // reads tau(p) from one.
    const bool special = (ell == 3 || ell == 5 || ell == 7 || ell == 691);
    std::optional<tau::TauOracle> oracle;
    if (!special) {
        if (max_prime > kMaxSeriesLimit) throw std::invalid_argument("m-ell: bound beyond the practical series scale");
        oracle.emplace(tau::TauOracle::build(max_prime));
    }
    std::size_t mismatches = 0;
    for (uint64_t p : tau::primes_up_to(max_prime)) {
        if (p == 2) continue;
        uint64_t residue;
        if (special) {
            residue = tau::tau_mod_special(p, ell);
        } else {
            tau::Int r = oracle->tau_prime(p) % tau::Int(ell);
            if (r < 0) r += tau::Int(ell);
            residue = r.get_ui();
        }
        const tau::MEllResult result = tau::m_ell(p, ell, residue);
        std::string verdict;
        if (ell == 3 || ell == 5 || ell == 7) {
            const uint64_t expected = tau::expected_m_ell(p, ell);
            if (!result.value || *result.value != expected) {
                verdict = "MISMATCH";
                ++mismatches;
            }
        } else if (ell == 691 && result.value) {
            const uint64_t d = *result.value;
            if ((d + 1) % 2 == 1 && tau::is_prime_u64(d + 1) && d != 2 && d != 4 && d != 22 && d != 690) {
                verdict = "OUTSIDE-{2,4,22,690}";
                ++mismatches;
            }
        }
        if (json) {
            nlohmann::ordered_json j;
            j["p"] = p;
            j["ell"] = ell;
            if (result.value) {
                j["m"] = *result.value;
            } else {
                j["m"] = nullptr;
            }
            if (!verdict.empty()) j["verdict"] = verdict;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << p << " " << (result.value ? std::to_string(*result.value) : "no-vanishing");
            if (!verdict.empty()) std::cout << " " << verdict;
            std::cout << "\n";
        }
    }
    return mismatches == 0 ? 0 : 1;
}

int run_curve(const std::string& family, const std::string& sign, uint32_t d, uint64_t ell, const std::string& bound,
              bool json) {
    tau::CurveInstance instance;
    instance.family = (family == "H") ? tau::CurveFamily::H : tau::CurveFamily::C;
    instance.sign = (sign == "+") ? +1 : -1;
    instance.d = d;
    instance.ell = ell;
    const tau::Int b(bound);
    const auto points = tau::search_curve(instance, b);
    for (const tau::IntegerPoint& pt : points) {
        if (json) {
            nlohmann::ordered_json j;
            j["curve"] = instance.name();
            j["x"] = pt.x.get_str();
            j["y"] = pt.y.get_str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << pt.x.get_str() << " " << pt.y.get_str() << "\n";
        }
    }
    if (points.empty()) {
        if (json) {
            nlohmann::ordered_json j;
            j["curve"] = instance.name();
            j["points"] = 0;
            j["bound"] = b.get_str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "# " << instance.name() << ": no integer points with |X| <= " << b.get_str() << "\n";
        }
    }
    return 0;
}

int run_thue_f(std::size_t m, const std::string& target, const std::string& x_bound, bool json) {
    const auto solutions = tau::search_F(m, tau::Int(target), tau::Int(x_bound));
    for (const tau::ThueSolution& s : solutions) {
        if (json) {
            nlohmann::ordered_json j;
            j["x"] = s.x.get_str();
            j["y"] = s.y.get_str();
            j["value"] = s.value.get_str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << s.x.get_str() << " " << s.y.get_str() << " " << s.value.get_str() << "\n";
        }
    }
    if (solutions.empty()) {
        if (json) {
            nlohmann::ordered_json j;
            j["solutions"] = 0;
            j["m"] = m;
            j["target"] = target;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "# F_" << 2 * m << " = +-" << target << ": no solutions with |X| <= " << x_bound << "\n";
        }
    }
    return 0;
}

int run_convergents(const tau::ConvergentFilterOptions& options, bool json) {
    const tau::ConvergentFilterResult result = tau::convergent_filter(options);
    for (const tau::ConvergentEvaluation& eval : result.candidates) {
        const auto& c = eval.candidate;
        // All four sign choices of (numerator, denominator), one line each.
        const std::tuple<tau::Int, tau::Int, const tau::Int*> rows[4] = {
            {c.numerator, c.denominator, &eval.value_pp},
            {-c.numerator, c.denominator, &eval.value_pm},
            {c.numerator, -c.denominator, &eval.value_mp},
            {-c.numerator, -c.denominator, &eval.value_mm},
        };
        for (const auto& [num, den, value] : rows) {
            if (json) {
                nlohmann::ordered_json j;
                j["k"] = c.k;
                j["num"] = num.get_str();
                j["den"] = den.get_str();
                j["eval"] = value->get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << c.k << " " << num.get_str() << " " << den.get_str() << " " << value->get_str() << "\n";
            }
        }
    }
    if (!json) {
        std::cout << "# " << result.candidates.size() << " candidates, " << result.violation_count
                  << " evaluate to +-" << options.target.get_str() << "\n";
    }
    return result.violation_count == 0 ? 0 : 1;
}

void load_config_file(const std::string& path, tau::GauntletConfig& config) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("gauntlet: cannot open config file " + path);
    tau::apply_config_text(in, config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-gauntlet: exact Ramanujan tau arithmetic and bounded Diophantine verification"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON lines instead of text");

    int exit_code = 0;

    // tau <n>
    uint64_t tau_n = 0;
    auto* tau_cmd = app.add_subcommand("tau", "compute tau(n) exactly");
    tau_cmd->add_option("n", tau_n, "positive integer")->required();
    tau_cmd->callback([&] { exit_code = run_tau(tau_n, json); });

    // delta --order N
    uint64_t delta_order = 0;
    auto* delta_cmd = app.add_subcommand("delta", "dump tau(1)..tau(order-1), one integer per line");
    delta_cmd->add_option("--order", delta_order, "series truncation order")->required();
    delta_cmd->callback([&] {
        if (delta_order > kMaxSeriesLimit) throw std::invalid_argument("delta: order beyond the practical scale");
        exit_code = run_delta(delta_order, json);
    });

    // congruences --max N
    uint64_t congruence_max = 0;
    auto* congruence_cmd = app.add_subcommand("congruences", "verify the four divisor-sum congruences");
    congruence_cmd->add_option("--max", congruence_max, "check all n up to this bound")->required();
    congruence_cmd->callback([&] {
        if (congruence_max > kMaxSeriesLimit) throw std::invalid_argument("congruences: bound beyond the practical scale");
        const tau::TauOracle oracle = tau::TauOracle::build(congruence_max);
        exit_code = report_exit(tau::verify_congruences(oracle, congruence_max), json);
    });

    // parity --max N
    uint64_t parity_max = 0;
    auto* parity_cmd = app.add_subcommand("parity", "verify tau(n) is odd exactly at odd squares");
    parity_cmd->add_option("--max", parity_max, "check all n up to this bound")->required();
    parity_cmd->callback([&] {
        if (parity_max > kMaxSeriesLimit) throw std::invalid_argument("parity: bound beyond the practical scale");
        const tau::TauOracle oracle = tau::TauOracle::build(parity_max);
        exit_code = report_exit(tau::verify_parity(oracle, parity_max), json);
    });

    // m-ell --ell L --max-prime B
    uint64_t mell_ell = 0, mell_max = 0;
    auto* mell_cmd = app.add_subcommand("m-ell", "first vanishing index of tau(p^n) mod ell");
    mell_cmd->add_option("--ell", mell_ell, "odd prime modulus")->required();
    mell_cmd->add_option("--max-prime", mell_max, "scan odd primes p up to this bound")->required();
    mell_cmd->callback([&] {
        if (mell_max < 3) throw std::invalid_argument("m-ell: --max-prime must be at least 3");
        exit_code = run_m_ell(mell_ell, mell_max, json);
    });

    // lucas --a A --b B --count K
    std::string lucas_a, lucas_b;
    std::size_t lucas_count = 0;
    auto* lucas_cmd = app.add_subcommand("lucas", "print u_1..u_count for the Lucas pair (A, B)");
    lucas_cmd->add_option("--a", lucas_a, "A = alpha + beta")->required();
    lucas_cmd->add_option("--b", lucas_b, "B = alpha * beta")->required();
    lucas_cmd->add_option("--count", lucas_count, "number of terms")->required();
    lucas_cmd->callback([&] {
        const tau::LucasSpec spec{tau::Int(lucas_a), tau::Int(lucas_b)};
        const auto terms = tau::lucas_terms(spec, lucas_count);
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (json) {
                nlohmann::ordered_json j;
                j["n"] = i + 1;
                j["u"] = terms[i].get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << terms[i].get_str() << "\n";
            }
        }
    });

    // defects --p P --max-index M
    uint64_t defect_p = 0;
    std::size_t defect_max = 30;
    auto* defect_cmd = app.add_subcommand("defects", "defect scan of the Lucas pair (tau(p), p^11)");
    defect_cmd->add_option("--p", defect_p, "odd prime p")->required();
    defect_cmd->add_option("--max-index", defect_max, "scan indices 3..max");
    defect_cmd->callback([&] {
        if (!tau::is_prime_u64(defect_p)) throw std::invalid_argument("defects: p must be prime");
        if (defect_p > kMaxSeriesLimit) throw std::invalid_argument("defects: p beyond the practical series scale");
        const tau::TauOracle oracle = tau::TauOracle::build(defect_p);
        const tau::LucasSpec spec{oracle.tau_prime(defect_p), tau::int_pow(defect_p, 11)};
        exit_code = report_exit(tau::defect_scan_report(spec, defect_max), json);
    });

    // curve --family {H,C} --sign {+,-} --d D --ell L --bound B
    std::string curve_family, curve_sign = "+", curve_bound = "10000";
    uint32_t curve_d = 0;
    uint64_t curve_ell = 0;
    auto* curve_cmd = app.add_subcommand("curve", "integer points with |X| <= bound on a curve family member");
    curve_cmd->add_option("--family", curve_family, "H: Y^2 = 5X^{2d} +- 4*ell; C: Y^2 = X^{2d-1} +- ell")
        ->required()
        ->check(CLI::IsMember({"H", "C"}));
    curve_cmd->add_option("--sign", curve_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    curve_cmd->add_option("--d", curve_d, "family parameter d >= 2")->required();
    curve_cmd->add_option("--ell", curve_ell, "family parameter ell >= 1")->required();
    curve_cmd->add_option("--bound", curve_bound, "X bound (default 10000)");
    curve_cmd->callback([&] { exit_code = run_curve(curve_family, curve_sign, curve_d, curve_ell, curve_bound, json); });

    // thue-f --m M --target T --x-bound B
    std::size_t thue_m = 0;
    std::string thue_target, thue_xbound = "100";
    auto* thuef_cmd = app.add_subcommand("thue-f", "solve F_{2m}(X, Y) = +-target over |X| <= x-bound");
    thuef_cmd->add_option("--m", thue_m, "half-degree m (the form has degree m in each run)")->required();
    thuef_cmd->add_option("--target", thue_target, "positive target value")->required();
    thuef_cmd->add_option("--x-bound", thue_xbound, "X bound (default 100)");
    thuef_cmd->callback([&] { exit_code = run_thue_f(thue_m, thue_target, thue_xbound, json); });

    // thue-11 --box B
    uint64_t thue11_box = 500;
    auto* thue11_cmd = app.add_subcommand("thue-11", "box check of the embedded degree-11 form");
    thue11_cmd->add_option("--box", thue11_box, "scan |x|, |y| <= box (default 500)");
    thue11_cmd->callback([&] { exit_code = report_exit(tau::check_embedded_thue11(thue11_box), json); });

    // convergents --precision D
    tau::ConvergentFilterOptions convergent_options;
    unsigned convergent_precision = 120;
    uint64_t convergent_p = 691;
    std::string convergent_target = "691", convergent_min_den = "4", convergent_max_den = "2981";
    auto* convergent_cmd = app.add_subcommand("convergents", "midsize-solution filter via continued fractions");
    convergent_cmd->add_option("--precision", convergent_precision, "working precision in decimal digits (default 120)");
    convergent_cmd->add_option("--p", convergent_p, "odd prime (default 691)");
    convergent_cmd->add_option("--target", convergent_target, "target value (default 691)");
    convergent_cmd->add_option("--min-den", convergent_min_den, "exclusive lower denominator bound (default 4)");
    convergent_cmd->add_option("--max-den", convergent_max_den, "inclusive upper denominator bound (default 2981)");
    convergent_cmd->callback([&] {
        convergent_options.p = convergent_p;
        convergent_options.target = tau::Int(convergent_target);
        convergent_options.min_denominator = tau::Int(convergent_min_den);
        convergent_options.max_denominator = tau::Int(convergent_max_den);
        convergent_options.precision_digits = convergent_precision;
        exit_code = run_convergents(convergent_options, json);
    });

    // gauntlet [--config FILE] [overrides]
    std::string gauntlet_config_path;
    std::optional<uint64_t> opt_series, opt_prime, opt_box;
    std::optional<std::string> opt_curve;
    std::optional<unsigned> opt_precision;
    std::optional<std::size_t> opt_defect;
    auto* gauntlet_cmd = app.add_subcommand("gauntlet", "run the full verification pipeline");
    gauntlet_cmd->add_option("--config", gauntlet_config_path, "key=value config file");
    gauntlet_cmd->add_option("--series-order", opt_series, "tau(n) available up to this bound");
    gauntlet_cmd->add_option("--curve-bound", opt_curve, "X bound for the curve searches");
    gauntlet_cmd->add_option("--prime-bound", opt_prime, "prime bound for the m_ell and defect suites");
    gauntlet_cmd->add_option("--thue-box", opt_box, "box for the embedded degree-11 form");
    gauntlet_cmd->add_option("--precision", opt_precision, "convergent filter precision (decimal digits)");
    gauntlet_cmd->add_option("--defect-max-index", opt_defect, "defect scan index bound");
    gauntlet_cmd->callback([&] {
        tau::GauntletConfig config;
        if (!gauntlet_config_path.empty()) load_config_file(gauntlet_config_path, config);
        if (opt_series) config.series_limit = *opt_series;
        if (opt_curve) config.curve_bound = tau::Int(*opt_curve);
        if (opt_prime) config.prime_bound = *opt_prime;
        if (opt_box) config.thue_box = *opt_box;
        if (opt_precision) config.convergent_precision = *opt_precision;
        if (opt_defect) config.defect_max_index = *opt_defect;
        if (config.series_limit > kMaxSeriesLimit)
            throw std::invalid_argument("gauntlet: series order beyond the practical scale");
        const auto reports = tau::run_gauntlet(config, json ? nullptr : &std::cout);
        std::size_t failures = 0;
        for (const tau::CheckReport& report : reports) {
            if (!report.passed()) ++failures;
            if (json) std::cout << report.to_json_line() << "\n";
        }
        if (!json) {
            std::cout << "gauntlet: " << (failures == 0 ? "PASS" : "FAIL") << " (" << reports.size() - failures
                      << "/" << reports.size() << " checks passed)\n";
        }
        exit_code = failures == 0 ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
