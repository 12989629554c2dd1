// Acceptance suite: one check per line, exact arithmetic throughout.
// Exit status is nonzero if any check fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tau/congruence.hpp"
#include "tau/curves.hpp"
#include "tau/cyclo.hpp"
#include "tau/gauntlet.hpp"
#include "tau/lucas.hpp"
#include "tau/series.hpp"

using namespace tau;

namespace {

constexpr uint64_t kDeskLimit = 10000;

const TauOracle& shared_oracle() {
    static const TauOracle oracle = TauOracle::build(kDeskLimit);
    return oracle;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += message;
        }
    }
};

int failures = 0;

void run(int id, const std::string& description, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.ok) ++failures;
    std::cout << "[" << (outcome.ok ? "PASS" : "FAIL") << "] criterion " << std::setw(2) << id << ": " << description
              << " (" << std::fixed << std::setprecision(2) << seconds << "s)";
    if (!outcome.detail.empty()) std::cout << "  -- " << outcome.detail;
    std::cout << "\n" << std::flush;
}

std::string point_list(const std::vector<IntegerPoint>& points) {
    std::ostringstream out;
    for (const auto& pt : points) out << "(" << pt.x.get_str() << "," << pt.y.get_str() << ") ";
    return out.str();
}

}  // namespace

int main() {
    run(1, "opening tau values 1, -24, 252, -1472, 4830 within one second", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const TruncatedSeries d = delta_series(10);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const long expected[] = {1, -24, 252, -1472, 4830};
        for (std::size_t n = 1; n <= 5; ++n) {
            out.require(d.coeff(n) == expected[n - 1], "coefficient " + std::to_string(n) + " is wrong");
        }
        out.require(seconds < 1.0, "series construction took " + std::to_string(seconds) + "s");
    });

    run(2, "all four divisor-sum congruences hold for n <= 10^4", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        const CheckReport report = verify_congruences(shared_oracle(), kDeskLimit);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(report.passed(), std::to_string(report.witnesses.size()) + " witnesses");
        out.require(seconds < 300.0, "suite exceeded five minutes");
    });

    run(3, "tau(n) is odd exactly at odd squares for n <= 10^4", [](Outcome& out) {
        const CheckReport report = verify_parity(shared_oracle(), kDeskLimit);
        out.require(report.passed(), std::to_string(report.witnesses.size()) + " witnesses");
    });

    run(4, "tau(p)^2 <= 4 p^11 for every prime p <= 10^4", [](Outcome& out) {
        for (uint64_t p : shared_oracle().primes()) {
            const Int& tp = shared_oracle().tau_prime(p);
            out.require(tp * tp <= 4 * int_pow(p, 11), "bound fails at p = " + std::to_string(p));
        }
    });

    run(5, "recurrence tau(p^m) equals the series coefficient for every prime power <= 10^4", [](Outcome& out) {
        const CheckReport report = cross_check_hecke(shared_oracle());
        out.require(report.passed(), std::to_string(report.witnesses.size()) + " witnesses");
    });

    run(6, "Fibonacci defect scan to index 30 returns exactly {6, 12}", [](Outcome& out) {
        const auto defects = defect_scan(LucasSpec(Int(1), Int(-1)), 30);
        out.require(defects.size() == 2, "expected two defective indices");
        if (defects.size() == 2) {
            out.require(defects[0].index == 6 && defects[0].value == 8, "first defect is not u_6 = 8");
            out.require(defects[1].index == 12 && defects[1].value == 144, "second defect is not u_12 = 144");
        }
    });

    run(7, "among L_0..L_40 exactly L_1 = 1 and L_3 = 4 are perfect powers", [](Outcome& out) {
        const auto lucas = classical_lucas_numbers(41);
        for (std::size_t i = 0; i < lucas.size(); ++i) {
            out.require(is_perfect_power(lucas[i]) == (i == 1 || i == 3),
                        "perfect-power status wrong at index " + std::to_string(i));
        }
    });

    run(8, "Pell X-lists at bound 10^3 split the Lucas numbers by index parity", [](Outcome& out) {
        const PellSplit split = pell_split_enumeration(1000);
        std::vector<Int> odd_index, even_index;
        const auto lucas = classical_lucas_numbers(20);
        for (std::size_t i = 0; i < lucas.size(); ++i) {
            if (lucas[i] > 1000) continue;
            (i % 2 == 1 ? odd_index : even_index).push_back(lucas[i]);
        }
        out.require(split.plus_x == odd_index, "plus family differs from odd-index Lucas numbers");
        out.require(split.minus_x == even_index, "minus family differs from even-index Lucas numbers");
    });

    run(9, "curve searches at bound 10^4 find exactly the classified points", [](Outcome& out) {
        const Int bound(kDeskLimit);
        const std::vector<IntegerPoint> h25_expected = {
            {Int(-2), Int(-10)}, {Int(-2), Int(10)}, {Int(-1), Int(-5)}, {Int(-1), Int(5)},
            {Int(1), Int(-5)},   {Int(1), Int(5)},   {Int(2), Int(-10)}, {Int(2), Int(10)},
        };
        const auto h25 = search_curve({CurveFamily::H, +1, 2, 5}, bound);
        out.require(h25 == h25_expected, "H+_{2,5}: got " + point_list(h25));

        const std::vector<IntegerPoint> c63_expected = {{Int(1), Int(-2)}, {Int(1), Int(2)}};
        const auto c63 = search_curve({CurveFamily::C, +1, 6, 3}, bound);
        out.require(c63 == c63_expected, "C+_{6,3}: got " + point_list(c63));

        const std::vector<CurveInstance> empty_instances = {
            {CurveFamily::C, -1, 6, 3},    {CurveFamily::H, -1, 11, 5},   {CurveFamily::C, +1, 6, 691},
            {CurveFamily::C, -1, 6, 691},  {CurveFamily::H, +1, 11, 691}, {CurveFamily::H, -1, 11, 691},
        };
        for (const CurveInstance& instance : empty_instances) {
            const auto search_start = std::chrono::steady_clock::now();
            const auto points = search_curve(instance, bound);
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - search_start).count();
            out.require(points.empty(), instance.name() + " is not empty: " + point_list(points));
            out.require(seconds < 60.0, instance.name() + " exceeded one minute");
        }
    });

    run(10, "F_6 = +-7 over |X| <= 100 has exactly the six classified solutions", [](Outcome& out) {
        const auto solutions = search_F(3, Int(7), Int(100));
        const std::vector<ThueSolution> expected = {
            {Int(-3), Int(-5), Int(7)}, {Int(-2), Int(-1), Int(-7)}, {Int(-1), Int(-4), Int(-7)},
            {Int(1), Int(4), Int(7)},   {Int(2), Int(1), Int(7)},    {Int(3), Int(5), Int(-7)},
        };
        out.require(solutions == expected, "solution set differs");
    });

    run(11, "F_22 = +-691 over |X| <= 100 has no solutions", [](Outcome& out) {
        out.require(search_F(11, Int(691), Int(100)).empty(), "unexpected solutions");
    });

    run(12, "F_690 = +-691 over |X| <= 4 has exactly (+-1, +-4), and F_690(1,4) = 691", [](Outcome& out) {
        const auto solutions = search_F(345, Int(691), Int(4));
        const std::vector<ThueSolution> expected = {
            {Int(-1), Int(-4), Int(-691)},
            {Int(1), Int(4), Int(691)},
        };
        out.require(solutions == expected, "solution set differs");
        out.require(eval_F(345, Int(1), Int(4)) == 691, "evaluation at (1, 4) is not 691");
    });

    run(13, "convergent filter at 120 digits: no hit, and the 240-digit rerun is identical", [](Outcome& out) {
        const auto start = std::chrono::steady_clock::now();
        ConvergentFilterOptions options;  // p = 691, target 691, denominators (4, 2981]
        options.precision_digits = 120;
        const ConvergentFilterResult low = convergent_filter(options);
        options.precision_digits = 240;
        const ConvergentFilterResult high = convergent_filter(options);
        out.require(low.violation_count == 0, "a candidate evaluates to the target at 120 digits");
        out.require(high.violation_count == 0, "a candidate evaluates to the target at 240 digits");
        out.require(low.candidates.size() == high.candidates.size(), "candidate counts differ between precisions");
        for (std::size_t i = 0; i < std::min(low.candidates.size(), high.candidates.size()); ++i) {
            const auto& a = low.candidates[i].candidate;
            const auto& b = high.candidates[i].candidate;
            if (a.k != b.k || a.numerator != b.numerator || a.denominator != b.denominator) {
                out.require(false, "candidate " + std::to_string(i) + " differs between precisions");
                break;
            }
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(seconds < 600.0, "filter exceeded ten minutes");
    });

    run(14, "F_{p-1}(1, 4) = p for every odd prime p <= 700", [](Outcome& out) {
        for (uint64_t p : primes_up_to(700)) {
            if (p == 2) continue;
            out.require(eval_F((p - 1) / 2, Int(1), Int(4)) == Int(p), "fails at p = " + std::to_string(p));
        }
    });

    run(15, "first-vanishing tables for 3, 5, 7 and the {2, 4, 22, 690} constraint for 691, p <= 10^4",
        [](Outcome& out) {
            const CheckReport report = verify_m_ell_tables(kDeskLimit);
            out.require(report.passed(), std::to_string(report.witnesses.size()) + " witnesses");
        });

    run(16, "embedded degree-11 form misses 2*5^55 on the 500-box", [](Outcome& out) {
        const CheckReport report = check_embedded_thue11(500);
        out.require(report.passed(), std::to_string(report.witnesses.size()) + " witnesses");
    });

    run(17, "tau(n) avoids {+-1, +-3, +-5, +-7, +-691} for 1 < n <= 10^4", [](Outcome& out) {
        const CheckReport report = verify_theorem(shared_oracle(), kDeskLimit);
        out.require(report.passed(), std::to_string(report.witnesses.size()) + " witnesses");
    });

    if (failures == 0) {
        std::cout << "acceptance: all 17 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
