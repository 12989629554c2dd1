#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tau/check_report.hpp"
#include "tau/curves.hpp"
#include "tau/cyclo.hpp"
#include "tau/integers.hpp"
#include "tau/series.hpp"

namespace tau {

struct GauntletConfig {
    uint64_t series_limit = 10000;     // tau(n) available for n <= series_limit
    Int curve_bound = 10000;           // |X| bound for the hyperelliptic searches
    uint64_t prime_bound = 10000;      // primes p for the m_ell and defect suites
    uint64_t thue_box = 500;           // box for the embedded degree-11 form
    unsigned convergent_precision = 120;
    std::size_t defect_max_index = 30;

    // Throws std::invalid_argument on non-positive bounds or when the series
    // cannot cover the prime suites.
    void validate() const;
};

// Applies "key = value" lines (# comments allowed) over the given config.
// Keys: series_order, curve_bound, prime_bound, thue_box,
// convergent_precision, defect_max_index. Unknown keys are rejected.
void apply_config_text(std::istream& in, GauntletConfig& config);

// A bounded Thue search F_{2m}(X, Y) = +-target over |X| <= x_bound.
struct ThueTarget {
    std::size_t m = 0;
    Int target;
    Int x_bound;
};

// One step of the reduction: if tau(p^d) = +-ell then an integer point lands
// on the attached curve pair or Thue form.
struct ReductionTarget {
    uint64_t ell = 0;
    uint64_t d = 0;
    std::variant<std::pair<CurveInstance, CurveInstance>, ThueTarget> instance;

    std::string name() const;
};

// The reduction table for ell in {3, 5, 7, 691}, in d-ascending order.
std::vector<ReductionTarget> reduction_targets(uint64_t ell);

// tau(n) avoids {+-1, +-3, +-5, +-7, +-691} for 1 < n <= max_n.
CheckReport verify_theorem(const TauOracle& oracle, uint64_t max_n);

// Runs the whole pipeline: congruence, parity, Deligne and Hecke suites, the
// m_ell tables, defect scans over tau-derived Lucas specs, the Lucas-number
// facts, all reduction-target searches, the embedded degree-11 box check, the
// convergent filter, and the theorem scan. Reports come back in that fixed
// order; when progress is non-null each report is echoed as it completes.
std::vector<CheckReport> run_gauntlet(const GauntletConfig& config, std::ostream* progress = nullptr);

}  // namespace tau
