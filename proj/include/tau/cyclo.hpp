#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tau/check_report.hpp"
#include "tau/integers.hpp"

namespace tau {

// F_{2m}(X, Y) = sum_j coeffs[j] X^{m-j} Y^j, homogeneous of degree m and
// monic in Y. Generated by 1/(1 - sqrt(Y) T + X T^2) at even T-powers.
struct EvenIndexPoly {
    std::size_t m = 0;
    std::vector<Int> coeffs;  // c_0..c_m

    Int evaluate(const Int& x, const Int& y) const;
};

// Coefficients via F_{2m} = (Y - 2X) F_{2m-2} - X^2 F_{2m-4}, with F_0 = 1 and
// F_2 = Y - X. The recurrence is validated against the direct expansion of the
// generating function in the test suite before being trusted here.
EvenIndexPoly build_F(std::size_t m);

// Exact value by the same recurrence at the value level: O(m) big-integer
// steps, no coefficient materialization.
Int eval_F(std::size_t m, const Int& x, const Int& y);

// Hhat_p(X, Y) = prod_{k=1}^{(p-1)/2} (Y - 2X cos(2 pi k / p)), computed
// through the identity F_{p-1}(X, Y) = Hhat_p(X, Y - 2X).
Int eval_Hhat(uint64_t p, const Int& x, const Int& y);

// Compares eval_F against the cosine product at 60-digit precision, relative
// tolerance 1e-30. Defined for m <= 20.
CheckReport product_formula_check(std::size_t m, const std::vector<std::pair<Int, Int>>& samples);

struct ThueSolution {
    Int x;
    Int y;
    Int value;  // +target or -target

    bool operator==(const ThueSolution& other) const {
        return x == other.x && y == other.y && value == other.value;
    }
};

// All integer (X, Y) with |X| <= x_bound and F_{2m}(X, Y) = +-target.
// Requires 2^m > target: the Y-roots of F_{2m}(X, .) lie between 0 and 4X, so
// scanning Y within ceil(target^(1/m)) + 1 of that interval is complete.
std::vector<ThueSolution> search_F(std::size_t m, const Int& target, const Int& x_bound);

struct ConvergentCandidate {
    uint64_t k = 0;   // index of the angle 2 pi k / p
    Int numerator;    // may be negative
    Int denominator;  // positive, in (min_denominator, max_denominator]
};

struct ConvergentEvaluation {
    ConvergentCandidate candidate;
    // Hhat_p at the four sign choices of (denominator, numerator).
    Int value_pp, value_pm, value_mp, value_mm;

    bool hits(const Int& target) const;
};

struct ConvergentFilterOptions {
    uint64_t p = 691;
    Int target = 691;
    Int min_denominator = 4;     // exclusive; smaller X belongs to the small search
    Int max_denominator = 2981;  // inclusive
    unsigned precision_digits = 120;
};

struct ConvergentFilterResult {
    std::vector<ConvergentEvaluation> candidates;  // ordered by k, then by denominator
    std::size_t violation_count = 0;
};

// For each k in [1, (p-1)/2], extracts the continued-fraction convergents of
// 2 cos(2 pi k / p) with denominator in range and evaluates Hhat_p at them.
// The whole extraction is repeated at doubled precision; any disagreement
// raises an error rather than silently proceeding.
ConvergentFilterResult convergent_filter(const ConvergentFilterOptions& options = {});

CheckReport convergent_filter_report(const ConvergentFilterOptions& options = {});

}  // namespace tau
