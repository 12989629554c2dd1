#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tau/check_report.hpp"
#include "tau/integers.hpp"

namespace tau {

// Floor of the square root, by monotone Newton iteration from above.
Int isqrt(const Int& n);

enum class CurveFamily { H, C };

// Family H: Y^2 = 5 X^{2d} + sign * 4 * ell.
// Family C: Y^2 = X^{2d-1} + sign * ell.
struct CurveInstance {
    CurveFamily family = CurveFamily::H;
    int sign = +1;  // +1 or -1
    uint32_t d = 2;
    uint64_t ell = 1;

    Int rhs(const Int& x) const;
    std::string name() const;  // e.g. "H+_{2,5}"
};

struct IntegerPoint {
    Int x;
    Int y;

    bool operator==(const IntegerPoint& other) const { return x == other.x && y == other.y; }
    bool operator<(const IntegerPoint& other) const { return x != other.x ? x < other.x : y < other.y; }
};

// All integer points with |X| <= bound, found by perfect-square testing of the
// right-hand side. Both Y signs reported; points sorted by (X, Y); every
// emitted point is re-verified against the curve equation.
std::vector<IntegerPoint> search_curve(const CurveInstance& instance, const Int& bound);

// The degree-11 homogeneous form printed for the class-number-5 field
// Q(sqrt(-691)); coefficients ordered by ascending y-power. Equation:
// thue11_evaluate(x, y) = 2 * 5^55.
const std::array<Int, 12>& thue11_coefficients();
const Int& thue11_rhs();
Int thue11_evaluate(const Int& x, const Int& y);

// Asserts the form misses 2 * 5^55 at every |x|, |y| <= box.
CheckReport check_embedded_thue11(uint64_t box);

}  // namespace tau
