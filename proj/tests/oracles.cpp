#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tau/real.hpp"

namespace tau::testing {

TruncatedSeries euler_pentagonal_series(std::size_t order) {
    TruncatedSeries s(order);
    s.set_coeff(0, Int(1));
    for (std::size_t k = 1;; ++k) {
        const std::size_t e1 = k * (3 * k - 1) / 2;
        const std::size_t e2 = k * (3 * k + 1) / 2;
        if (e1 >= order) break;
        const Int sign = (k % 2 == 0) ? 1 : -1;
        s.set_coeff(e1, sign);
        if (e2 < order) s.set_coeff(e2, sign);
    }
    return s;
}

TruncatedSeries delta_by_pentagonal_route(std::size_t order) {
    const TruncatedSeries euler = euler_pentagonal_series(order);
    TruncatedSeries power = TruncatedSeries::one(order);
    for (int i = 0; i < 24; ++i) power = series_multiply(power, euler);
    return series_shift_up(power, 1);
}

std::vector<Int> genfunc_expansion_coeffs(std::size_t m) {
    if (m == 0) throw std::invalid_argument("genfunc_expansion_coeffs: m must be positive");
    // P_j as a map (degree in s, degree in X) -> coefficient, with
    // P_0 = 1, P_1 = s, P_j = s P_{j-1} - X P_{j-2}.
    using Poly = std::map<std::pair<unsigned, unsigned>, Int>;
    Poly older = {{{0, 0}, Int(1)}};
    Poly newer = {{{1, 0}, Int(1)}};
    for (std::size_t j = 2; j <= 2 * m; ++j) {
        Poly next;
        for (const auto& [key, value] : newer) next[{key.first + 1, key.second}] += value;
        for (const auto& [key, value] : older) next[{key.first, key.second + 1}] -= value;
        older = std::move(newer);
        newer = std::move(next);
    }
    std::vector<Int> coeffs(m + 1);
    for (const auto& [key, value] : newer) {
        if (value == 0) continue;
        const auto [s_deg, x_deg] = key;
        if (s_deg % 2 != 0) throw std::logic_error("genfunc expansion: odd power of sqrt(Y) at an even index");
        const unsigned y_deg = s_deg / 2;
        if (y_deg + x_deg != m) throw std::logic_error("genfunc expansion: non-homogeneous term");
        coeffs[y_deg] = value;
    }
    return coeffs;
}

Int lucas_closed_form(const LucasSpec& spec, std::size_t n, unsigned digits) {
    if (spec.discriminant() <= 0) throw std::invalid_argument("lucas_closed_form: needs positive discriminant");
    const mpfr_prec_t bits = Real::bits_for_digits(digits);
    const Real sqrt_disc = Real::from_int(spec.discriminant(), bits).sqrt();
    const Real a = Real::from_int(spec.a(), bits);
    const Real two = Real::from_ui(2, bits);
    const Real alpha = (a + sqrt_disc) / two;
    const Real beta = (a - sqrt_disc) / two;
    Real alpha_n = Real::from_ui(1, bits);
    Real beta_n = Real::from_ui(1, bits);
    for (std::size_t i = 0; i < n; ++i) {
        alpha_n = alpha_n * alpha;
        beta_n = beta_n * beta;
    }
    return ((alpha_n - beta_n) / sqrt_disc).round_to_int();
}

Int hhat_product_rounded(uint64_t p, const Int& x, const Int& y, unsigned digits) {
    const mpfr_prec_t bits = Real::bits_for_digits(digits);
    const Real pi = Real::pi(bits);
    Real product = Real::from_ui(1, bits);
    for (uint64_t k = 1; k <= (p - 1) / 2; ++k) {
        const Real c = pi.mul_ui(2 * k).div_ui(p).cos();
        product = product * (Real::from_int(y, bits) - Real::from_int(2 * x, bits) * c);
    }
    return product.round_to_int();
}

std::vector<IntegerPoint> brute_force_curve_points(const CurveInstance& instance, const Int& x_bound,
                                                   const Int& y_cap) {
    std::vector<IntegerPoint> points;
    for (Int x = -x_bound; x <= x_bound; ++x) {
        const Int rhs = instance.rhs(x);
        if (rhs < 0) continue;
        Int lo = 0, hi = y_cap;
        while (lo <= hi) {
            const Int mid = (lo + hi) >> 1;
            const Int sq = mid * mid;
            if (sq == rhs) {
                points.push_back({x, -mid});
                if (mid != 0) points.push_back({x, mid});
                break;
            }
            if (sq < rhs) {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

bool has_primitive_divisor_by_factoring(const LucasSpec& spec, std::size_t n) {
    const std::vector<Int> terms = lucas_terms(spec, n);
    Int value = abs(terms[n - 1]);
    if (value > Int("1000000000000")) throw std::invalid_argument("factoring oracle: term too large");
    if (value <= 1) return false;
    Int prefix = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) prefix *= terms[i];
    prefix = abs(prefix);
    // Trial division of |u_n|, checking each prime factor against the
    // product of the earlier terms.
    uint64_t v = value.get_ui();
    for (uint64_t q = 2; q * q <= v; ++q) {
        if (v % q != 0) continue;
        while (v % q == 0) v /= q;
        if (!mpz_divisible_ui_p(prefix.get_mpz_t(), q)) return true;
    }
    if (v > 1 && !mpz_divisible_ui_p(prefix.get_mpz_t(), v)) return true;
    return false;
}

}  // namespace tau::testing
