#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tau/check_report.hpp"
#include "tau/integers.hpp"

namespace tau {

// Dense exact-integer power-series prefix. Coefficients are indexed by
// exponent 0..order-1; arithmetic truncates every exponent >= order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Int& coeff(std::size_t exponent) const;
    void set_coeff(std::size_t exponent, Int value);

    // Constant series 1 + 0*q + ...
    static TruncatedSeries one(std::size_t order);

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

    friend TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries series_square(const TruncatedSeries& a);
    friend TruncatedSeries series_shift_up(const TruncatedSeries& a, std::size_t amount);

private:
    std::vector<Int> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
// Exact truncated schoolbook product; operands must share the truncation order.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);
// Bit-exact equal to series_multiply(a, a), using the symmetry of the square.
TruncatedSeries series_square(const TruncatedSeries& a);
// Multiplication by q^amount; coefficients shifted past the order are dropped.
TruncatedSeries series_shift_up(const TruncatedSeries& a, std::size_t amount);

// prod_{n>=1} (1-q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
TruncatedSeries jacobi_cube_series(std::size_t order);

// q * prod_{n>=1} (1-q^n)^24. Coefficient n is tau(n) for 1 <= n < order.
// Built by squaring the Jacobi cube three times and shifting up by one.
TruncatedSeries delta_series(std::size_t order);

// tau at primes plus multiplicative/recursive evaluation for all n whose
// prime factors stay within the limit.
class TauOracle {
public:
    // delta must be delta_series(limit + 1) for the intended limit.
    explicit TauOracle(TruncatedSeries delta);
    static TauOracle build(uint64_t limit);

    uint64_t limit() const { return limit_; }
    const std::vector<uint64_t>& primes() const { return primes_; }
    const std::map<uint64_t, Int>& prime_tau() const { return prime_tau_; }

    // tau(p) for a prime p <= limit.
    const Int& tau_prime(uint64_t p) const;
    // Series coefficient n, 1 <= n <= limit.
    const Int& coefficient(uint64_t n) const;

    // tau(n) by factoring n, the Hecke prime-power recurrence, and
    // multiplicativity. Every prime factor of n must be <= limit.
    Int tau(uint64_t n) const;

private:
    uint64_t limit_;
    TruncatedSeries coeffs_;
    std::vector<uint64_t> primes_;
    std::map<uint64_t, Int> prime_tau_;
};

// tau(p^m) from tau(p) by tau(p^m) = tau(p)tau(p^{m-1}) - p^11 tau(p^{m-2}).
Int tau_prime_power(const Int& tau_p, uint64_t p, unsigned m);

// For every prime power p^m <= limit, asserts the recurrence value equals the
// series coefficient, and asserts tau(p)^2 <= 4 p^11.
CheckReport cross_check_hecke(const TauOracle& oracle);

}  // namespace tau
