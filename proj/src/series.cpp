#include "tau/series.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace tau {

TruncatedSeries::TruncatedSeries(std::size_t order) {
    if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be positive");
    coeffs_.resize(order);
}

const Int& TruncatedSeries::coeff(std::size_t exponent) const {
    if (exponent >= coeffs_.size()) throw std::out_of_range("TruncatedSeries::coeff: exponent beyond order");
    return coeffs_[exponent];
}

void TruncatedSeries::set_coeff(std::size_t exponent, Int value) {
    if (exponent >= coeffs_.size()) throw std::out_of_range("TruncatedSeries::set_coeff: exponent beyond order");
    coeffs_[exponent] = std::move(value);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_add: operands must share the truncation order");
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_multiply: operands must share the truncation order");
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(a.coeffs_[i].get_mpz_t()) == 0) continue;
        const auto ai = a.coeffs_[i].get_mpz_t();
        const std::size_t jmax = n - i;
        for (std::size_t j = 0; j < jmax; ++j) {
            if (mpz_sgn(b.coeffs_[j].get_mpz_t()) == 0) continue;
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries series_square(const TruncatedSeries& a) {
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    // Cross terms once, doubled afterwards; diagonal terms added last.
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(a.coeffs_[i].get_mpz_t()) == 0) continue;
        const auto ai = a.coeffs_[i].get_mpz_t();
        const std::size_t jmax = n - i;
        for (std::size_t j = i + 1; j < jmax; ++j) {
            if (mpz_sgn(a.coeffs_[j].get_mpz_t()) == 0) continue;
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), ai, a.coeffs_[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < n; ++i) mpz_mul_2exp(out.coeffs_[i].get_mpz_t(), out.coeffs_[i].get_mpz_t(), 1);
    for (std::size_t i = 0; 2 * i < n; ++i) {
        if (mpz_sgn(a.coeffs_[i].get_mpz_t()) == 0) continue;
        mpz_addmul(out.coeffs_[2 * i].get_mpz_t(), a.coeffs_[i].get_mpz_t(), a.coeffs_[i].get_mpz_t());
    }
    return out;
}

TruncatedSeries series_shift_up(const TruncatedSeries& a, std::size_t amount) {
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i + amount < a.order(); ++i) out.coeffs_[i + amount] = a.coeffs_[i];
    return out;
}

TruncatedSeries jacobi_cube_series(std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0;; ++k) {
        const std::size_t e = k * (k + 1) / 2;
        if (e >= order) break;
        const long term = static_cast<long>(2 * k + 1);
        s.set_coeff(e, Int((k % 2 == 0) ? term : -term));
    }
    return s;
}

TruncatedSeries delta_series(std::size_t order) {
    if (order < 2) throw std::invalid_argument("delta_series: order must be at least 2");
    TruncatedSeries cube = jacobi_cube_series(order);
    TruncatedSeries sixth = series_square(cube);
    TruncatedSeries twelfth = series_square(sixth);
    TruncatedSeries full = series_square(twelfth);
    return series_shift_up(full, 1);
}

TauOracle::TauOracle(TruncatedSeries delta) : limit_(delta.order() - 1), coeffs_(std::move(delta)) {
    if (limit_ < 1) throw std::invalid_argument("TauOracle: series order must be at least 2");
    if (coeffs_.coeff(0) != 0 || coeffs_.coeff(1) != 1)
        throw std::invalid_argument("TauOracle: series is not a delta expansion (expected 0, 1, ...)");
    primes_ = primes_up_to(limit_);
    for (uint64_t p : primes_) {
        const Int& tp = coeffs_.coeff(p);
        // Deligne bound, in exact integers.
        if (tp * tp > 4 * int_pow(p, 11)) {
            std::ostringstream msg;
            msg << "TauOracle: Deligne bound violated at p=" << p;
            throw std::logic_error(msg.str());
        }
        prime_tau_.emplace(p, tp);
    }
}

TauOracle TauOracle::build(uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("TauOracle::build: limit must be positive");
    return TauOracle(delta_series(static_cast<std::size_t>(limit) + 1));
}

const Int& TauOracle::tau_prime(uint64_t p) const {
    auto it = prime_tau_.find(p);
    if (it == prime_tau_.end()) throw std::invalid_argument("TauOracle::tau_prime: not a prime within the limit");
    return it->second;
}

const Int& TauOracle::coefficient(uint64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("TauOracle::coefficient: index outside 1..limit");
    return coeffs_.coeff(static_cast<std::size_t>(n));
}

Int tau_prime_power(const Int& tau_p, uint64_t p, unsigned m) {
    Int prev = 1;       // tau(p^0)
    Int cur = tau_p;    // tau(p^1)
    if (m == 0) return prev;
    const Int p11 = int_pow(p, 11);
    for (unsigned k = 2; k <= m; ++k) {
        Int next = tau_p * cur - p11 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int TauOracle::tau(uint64_t n) const {
    if (n == 0) throw std::invalid_argument("tau: n must be positive");
    Int result = 1;
    uint64_t rem = n;
    for (uint64_t p : primes_) {
        if (p * p > rem) break;
        if (rem % p != 0) continue;
        unsigned m = 0;
        while (rem % p == 0) {
            rem /= p;
            ++m;
        }
        result *= tau_prime_power(prime_tau_.at(p), p, m);
    }
    if (rem > 1) {
        // rem is either a prime <= limit or carries a prime factor beyond it.
        auto it = prime_tau_.find(rem);
        if (it == prime_tau_.end()) throw std::invalid_argument("tau: a prime factor of n exceeds the oracle limit");
        result *= it->second;
    }
    return result;
}

CheckReport cross_check_hecke(const TauOracle& oracle) {
    Stopwatch timer;
    CheckReport report;
    report.name = "hecke-cross-check";
    report.params["limit"] = std::to_string(oracle.limit());
    for (uint64_t p : oracle.primes()) {
        const Int& tp = oracle.tau_prime(p);
        if (tp * tp > 4 * int_pow(p, 11)) {
            Witness w;
            w["kind"] = "deligne";
            w["p"] = std::to_string(p);
            w["tau_p"] = tp.get_str();
            report.witnesses.push_back(std::move(w));
        }
        uint64_t pw = p;
        unsigned m = 1;
        while (pw <= oracle.limit() / p) {
            pw *= p;
            ++m;
            const Int expected = tau_prime_power(tp, p, m);
            if (expected != oracle.coefficient(pw)) {
                Witness w;
                w["kind"] = "recurrence";
                w["p"] = std::to_string(p);
                w["m"] = std::to_string(m);
                w["recurrence"] = expected.get_str();
                w["series"] = oracle.coefficient(pw).get_str();
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

}  // namespace tau
