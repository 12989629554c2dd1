#include "tau/congruence.hpp"

#include <cmath>
#include <stdexcept>

namespace tau {

const std::array<RamanujanCongruence, 4>& ramanujan_congruences() {
    static const std::array<RamanujanCongruence, 4> table = {{
        {9, RamanujanCongruence::Rhs::n2_sigma1},
        {5, RamanujanCongruence::Rhs::n_sigma1},
        {7, RamanujanCongruence::Rhs::n_sigma3},
        {691, RamanujanCongruence::Rhs::sigma11},
    }};
    return table;
}

Int congruence_rhs(const RamanujanCongruence& c, uint64_t n) {
    switch (c.rhs) {
        case RamanujanCongruence::Rhs::n2_sigma1:
            return Int(n) * Int(n) * sigma(n, 1);
        case RamanujanCongruence::Rhs::n_sigma1:
            return Int(n) * sigma(n, 1);
        case RamanujanCongruence::Rhs::n_sigma3:
            return Int(n) * sigma(n, 3);
        case RamanujanCongruence::Rhs::sigma11:
            return sigma(n, 11);
    }
    throw std::logic_error("congruence_rhs: unreachable");
}

Int sigma(uint64_t n, unsigned nu) {
    if (n == 0) throw std::invalid_argument("sigma: n must be positive");
    Int total = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += int_pow(d, nu);
        const uint64_t q = n / d;
        if (q != d) total += int_pow(q, nu);
    }
    return total;
}

CheckReport verify_congruences(const TauOracle& oracle, uint64_t max_n) {
    if (max_n > oracle.limit()) throw std::invalid_argument("verify_congruences: max_n exceeds the oracle limit");
    Stopwatch timer;
    CheckReport report;
    report.name = "ramanujan-congruences";
    report.params["max_n"] = std::to_string(max_n);
    for (uint64_t n = 1; n <= max_n; ++n) {
        const Int& t = oracle.coefficient(n);
        for (const auto& c : ramanujan_congruences()) {
            Int diff = t - congruence_rhs(c, n);
            if (!mpz_divisible_ui_p(diff.get_mpz_t(), c.modulus)) {
                Witness w;
                w["n"] = std::to_string(n);
                w["modulus"] = std::to_string(c.modulus);
                w["tau_n"] = t.get_str();
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

namespace {

bool is_odd_square(uint64_t n) {
    if (n % 2 == 0) return false;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

}  // namespace

CheckReport verify_parity(const TauOracle& oracle, uint64_t max_n) {
    if (max_n > oracle.limit()) throw std::invalid_argument("verify_parity: max_n exceeds the oracle limit");
    Stopwatch timer;
    CheckReport report;
    report.name = "parity";
    report.params["max_n"] = std::to_string(max_n);
    for (uint64_t n = 1; n <= max_n; ++n) {
        const bool odd = mpz_odd_p(oracle.coefficient(n).get_mpz_t()) != 0;
        if (odd != is_odd_square(n)) {
            Witness w;
            w["n"] = std::to_string(n);
            w["tau_n"] = oracle.coefficient(n).get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

MEllResult m_ell(uint64_t p, uint64_t ell, uint64_t tau_p_mod_ell) {
    return m_ell_with_cap(p, ell, tau_p_mod_ell, ell * ell);
}

MEllResult m_ell_with_cap(uint64_t p, uint64_t ell, uint64_t tau_p_mod_ell, uint64_t cap) {
    if (ell < 3 || ell % 2 == 0 || !is_prime_u64(ell)) throw std::invalid_argument("m_ell: ell must be an odd prime");
    if (ell >= (1ull << 31)) throw std::invalid_argument("m_ell: ell too large");
    if (!is_prime_u64(p)) throw std::invalid_argument("m_ell: p must be prime");
    if (tau_p_mod_ell >= ell) throw std::invalid_argument("m_ell: residue out of range");
    MEllResult result;
    result.ell = ell;
    result.p = p;
    const uint64_t t = tau_p_mod_ell;
    const uint64_t p11 = pow_mod_u64(p % ell, 11, ell);
    const uint64_t neg_p11 = (ell - p11) % ell;
    uint64_t prev = 1;  // a_0
    uint64_t cur = t;   // a_1
    for (uint64_t n = 1; n <= cap; ++n) {
        if (cur == 0) {
            result.value = n;
            return result;
        }
        uint64_t next = (t * cur % ell + neg_p11 * prev % ell) % ell;
        prev = cur;
        cur = next;
    }
    return result;  // no vanishing, proven by the pair-state pigeonhole
}

uint64_t tau_mod_special(uint64_t p, uint64_t ell) {
    switch (ell) {
        case 3: {
            const uint64_t r = p % 3;
            return (r * r % 3) * ((r + 1) % 3) % 3;
        }
        case 5: {
            const uint64_t r = p % 5;
            return r * ((1 + r) % 5) % 5;
        }
        case 7: {
            const uint64_t r = p % 7;
            return r * ((1 + pow_mod_u64(r, 3, 7)) % 7) % 7;
        }
        case 691:
            return (1 + pow_mod_u64(p % 691, 11, 691)) % 691;
        default:
            throw std::invalid_argument("tau_mod_special: ell must be one of 3, 5, 7, 691");
    }
}

uint64_t expected_m_ell(uint64_t p, uint64_t ell) {
    switch (ell) {
        case 3:
            // p = 0 mod 3 means p = 3 itself.
            return (p % 3 == 1) ? 2 : 1;
        case 5: {
            const uint64_t r = p % 5;
            if (r == 0 || r == 4) return 1;
            if (r == 2 || r == 3) return 3;
            return 4;
        }
        case 7: {
            const uint64_t r = p % 7;
            if (r == 0 || r == 3 || r == 5 || r == 6) return 1;
            return 6;
        }
        default:
            throw std::invalid_argument("expected_m_ell: case table exists only for ell in {3, 5, 7}");
    }
}

CheckReport verify_m_ell_tables(uint64_t max_prime) {
    if (max_prime < 3) throw std::invalid_argument("verify_m_ell_tables: bound must be at least 3");
    Stopwatch timer;
    CheckReport report;
    report.name = "m-ell-tables";
    report.params["max_prime"] = std::to_string(max_prime);
    for (uint64_t p : primes_up_to(max_prime)) {
        if (p == 2) continue;
        for (uint64_t ell : {3ull, 5ull, 7ull}) {
            const MEllResult r = m_ell(p, ell, tau_mod_special(p, ell));
            if (!r.value || *r.value != expected_m_ell(p, ell)) {
                Witness w;
                w["ell"] = std::to_string(ell);
                w["p"] = std::to_string(p);
                w["m"] = r.value ? std::to_string(*r.value) : "no-vanishing";
                w["expected"] = std::to_string(expected_m_ell(p, ell));
                report.witnesses.push_back(std::move(w));
            }
        }
        const MEllResult r = m_ell(p, 691, tau_mod_special(p, 691));
        if (r.value) {
            const uint64_t d = *r.value;
            const bool successor_odd_prime = (d + 1) % 2 == 1 && is_prime_u64(d + 1);
            if (successor_odd_prime && d != 2 && d != 4 && d != 22 && d != 690) {
                Witness w;
                w["ell"] = "691";
                w["p"] = std::to_string(p);
                w["m"] = std::to_string(d);
                w["expected"] = "one of {2, 4, 22, 690}";
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

}  // namespace tau
