#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tau/check_report.hpp"
#include "tau/integers.hpp"
#include "tau/series.hpp"

namespace tau {

// The four exceptional congruences: tau(n) is congruent to the paired
// divisor-sum expression modulo the paired modulus.
struct RamanujanCongruence {
    enum class Rhs { n2_sigma1, n_sigma1, n_sigma3, sigma11 };
    uint32_t modulus;
    Rhs rhs;
};

const std::array<RamanujanCongruence, 4>& ramanujan_congruences();
Int congruence_rhs(const RamanujanCongruence& c, uint64_t n);

// Sum of nu-th powers of the positive divisors of n.
Int sigma(uint64_t n, unsigned nu);

// Checks all four congruences for 1 <= n <= max_n.
CheckReport verify_congruences(const TauOracle& oracle, uint64_t max_n);

// tau(n) is odd exactly when n is an odd perfect square, 1 <= n <= max_n.
CheckReport verify_parity(const TauOracle& oracle, uint64_t max_n);

// First index n >= 1 with tau(p^n) = 0 mod ell. nullopt value means the
// residue sequence provably never vanishes.
struct MEllResult {
    uint64_t ell = 0;
    uint64_t p = 0;
    std::optional<uint64_t> value;
};

// Iterates a_0 = 1, a_1 = tau(p), a_{n+1} = tau(p) a_n - p^11 a_{n-1} mod ell
// and returns the least n >= 1 with a_n = 0. Consecutive residue pairs live in
// a state space of size ell^2, so absence of a zero within ell^2 steps is
// absence forever; the default cap turns the sentinel into a proof.
MEllResult m_ell(uint64_t p, uint64_t ell, uint64_t tau_p_mod_ell);
MEllResult m_ell_with_cap(uint64_t p, uint64_t ell, uint64_t tau_p_mod_ell, uint64_t cap);

// tau(p) mod ell for ell in {3, 5, 7, 691}, derived from the congruences so
// no series is needed.
uint64_t tau_mod_special(uint64_t p, uint64_t ell);

// The case tables for m_3, m_5, m_7 as functions of p mod ell.
uint64_t expected_m_ell(uint64_t p, uint64_t ell);

// For all odd primes p <= max_prime: m_3, m_5, m_7 match the case tables, and
// every finite m_691(p) whose successor is an odd prime lies in {2, 4, 22, 690}.
CheckReport verify_m_ell_tables(uint64_t max_prime);

}  // namespace tau
