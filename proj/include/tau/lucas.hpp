#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tau/check_report.hpp"
#include "tau/integers.hpp"

namespace tau {

// Integer parameter pair (A, B) with A = alpha + beta, B = alpha * beta.
// Construction enforces non-degeneracy (alpha/beta of infinite multiplicative
// order): A != 0 and A^2 not in {B, 2B, 3B, 4B}. The defect theory assumes
// gcd(A, B) = 1; coprime() reports whether a spec is in that setting.
// (tau(p) itself shares a factor with p^11 for p in {2, 3, 5, 7}, and those
// prime powers are handled by p^m | tau(p^m) instead.)
class LucasSpec {
public:
    LucasSpec(Int a, Int b);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& discriminant() const { return disc_; }  // A^2 - 4B
    bool coprime() const;

private:
    Int a_;
    Int b_;
    Int disc_;
};

// u_1 = 1, u_2 = A, u_{n+1} = A u_n - B u_{n-1}; returns u_1..u_count.
std::vector<Int> lucas_terms(const LucasSpec& spec, std::size_t count);

struct DefectRecord {
    std::size_t index = 0;  // n >= 3
    Int value;              // u_n
    // Every prime factor of u_n divides discriminant * u_1 * ... * u_{n-1}.
    bool nonprimitive_part_only = false;
};

// A prime divisor of u_n counts as primitive when it divides no earlier term.
// Detection strips |u_n| against |u_1 * ... * u_{n-1}| by repeated
// gcd-and-divide; no factorization is performed. Returns true iff the
// stripped remainder exceeds 1; on false, fills *defect when non-null.
// The classification is mechanical for any spec; the defect theory reads it
// only on coprime pairs.
bool has_primitive_divisor(const LucasSpec& spec, std::size_t n, DefectRecord* defect = nullptr);

// All defective indices in [3, max_index].
std::vector<DefectRecord> defect_scan(const LucasSpec& spec, std::size_t max_index);

// defect_scan plus, for specs with B an 11th power of an odd prime p,
// |A|^2 <= 4B and gcd(A, p) = 1, the assertion that no defective value lies
// in {-1, +1} or {+-q : q prime}.
CheckReport defect_scan_report(const LucasSpec& spec, std::size_t max_index);

// For every divisor d of n, asserts u_d | u_n exactly.
CheckReport index_divisibility_check(const LucasSpec& spec, std::size_t n);

// L_0 = 2, L_1 = 1, L_{n+2} = L_{n+1} + L_n; returns L_0..L_{count-1}.
std::vector<Int> classical_lucas_numbers(std::size_t count);

struct PellSplit {
    std::vector<Int> plus_x;   // positive X <= bound with 5X^2 + 20 a square
    std::vector<Int> minus_x;  // positive X <= bound with 5X^2 - 20 a square
};

// Enumerates both Pell families and asserts they split the classical Lucas
// numbers by index parity (odd indices on the plus side).
PellSplit pell_split_enumeration(uint64_t bound);

struct PowerWitness {
    Int base;
    unsigned exponent = 0;  // >= 2
};

// n = base^exponent with exponent >= 2; n = 1 reports (1, 2).
std::optional<PowerWitness> perfect_power(const Int& n);
bool is_perfect_power(const Int& n);

}  // namespace tau
