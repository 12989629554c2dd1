#include "tau/lucas.hpp"

#include <stdexcept>
#include <utility>

namespace tau {

LucasSpec::LucasSpec(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0) throw std::invalid_argument("LucasSpec: degenerate, A = 0");
    const Int a2 = a_ * a_;
    for (int k = 1; k <= 4; ++k) {
        if (a2 == k * b_) throw std::invalid_argument("LucasSpec: degenerate, alpha/beta is a root of unity");
    }
    disc_ = a2 - 4 * b_;
}

bool LucasSpec::coprime() const { return gcd(a_, b_) == 1; }

std::vector<Int> lucas_terms(const LucasSpec& spec, std::size_t count) {
    if (count == 0) throw std::invalid_argument("lucas_terms: count must be positive");
    std::vector<Int> terms;
    terms.reserve(count);
    terms.emplace_back(1);
    if (count >= 2) terms.push_back(spec.a());
    for (std::size_t n = 2; n < count; ++n) terms.push_back(spec.a() * terms[n - 1] - spec.b() * terms[n - 2]);
    return terms;
}

namespace {

// Divides out of |value| every prime factor shared with pool; returns the
// stripped remainder.
Int strip_shared_factors(Int value, const Int& pool) {
    value = abs(value);
    if (value <= 1) return value;
    for (;;) {
        Int g = gcd(value, pool);
        if (g == 1) return value;
        do {
            value /= g;
        } while (mpz_divisible_p(value.get_mpz_t(), g.get_mpz_t()));
    }
}

DefectRecord make_defect_record(std::size_t n, const Int& term, const Int& prefix_product, const Int& disc) {
    DefectRecord record;
    record.index = n;
    record.value = term;
    record.nonprimitive_part_only = strip_shared_factors(term, disc * prefix_product) == 1;
    return record;
}

}  // namespace

bool has_primitive_divisor(const LucasSpec& spec, std::size_t n, DefectRecord* defect) {
    if (n < 3) throw std::invalid_argument("has_primitive_divisor: defined for indices n >= 3");
    const std::vector<Int> terms = lucas_terms(spec, n);
    Int prefix = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) prefix *= terms[i];
    prefix = abs(prefix);
    const Int& u_n = terms[n - 1];
    if (u_n == 0) throw std::logic_error("has_primitive_divisor: zero term in a non-degenerate sequence");
    if (strip_shared_factors(u_n, prefix) > 1) return true;
    if (defect) *defect = make_defect_record(n, u_n, prefix, spec.discriminant());
    return false;
}

std::vector<DefectRecord> defect_scan(const LucasSpec& spec, std::size_t max_index) {
    if (max_index < 3) throw std::invalid_argument("defect_scan: max_index must be at least 3");
    const std::vector<Int> terms = lucas_terms(spec, max_index);
    std::vector<DefectRecord> defects;
    Int prefix = abs(terms[0] * terms[1]);
    for (std::size_t n = 3; n <= max_index; ++n) {
        const Int& u_n = terms[n - 1];
        if (u_n == 0) throw std::logic_error("defect_scan: zero term in a non-degenerate sequence");
        if (strip_shared_factors(u_n, prefix) == 1)
            defects.push_back(make_defect_record(n, u_n, prefix, spec.discriminant()));
        prefix *= abs(u_n);
    }
    return defects;
}

namespace {

// B = p^11 for an odd prime p, |A|^2 <= 4B, gcd(A, p) = 1.
std::optional<Int> modularity_base_prime(const LucasSpec& spec) {
    if (spec.b() <= 1) return std::nullopt;
    Int p;
    if (mpz_root(p.get_mpz_t(), spec.b().get_mpz_t(), 11) == 0) return std::nullopt;
    if (mpz_even_p(p.get_mpz_t()) || !is_probable_prime(p)) return std::nullopt;
    if (spec.a() * spec.a() > 4 * spec.b()) return std::nullopt;
    if (gcd(spec.a(), p) != 1) return std::nullopt;
    return p;
}

}  // namespace

CheckReport defect_scan_report(const LucasSpec& spec, std::size_t max_index) {
    Stopwatch timer;
    CheckReport report;
    report.name = "defect-scan";
    report.params["a"] = spec.a().get_str();
    report.params["b"] = spec.b().get_str();
    report.params["max_index"] = std::to_string(max_index);
    const std::vector<DefectRecord> defects = defect_scan(spec, max_index);
    report.params["defects"] = std::to_string(defects.size());
    if (modularity_base_prime(spec)) {
        for (const DefectRecord& d : defects) {
            const Int v = abs(d.value);
            if (v == 1 || is_probable_prime(v)) {
                Witness w;
                w["index"] = std::to_string(d.index);
                w["value"] = d.value.get_str();
                w["why"] = "defective value is a unit or a prime";
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

CheckReport index_divisibility_check(const LucasSpec& spec, std::size_t n) {
    if (n < 2) throw std::invalid_argument("index_divisibility_check: n must be at least 2");
    Stopwatch timer;
    CheckReport report;
    report.name = "index-divisibility";
    report.params["a"] = spec.a().get_str();
    report.params["b"] = spec.b().get_str();
    report.params["n"] = std::to_string(n);
    const std::vector<Int> terms = lucas_terms(spec, n);
    const Int& u_n = terms[n - 1];
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (!mpz_divisible_p(u_n.get_mpz_t(), terms[d - 1].get_mpz_t())) {
            Witness w;
            w["d"] = std::to_string(d);
            w["u_d"] = terms[d - 1].get_str();
            w["u_n"] = u_n.get_str();
            report.witnesses.push_back(std::move(w));
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

std::vector<Int> classical_lucas_numbers(std::size_t count) {
    if (count == 0) throw std::invalid_argument("classical_lucas_numbers: count must be positive");
    std::vector<Int> values;
    values.reserve(count);
    values.emplace_back(2);
    if (count >= 2) values.emplace_back(1);
    for (std::size_t n = 2; n < count; ++n) values.push_back(values[n - 1] + values[n - 2]);
    return values;
}

PellSplit pell_split_enumeration(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("pell_split_enumeration: bound must be positive");
    PellSplit split;
    for (uint64_t x = 1; x <= bound; ++x) {
        const Int rhs_plus = 5 * Int(x) * Int(x) + 20;
        if (mpz_perfect_square_p(rhs_plus.get_mpz_t())) split.plus_x.emplace_back(x);
        const Int rhs_minus = 5 * Int(x) * Int(x) - 20;
        if (rhs_minus >= 0 && mpz_perfect_square_p(rhs_minus.get_mpz_t())) split.minus_x.emplace_back(x);
    }
    // The two families must split the classical Lucas numbers by index parity.
    // L_n is nondecreasing from index 1 on, so the walk stops at the bound.
    std::vector<Int> odd_index, even_index;
    const Int limit(bound);
    if (limit >= 2) even_index.emplace_back(2);  // L_0
    Int prev = 2, cur = 1;
    for (std::size_t i = 1; cur <= limit; ++i) {
        (i % 2 == 1 ? odd_index : even_index).push_back(cur);
        Int next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (split.plus_x != odd_index || split.minus_x != even_index)
        throw std::logic_error("pell_split_enumeration: Pell families do not split the Lucas numbers");
    return split;
}

std::optional<PowerWitness> perfect_power(const Int& n) {
    if (n < 1) throw std::invalid_argument("perfect_power: n must be at least 1");
    if (n == 1) return PowerWitness{Int(1), 2};
    const unsigned max_exp = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
    for (unsigned k = 2; k <= max_exp; ++k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return PowerWitness{root, k};
    }
    return std::nullopt;
}

bool is_perfect_power(const Int& n) { return perfect_power(n).has_value(); }

}  // namespace tau
