#include "tau/cyclo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tau/real.hpp"

namespace tau {

Int EvenIndexPoly::evaluate(const Int& x, const Int& y) const {
    Int value = coeffs[m];  // monic in Y
    for (std::size_t j = m; j-- > 0;) value = value * y + coeffs[j] * int_pow(x, static_cast<unsigned long>(m - j));
    return value;
}

EvenIndexPoly build_F(std::size_t m) {
    if (m == 0) throw std::invalid_argument("build_F: m must be positive");
    std::vector<Int> older = {Int(1)};          // F_0
    std::vector<Int> newer = {Int(-1), Int(1)}; // F_2 = Y - X
    for (std::size_t j = 2; j <= m; ++j) {
        // F_{2j} = (Y - 2X) F_{2j-2} - X^2 F_{2j-4}
        std::vector<Int> next(j + 1);
        for (std::size_t i = 0; i < newer.size(); ++i) {
            next[i + 1] += newer[i];      // Y * F_{2j-2}
            next[i] -= 2 * newer[i];      // -2X * F_{2j-2}
        }
        for (std::size_t i = 0; i < older.size(); ++i) next[i] -= older[i];  // -X^2 * F_{2j-4}
        older = std::move(newer);
        newer = std::move(next);
    }
    EvenIndexPoly poly;
    poly.m = m;
    poly.coeffs = std::move(newer);
    if (poly.coeffs[m] != 1) throw std::logic_error("build_F: polynomial is not monic in Y");
    return poly;
}

Int eval_F(std::size_t m, const Int& x, const Int& y) {
    if (m == 0) throw std::invalid_argument("eval_F: m must be positive");
    Int older = 1;      // F_0
    Int newer = y - x;  // F_2
    const Int y2x = y - 2 * x;
    const Int x2 = x * x;
    for (std::size_t j = 2; j <= m; ++j) {
        Int next = y2x * newer - x2 * older;
        older = std::move(newer);
        newer = std::move(next);
    }
    return newer;
}

Int eval_Hhat(uint64_t p, const Int& x, const Int& y) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw std::invalid_argument("eval_Hhat: p must be an odd prime");
    return eval_F((p - 1) / 2, x, y + 2 * x);
}

CheckReport product_formula_check(std::size_t m, const std::vector<std::pair<Int, Int>>& samples) {
    if (m == 0 || m > 20) throw std::invalid_argument("product_formula_check: m must be in 1..20");
    Stopwatch timer;
    CheckReport report;
    report.name = "product-formula";
    report.params["m"] = std::to_string(m);
    report.params["samples"] = std::to_string(samples.size());
    const mpfr_prec_t bits = Real::bits_for_digits(60);
    const Real pi = Real::pi(bits);
    // tolerance 1e-30
    Real tol(bits);
    mpfr_ui_pow_ui(tol.get(), 10, 30, MPFR_RNDN);
    mpfr_ui_div(tol.get(), 1, tol.get(), MPFR_RNDN);
    for (const auto& [x, y] : samples) {
        Real product = Real::from_ui(1, bits);
        for (std::size_t k = 1; k <= m; ++k) {
            Real angle = pi.mul_ui(static_cast<unsigned long>(k)).div_ui(static_cast<unsigned long>(2 * m + 1));
            Real c = angle.cos();
            Real term = Real::from_int(y, bits) - Real::from_int(4 * x, bits) * c * c;
            product = product * term;
        }
        const Int exact = eval_F(m, x, y);
        const Real exact_r = Real::from_int(exact, bits);
        Real err = (product - exact_r).abs();
        Real scale = exact_r.abs();
        if (scale < Real::from_ui(1, bits)) scale = Real::from_ui(1, bits);
        if (!(err <= tol * scale)) {
            Witness w;
            w["x"] = x.get_str();
            w["y"] = y.get_str();
            w["exact"] = exact.get_str();
            w["product"] = product.str(40);
            report.witnesses.push_back(std::move(w));
        }
    }
    report.duration_seconds = timer.seconds();
    return report;
}

std::vector<ThueSolution> search_F(std::size_t m, const Int& target, const Int& x_bound) {
    if (m == 0) throw std::invalid_argument("search_F: m must be positive");
    if (target < 1) throw std::invalid_argument("search_F: target must be positive");
    if (x_bound < 1) throw std::invalid_argument("search_F: x_bound must be positive");
    if ((Int(1) << m) <= target)
        throw std::invalid_argument("search_F: requires 2^m > target for the root-window bound");
    // Window width: ceil(target^(1/m)) + 1, so integers outside the root
    // interval by at least the window width give |F| > target.
    Int w;
    const int exact = mpz_root(w.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(m));
    if (exact == 0) w += 1;
    w += 1;
    std::vector<ThueSolution> solutions;
    for (Int x = -x_bound; x <= x_bound; ++x) {
        const Int four_x = 4 * x;
        const Int lo = (four_x < 0 ? four_x : Int(0)) - w;
        const Int hi = (four_x > 0 ? four_x : Int(0)) + w;
        for (Int y = lo; y <= hi; ++y) {
            const Int value = eval_F(m, x, y);
            if (value == target || value == -target) solutions.push_back({x, y, value});
        }
    }
    std::sort(solutions.begin(), solutions.end(), [](const ThueSolution& a, const ThueSolution& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return solutions;
}

bool ConvergentEvaluation::hits(const Int& target) const {
    const Int t = abs(target);
    return abs(value_pp) == t || abs(value_pm) == t || abs(value_mp) == t || abs(value_mm) == t;
}

namespace {

struct RawCandidate {
    uint64_t k;
    Int numerator;
    Int denominator;

    bool operator==(const RawCandidate& other) const {
        return k == other.k && numerator == other.numerator && denominator == other.denominator;
    }
};

// Continued-fraction convergents of the exact dyadic value of
// 2 cos(2 pi k / p) at the given precision, keeping denominators in
// (min_den, max_den]. The true value is irrational (degree (p-1)/2 over Q),
// so if the dyadic expansion terminates before the denominators pass max_den
// the precision was too low.
std::vector<RawCandidate> convergents_for_angle(uint64_t p, uint64_t k, const Int& min_den, const Int& max_den,
                                                mpfr_prec_t bits) {
    const Real pi = Real::pi(bits);
    Real alpha = pi.mul_ui(2 * k).div_ui(p).cos().mul_ui(2);
    mpq_class x = alpha.to_exact_rational();

    std::vector<RawCandidate> out;
    Int h_prev(1), h_prev2(0);  // numerators
    Int k_prev(0), k_prev2(1);  // denominators
    for (;;) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        Int h = a * h_prev + h_prev2;
        Int den = a * k_prev + k_prev2;
        if (den > max_den) break;
        if (den > min_den) out.push_back({k, h, den});
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(den);
        mpq_class frac = x - mpq_class(a);
        if (frac == 0) {
            std::ostringstream msg;
            msg << "convergent_filter: dyadic expansion of 2cos(2pi*" << k << "/" << p
                << ") terminated before the denominator bound; raise the working precision";
            throw std::runtime_error(msg.str());
        }
        x = mpq_class(1) / frac;
    }
    return out;
}

}  // namespace

ConvergentFilterResult convergent_filter(const ConvergentFilterOptions& options) {
    const uint64_t p = options.p;
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw std::invalid_argument("convergent_filter: p must be an odd prime");
    if (options.min_denominator < 1 || options.max_denominator <= options.min_denominator)
        throw std::invalid_argument("convergent_filter: empty denominator range");
    if (options.precision_digits < 30) throw std::invalid_argument("convergent_filter: precision too low");

    const mpfr_prec_t bits = Real::bits_for_digits(options.precision_digits);
    const mpfr_prec_t check_bits = Real::bits_for_digits(2 * options.precision_digits);

    std::vector<RawCandidate> raw;
    for (uint64_t k = 1; k <= (p - 1) / 2; ++k) {
        auto work = convergents_for_angle(p, k, options.min_denominator, options.max_denominator, bits);
        auto check = convergents_for_angle(p, k, options.min_denominator, options.max_denominator, check_bits);
        if (!(work == check)) {
            std::ostringstream msg;
            msg << "convergent_filter: convergent lists at " << options.precision_digits << " and "
                << 2 * options.precision_digits << " digits disagree at k=" << k
                << "; raise the working precision";
            throw std::runtime_error(msg.str());
        }
        raw.insert(raw.end(), work.begin(), work.end());
    }

    ConvergentFilterResult result;
    result.candidates.reserve(raw.size());
    for (const RawCandidate& c : raw) {
        ConvergentEvaluation eval;
        eval.candidate = {c.k, c.numerator, c.denominator};
        eval.value_pp = eval_Hhat(p, c.denominator, c.numerator);
        eval.value_pm = eval_Hhat(p, c.denominator, -c.numerator);
        eval.value_mp = eval_Hhat(p, -c.denominator, c.numerator);
        eval.value_mm = eval_Hhat(p, -c.denominator, -c.numerator);
        if (eval.hits(options.target)) ++result.violation_count;
        result.candidates.push_back(std::move(eval));
    }
    return result;
}

CheckReport convergent_filter_report(const ConvergentFilterOptions& options) {
    Stopwatch timer;
    CheckReport report;
    report.name = "convergent-filter";
    report.params["p"] = std::to_string(options.p);
    report.params["target"] = options.target.get_str();
    report.params["den_min_exclusive"] = options.min_denominator.get_str();
    report.params["den_max"] = options.max_denominator.get_str();
    report.params["precision_digits"] = std::to_string(options.precision_digits);
    const ConvergentFilterResult result = convergent_filter(options);
    report.params["candidates"] = std::to_string(result.candidates.size());
    for (const ConvergentEvaluation& eval : result.candidates) {
        if (!eval.hits(options.target)) continue;
        Witness w;
        w["k"] = std::to_string(eval.candidate.k);
        w["numerator"] = eval.candidate.numerator.get_str();
        w["denominator"] = eval.candidate.denominator.get_str();
        w["value"] = eval.value_pp.get_str();
        report.witnesses.push_back(std::move(w));
    }
    report.duration_seconds = timer.seconds();
    return report;
}

}  // namespace tau
