#pragma once

#include <mpfr.h>

#include <string>

#include "tau/integers.hpp"

namespace tau {

// Thin RAII wrapper over an mpfr_t at a fixed binary precision. Operations
// round to nearest; the precision of the left-hand side wins.
class Real {
public:
    explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Real(const Real& other) { mpfr_init2(v_, mpfr_get_prec(other.v_)); mpfr_set(v_, other.v_, MPFR_RNDN); }
    Real& operator=(const Real& other) {
        if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static mpfr_prec_t bits_for_digits(unsigned decimal_digits) {
        // log2(10) = 3.3219...; add guard bits.
        return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623 + 64);
    }

    static Real pi(mpfr_prec_t bits) {
        Real r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real from_int(const Int& z, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real from_ui(unsigned long u, mpfr_prec_t bits) {
        Real r(bits);
        mpfr_set_ui(r.v_, u, MPFR_RNDN);
        return r;
    }

    Real cos() const {
        Real r(precision());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real abs() const {
        Real r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const {
        Real r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real operator+(const Real& o) const { Real r(precision()); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-(const Real& o) const { Real r(precision()); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator*(const Real& o) const { Real r(precision()); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator/(const Real& o) const { Real r(precision()); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }

    Real mul_ui(unsigned long u) const { Real r(precision()); mpfr_mul_ui(r.v_, v_, u, MPFR_RNDN); return r; }
    Real div_ui(unsigned long u) const { Real r(precision()); mpfr_div_ui(r.v_, v_, u, MPFR_RNDN); return r; }

    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }

    // Nearest integer.
    Int round_to_int() const {
        Real t(precision());
        mpfr_round(t.v_, v_);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    // The exact dyadic rational this floating value represents.
    mpq_class to_exact_rational() const {
        Int mant;
        const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
        mpq_class q(mant);
        if (e >= 0) {
            mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        } else {
            mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
        }
        q.canonicalize();
        return q;
    }

    std::string str(std::size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

}  // namespace tau
