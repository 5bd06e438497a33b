#ifndef TALBOTSUM_BIG_REAL_HPP
#define TALBOTSUM_BIG_REAL_HPP

// Thin RAII wrapper over MPFR plus the handful of complex operations the
// superoscillatory sums need. All operations round to nearest at the
// precision of the destination operand.

#include <mpfr.h>

#include <string>
#include <utility>

namespace talbotsum::detail {

class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
    void set(long x) { mpfr_set_si(v_, x, MPFR_RNDN); }
    void set(const BigReal& x) { mpfr_set(v_, x.v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    void add(const BigReal& a, const BigReal& b) { mpfr_add(v_, a.v_, b.v_, MPFR_RNDN); }
    void sub(const BigReal& a, const BigReal& b) { mpfr_sub(v_, a.v_, b.v_, MPFR_RNDN); }
    void mul(const BigReal& a, const BigReal& b) { mpfr_mul(v_, a.v_, b.v_, MPFR_RNDN); }
    void div(const BigReal& a, const BigReal& b) { mpfr_div(v_, a.v_, b.v_, MPFR_RNDN); }
    void mul_si(const BigReal& a, long s) { mpfr_mul_si(v_, a.v_, s, MPFR_RNDN); }
    void div_si(const BigReal& a, long s) { mpfr_div_si(v_, a.v_, s, MPFR_RNDN); }
    void neg(const BigReal& a) { mpfr_neg(v_, a.v_, MPFR_RNDN); }

    void set_pi() { mpfr_const_pi(v_, MPFR_RNDN); }
    void sin_of(const BigReal& a) { mpfr_sin(v_, a.raw(), MPFR_RNDN); }
    void cos_of(const BigReal& a) { mpfr_cos(v_, a.raw(), MPFR_RNDN); }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigReal re, im;

    explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}

    void set_zero() { re.set(0.0); im.set(0.0); }
    void set_cis(const BigReal& theta) {
        mpfr_sin_cos(im.raw(), re.raw(), theta.raw(), MPFR_RNDN);
    }

    // this = a * b, with scratch of matching precision
    void mul(const BigComplex& a, const BigComplex& b, BigReal& t1, BigReal& t2) {
        t1.mul(a.re, b.re);
        t2.mul(a.im, b.im);
        BigReal nre(t1.prec());
        nre.sub(t1, t2);
        t1.mul(a.re, b.im);
        t2.mul(a.im, b.re);
        im.add(t1, t2);
        re = std::move(nre);
    }
    void add(const BigComplex& a) {
        re.add(re, a.re);
        im.add(im, a.im);
    }
    void scale(const BigReal& s) {
        re.mul(re, s);
        im.mul(im, s);
    }
    // this = base^n by binary powering (n >= 0)
    void pow_ui(const BigComplex& base, unsigned long n, BigReal& t1, BigReal& t2) {
        BigComplex acc(re.prec());
        acc.re.set(1.0);
        acc.im.set(0.0);
        BigComplex sq = base;
        while (n) {
            if (n & 1UL) acc.mul(acc, sq, t1, t2);
            n >>= 1UL;
            if (n) sq.mul(sq, sq, t1, t2);
        }
        *this = std::move(acc);
    }
};

} // namespace talbotsum::detail

#endif
