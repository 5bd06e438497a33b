#include "talbotsum/superosc.hpp"

#include <cmath>
#include <limits>

#include "big_real.hpp"
#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum::superosc {

namespace {

// binary powering keeps the complex power single-valued (no log branch)
std::complex<double> cpow_int(std::complex<double> base, int n) {
    std::complex<double> acc{1.0, 0.0};
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

} // namespace

BinomialWeights BinomialWeights::make(int N, double a) {
    if (N < 1) throw ParameterError("BinomialWeights: N must be >= 1");
    BinomialWeights bw;
    bw.N = N;
    bw.a = a;
    bw.log_abs.resize(static_cast<std::size_t>(N) + 1);
    bw.sign.resize(static_cast<std::size_t>(N) + 1);
    const double A = 0.5 * (1.0 + a);
    const double B = 0.5 * (1.0 - a);
    const double logA = A == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::fabs(A));
    const double logB = B == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::fabs(B));
    const int sA = A > 0.0 ? 1 : (A < 0.0 ? -1 : 0);
    const int sB = B > 0.0 ? 1 : (B < 0.0 ? -1 : 0);
    for (int nu = 0; nu <= N; ++nu) {
        double lb = std::lgamma(N + 1.0) - std::lgamma(nu + 1.0) - std::lgamma(N - nu + 1.0);
        int s = 1;
        double l = lb;
        if (N - nu > 0) { l += (N - nu) * logA; s *= (sA == 0) ? 0 : (((N - nu) % 2 && sA < 0) ? -1 : 1); }
        if (nu > 0)     { l += nu * logB;       s *= (sB == 0) ? 0 : ((nu % 2 && sB < 0) ? -1 : 1); }
        bw.log_abs[nu] = (s == 0) ? -std::numeric_limits<double>::infinity() : l;
        bw.sign[nu] = s;
    }
    return bw;
}

double BinomialWeights::weight(int nu) const {
    if (sign[nu] == 0) return 0.0;
    return sign[nu] * std::exp(log_abs[nu]);
}

double BinomialWeights::sum_deviation() const {
    if (std::fabs(a) <= 1.0) {
        // all weights nonnegative: compensated summation is enough
        Kahan<double> acc;
        for (int nu = 0; nu <= N; ++nu) acc.add(weight(nu));
        return std::fabs(acc.sum - 1.0);
    }
    // |a| > 1: term magnitudes reach |a|^N, so the cancellation needs
    // N*log2|a| extra bits. Recurrence w_{nu+1} = w_nu * (N-nu)/(nu+1) * B/A.
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(N * std::log2(std::fabs(a)) + 96);
    detail::BigReal A(prec), B(prec), w(prec), r(prec), sum(prec), t(prec);
    A.set(0.5 * (1.0 + a));
    B.set(0.5 * (1.0 - a));
    r.div(B, A);
    // w = A^N
    w.set(1.0);
    for (int i = 0; i < N; ++i) w.mul(w, A);
    sum.set(0.0);
    for (int nu = 0; nu <= N; ++nu) {
        sum.add(sum, w);
        if (nu < N) {
            t.mul_si(w, N - nu);
            t.div_si(t, nu + 1);
            w.mul(t, r);
        }
    }
    t.set(1.0);
    sum.sub(sum, t);
    return std::fabs(sum.to_double());
}

std::complex<double> superosc_eval(std::complex<double> z, double omega, int N) {
    if (N < 1) throw ParameterError("superosc_eval: N must be >= 1");
    const std::complex<double> zn = z / static_cast<double>(N);
    const std::complex<double> base = std::cos(zn) + std::complex<double>{0.0, 1.0} * omega * std::sin(zn);
    std::complex<double> r = cpow_int(base, N);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw OverflowError("superosc_eval: overflow at N=" + std::to_string(N) +
                            ", omega=" + std::to_string(omega));
    return r;
}

std::complex<double> modulation_approximant(std::complex<double> z, long k, long q, int N) {
    if (q < 1) throw ParameterError("modulation_approximant: q must be >= 1");
    if (N < 1) throw ParameterError("modulation_approximant: N must be >= 1");
    // sum_nu binom (1/2+k/q)^(N-nu) (1/2-k/q)^nu e^{2 pi i (1/2-nu/N) q z}
    //   = [ (1/2+k/q) e^{i pi q z / N} + (1/2-k/q) e^{-i pi q z / N} ]^N
    const double wp = 0.5 + static_cast<double>(k) / static_cast<double>(q);
    const double wm = 0.5 - static_cast<double>(k) / static_cast<double>(q);
    const std::complex<double> u = std::complex<double>{0.0, kPi} * static_cast<double>(q) * z /
                                   static_cast<double>(N);
    return cpow_int(wp * std::exp(u) + wm * std::exp(-u), N);
}

std::complex<double> shift_approximant(std::complex<double> w, long k, long p, long q,
                                       double t, int N_prime, ShiftSign sign) {
    if (p < 1) throw ParameterError("shift_approximant: p must be >= 1");
    if (q < 1) throw ParameterError("shift_approximant: q must be >= 1");
    if (N_prime < 1) throw ParameterError("shift_approximant: N' must be >= 1");
    // sum_nu' binom ((1-kp)/2)^(N'-nu') ((1+kp)/2)^nu'
    //             exp(sign (1/2-nu'/N') (4 pi t/p) w)
    //   = [ ((1-kp)/2) e^{s} + ((1+kp)/2) e^{-s} ]^{N'},
    // s = sign * 2 pi t w / (p N'). Calibrated sign (plus) -> e^{-2 pi k t w}.
    const double kp = static_cast<double>(k) * static_cast<double>(p);
    const double wp = 0.5 * (1.0 - kp);
    const double wm = 0.5 * (1.0 + kp);
    const double orient = (sign == ShiftSign::plus) ? 1.0 : -1.0;
    const std::complex<double> s = orient * kTwoPi * t * w /
                                   (static_cast<double>(p) * static_cast<double>(N_prime));
    return cpow_int(wp * std::exp(s) + wm * std::exp(-s), N_prime);
}

double error_bound_M(std::complex<double> z, long k, long q, int N) {
    if (N < 1) throw ParameterError("error_bound_M: N must be >= 1");
    const double f = kTwoPi * static_cast<double>(k) / static_cast<double>(q);
    const double qz = static_cast<double>(q) * std::abs(z);
    return (2.0 / 3.0) * std::fabs(f * f - 1.0) / N * qz * qz *
           std::exp((1.0 + std::max(std::fabs(f), 1.0)) * qz);
}

double error_bound_T(std::complex<double> w, long k, long p, double t, int N_prime) {
    if (N_prime < 1) throw ParameterError("error_bound_T: N' must be >= 1");
    const double kp = static_cast<double>(k) * static_cast<double>(p);
    const double s = kTwoPi * t / static_cast<double>(p) * std::abs(w);
    return (2.0 / 3.0) * std::fabs(kp * kp - 1.0) / N_prime * s * s *
           std::exp((1.0 + std::max(std::fabs(kp), 1.0)) * s);
}

std::complex<double> omega_factor(long nu, long nu_prime, long N, long N_prime, long kappa) {
    if (nu < 0 || nu > N || nu_prime < 0 || nu_prime > N_prime)
        throw ParameterError("omega_factor: indices out of range");
    const double X = 0.5 - static_cast<double>(nu) / static_cast<double>(N);
    const double Y = 0.5 - static_cast<double>(nu_prime) / static_cast<double>(N_prime);
    return cis(-kTwoPi * X * (static_cast<double>(kappa) + Y));
}

} // namespace talbotsum::superosc
