#ifndef TALBOTSUM_SUPEROSC_HPP
#define TALBOTSUM_SUPEROSC_HPP

#include <complex>
#include <vector>

namespace talbotsum::superosc {

// Binomial weight table C_nu = binom(N,nu) ((1+a)/2)^(N-nu) ((1-a)/2)^nu,
// held in sign/log-magnitude form so that N ~ 10^4 does not overflow.
// The weights sum to 1 exactly (binomial theorem); sum_deviation() measures
// the numerical defect, switching to multiprecision when |a| > 1 where the
// alternating terms cancel catastrophically.
struct BinomialWeights {
    int N = 1;
    double a = 0.0;
    std::vector<double> log_abs;  // log |C_nu|, -inf for exact zeros
    std::vector<int> sign;        // -1, 0, +1

    static BinomialWeights make(int N, double a);
    double weight(int nu) const;  // sign * exp(log_abs); may overflow for |a| > 1
    double sum_deviation() const; // |sum_nu C_nu - 1|
};

// F_N(z, omega) = sum_nu binom(N,nu) ((1+w)/2)^(N-nu) ((1-w)/2)^nu e^{i(1-2nu/N)z}
//              = (cos(z/N) + i w sin(z/N))^N.
// The product form is the binomial re-summation of the same N+1 terms; it
// stays stable in the superoscillatory regime |omega| > 1 where the direct
// sum cancels to machine noise. Throws OverflowError if the result leaves
// double range.
std::complex<double> superosc_eval(std::complex<double> z, double omega, int N);

// M_N(z,k): weights (1/2 + k/q), (1/2 - k/q), per-term frequency
// 2 pi (1/2 - nu/N) q; converges to e^{2 pi i k z} on compacts.
std::complex<double> modulation_approximant(std::complex<double> z, long k, long q, int N);

enum class ShiftSign { plus, minus };

// T^t_{N'}(w,k): weights ((1 - kp)/2), ((1 + kp)/2), per-term exponent
// sign * (1/2 - nu'/N') * (4 pi t / p) * w. With the calibrated default
// (plus) it converges to e^{-2 pi k t w} and is exact at |kp| = 1, matching
// error_bound_T. The q argument is part of the call signature for symmetry
// with the modulation side but does not enter the value (docs/derivations.md
// works out why any q-dependence here is inconsistent with the bound).
std::complex<double> shift_approximant(std::complex<double> w, long k, long p, long q,
                                       double t, int N_prime,
                                       ShiftSign sign = ShiftSign::plus);

// (2/3) |(2 pi k/q)^2 - 1| / N * (q|z|)^2 * exp((1 + max(|2 pi k/q|,1)) q|z|)
double error_bound_M(std::complex<double> z, long k, long q, int N);

// (2/3) |(kp)^2 - 1| / N' * ((2 pi t/p)|w|)^2 * exp((1 + max(|kp|,1)) (2 pi t/p)|w|)
double error_bound_T(std::complex<double> w, long k, long p, double t, int N_prime);

// exp(-2 pi i (1/2 - nu/N) (kappa + 1/2 - nu'/N')); unit modulus.
std::complex<double> omega_factor(long nu, long nu_prime, long N, long N_prime, long kappa);

} // namespace talbotsum::superosc

#endif
