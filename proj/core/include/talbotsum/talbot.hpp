#ifndef TALBOTSUM_TALBOT_HPP
#define TALBOTSUM_TALBOT_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "talbotsum/gauss_arith.hpp"
#include "talbotsum/test_function.hpp"

namespace talbotsum::talbot {

struct CombParams {
    double M = kDefaultM;  // grating angular frequency (spatial period 2 pi / M)
    int K = 1;             // mode cutoff |k| <= K

    static constexpr double kDefaultM = 6.283185307179586476925286766559;  // 2 pi
    void validate() const;
};

// t = (2 pi / M^2) * p / q with gcd(p, q) = 1, 0 <= p < q.
struct RationalTime {
    std::int64_t p = 0;
    std::int64_t q = 1;

    RationalTime(std::int64_t p_, std::int64_t q_);
    double value(double M) const;
};

struct CarpetRaster {
    std::vector<double> t_axis;
    std::vector<double> x_axis;
    std::vector<double> intensity;  // row-major, rows indexed by t

    double at(std::size_t i, std::size_t j) const { return intensity[i * x_axis.size() + j]; }
};

// Regularized truncated comb evolution:
//   sum_{|k| <= K} e^{-i (Mk)^2 t} e^{i M k x} phihat(kM),
// phases reduced mod 2 pi before the trig calls.
std::complex<double> comb_field(const CombParams& params, double t, double x,
                                const TestFunction& phi);

// 2 ||phi''||_1 / K, a uniform bound on the |k| > K remainder of comb_field.
double comb_tail_bound(int K, const TestFunction& phi);

// Gauss-sum recovery by pairing the comb evolution at the rational time
// t_{p/q} (M = 2 pi) against phi(-qx-kappa):
//   G = sum_{|k| <= K} e^{-2 pi i k^2 p / q} e^{2 pi i k kappa / q} phihat(-2 pi k / q),
// with error_estimate = ||phi''||_1 q^2 / (2 pi^2 K) from the |xi|^-2 tail of
// phihat. The reduction from the convolution is gated by a quadrature oracle
// in the test suite.
gauss::GaussSumResult gauss_via_talbot(const gauss::GaussSumSpec& spec,
                                       const TestFunction& phi, std::int64_t K);

// Low-band recovery (only phihat values on [-pi, pi] are consumed):
// triple sum over k in [-K,K], nu in [0,N], nu' in [0,N'] of
//   binom(N,nu) binom(N',nu') (1/2+k/q)^(N-nu) (1/2-k/q)^nu
//   (1/2-kp)^(N'-nu') (1/2+kp)^nu' conj(omega_factor) phihat(2 pi (1/2-nu/N)),
// the conjugation being the calibrated sign convention (docs/derivations.md).
// Evaluated in multiprecision: for |2k/q| > 1 the nu-terms reach |2k/q|^N and
// cancel, so the working precision is raised per k; the nu' sum is folded
// into its exact closed form first.
gauss::GaussSumResult gauss_via_superosc(const gauss::GaussSumSpec& spec,
                                         const TestFunction& phi, int K, int N, int N_prime);

// intensity[i][j] = |comb_field(t_i, x_j)|^2 on the uniform grid; rows are
// computed in parallel.
CarpetRaster carpet_raster(const CombParams& params, double t_min, double t_max,
                           double x_min, double x_max, int rows, int cols,
                           const TestFunction& phi);

} // namespace talbotsum::talbot

#endif
