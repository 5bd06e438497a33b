#include <doctest.h>

#include <cmath>
#include <complex>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"
#include "talbotsum/superosc.hpp"

using namespace talbotsum;
using namespace talbotsum::superosc;
using doctest::Approx;

namespace {

const std::complex<double> I{0.0, 1.0};

// independent N+1-term evaluation, only usable while the weight magnitudes
// stay within double cancellation headroom
std::complex<double> direct_modulation(std::complex<double> z, long k, long q, int N) {
    const double wp = 0.5 + static_cast<double>(k) / q;
    const double wm = 0.5 - static_cast<double>(k) / q;
    std::complex<double> s{};
    for (int nu = 0; nu <= N; ++nu) {
        const double lw = std::lgamma(N + 1.0) - std::lgamma(nu + 1.0) - std::lgamma(N - nu + 1.0);
        const double w = std::exp(lw) * std::pow(wp, N - nu) * std::pow(wm, nu);
        s += w * std::exp(I * kTwoPi * (0.5 - static_cast<double>(nu) / N) * static_cast<double>(q) * z);
    }
    return s;
}

std::complex<double> direct_shift(std::complex<double> w, long k, long p, double t, int N,
                                  double orient) {
    const double kp = static_cast<double>(k) * p;
    std::complex<double> s{};
    for (int nu = 0; nu <= N; ++nu) {
        const double lw = std::lgamma(N + 1.0) - std::lgamma(nu + 1.0) - std::lgamma(N - nu + 1.0);
        const double c = std::exp(lw) * std::pow(0.5 * (1.0 - kp), N - nu) * std::pow(0.5 * (1.0 + kp), nu);
        s += c * std::exp(orient * (0.5 - static_cast<double>(nu) / N) * (2.0 * kTwoPi * t / p) * w);
    }
    return s;
}

} // namespace

TEST_CASE("binomial weights") {
    const auto bw = BinomialWeights::make(4, 0.0);
    CHECK(bw.weight(0) == Approx(1.0 / 16.0));
    CHECK(bw.weight(2) == Approx(6.0 / 16.0));
    CHECK(bw.sum_deviation() < 1e-14);
    // alternating regime: weights reach 2^N yet still sum to 1
    CHECK(BinomialWeights::make(200, 3.0).sum_deviation() < 1e-12);
    CHECK(BinomialWeights::make(400, 10.0).sum_deviation() < 1e-12);
    CHECK(BinomialWeights::make(50, -1.0).weight(3) == 0.0);
    CHECK_THROWS_AS(BinomialWeights::make(0, 1.0), ParameterError);
}

TEST_CASE("superosc_eval") {
    CHECK(std::abs(superosc_eval({0.0, 0.0}, 7.3, 33) - 1.0) < 1e-14);
    for (int N : {1, 9, 100})
        for (double z : {-1.7, 0.4, 2.9}) {
            CHECK(std::abs(superosc_eval({z, 0.0}, 1.0, N) - cis(z)) < 1e-13);
            CHECK(std::abs(superosc_eval({z, 0.0}, -1.0, N) - cis(-z)) < 1e-13);
        }
    // F_1(pi/2, 3) = cos(pi/2) + 3 i sin(pi/2) = 3i, far from the target -i
    CHECK(std::abs(superosc_eval({kPi / 2.0, 0.0}, 3.0, 1) - 3.0 * I) < 1e-14);
    CHECK_THROWS_AS(superosc_eval({1.0, 0.0}, 1e200, 4), OverflowError);
}

TEST_CASE("modulation approximant matches its own term sum") {
    for (long q : {2L, 3L, 4L}) {
        for (long k = -q / 2; k <= q / 2; ++k) {
            for (double z : {-0.4, 0.15, 0.5}) {
                const auto closed = modulation_approximant({z, 0.0}, k, q, 48);
                const auto direct = direct_modulation({z, 0.0}, k, q, 48);
                CHECK(std::abs(closed - direct) < 1e-10);
            }
        }
    }
    // out-of-band term sum at modest N, still within double headroom
    const auto closed = modulation_approximant({0.3, 0.0}, 2L, 2L, 24);
    const auto direct = direct_modulation({0.3, 0.0}, 2L, 2L, 24);
    CHECK(std::abs(closed - direct) < 1e-6);
    CHECK(std::abs(modulation_approximant({0.0, 0.0}, 3, 4, 57) - 1.0) < 1e-14);
}

TEST_CASE("modulation approximant converges to the modulation") {
    // k = 0: symmetric weights, 1/N error constant (pi q z)^2 / 2 = 1.78
    CHECK(std::abs(modulation_approximant({0.2, 0.0}, 0, 3, 400) - 1.0) < 5e-3);
    // in-band exact case |2k| = q
    CHECK(std::abs(modulation_approximant({0.1, 0.0}, 1, 2, 200) - cis(kTwoPi * 0.1)) < 1e-13);
    const double e1 = std::abs(modulation_approximant({0.1, 0.0}, 1, 2, 100) - cis(kTwoPi * 0.1));
    CHECK(e1 <= error_bound_M({0.1, 0.0}, 1, 2, 100));
}

TEST_CASE("shift approximant") {
    CHECK(std::abs(shift_approximant({0.0, 0.0}, 2, 3, 5, 0.7, 40) - 1.0) < 1e-14);
    CHECK(std::abs(shift_approximant({0.3, 0.1}, 0, 3, 5, 0.7, 60) - 1.0) < 2e-3);
    // |kp| = 1 collapses to a single term and reproduces the target exactly
    const double t = 1.0 / (4.0 * kPi);
    const std::complex<double> w{0.05, 0.0};
    const auto v = shift_approximant(w, 1, 1, 2, t, 400, ShiftSign::plus);
    CHECK(std::abs(v - std::exp(-w / 2.0)) < 5e-14);
    CHECK(error_bound_T(w, 1, 1, t, 400) == 0.0);
    // matches its own term sum for both orientations
    for (auto sign : {ShiftSign::plus, ShiftSign::minus}) {
        const double orient = sign == ShiftSign::plus ? 1.0 : -1.0;
        const auto closed = shift_approximant({0.2, -0.1}, 2, 1, 3, 0.05, 24, sign);
        const auto direct = direct_shift({0.2, -0.1}, 2, 1, 0.05, 24, orient);
        CHECK(std::abs(closed - direct) < 1e-6);
    }
    // calibrated orientation converges to e^{-2 pi k t w}
    const auto far = shift_approximant({0.4, 0.0}, 2, 1, 3, 0.02, 4000, ShiftSign::plus);
    const std::complex<double> target = std::exp(-kTwoPi * 2.0 * 0.02 * 0.4);
    CHECK(std::abs(far - target) < 2e-3);
    CHECK(std::abs(far - target) <= error_bound_T({0.4, 0.0}, 2, 1, 0.02, 4000));
}

TEST_CASE("error bounds printed arithmetic") {
    CHECK(error_bound_M({0.0, 0.0}, 2, 3, 50) == 0.0);
    const double f = kTwoPi / 2.0;
    const double want_m = (2.0 / 3.0) * (f * f - 1.0) / 100.0 * 0.04 * std::exp((1.0 + f) * 0.2);
    CHECK(error_bound_M({0.1, 0.0}, 1, 2, 100) == Approx(want_m).epsilon(1e-14));
    CHECK(error_bound_T({0.0, 0.0}, 2, 3, 0.5, 7) == 0.0);
    const double want_t = (2.0 / 3.0) * 3.0 / 50.0 * std::exp(3.0);
    CHECK(error_bound_T({1.0, 0.0}, 2, 1, 1.0 / kTwoPi, 50) == Approx(want_t).epsilon(1e-14));
}

TEST_CASE("omega factor") {
    CHECK(std::abs(omega_factor(4, 1, 8, 7, 5) - std::conj(omega_factor(4, 1, 8, 7, 5)) *
                                                      omega_factor(4, 1, 8, 7, 5) *
                                                      omega_factor(4, 1, 8, 7, 5)) < 1e-12);
    // nu/N = 1/2: zero exponent
    CHECK(std::abs(omega_factor(4, 2, 8, 9, 3) - 1.0) < 1e-14);
    CHECK(std::abs(omega_factor(0, 0, 2, 2, 1) - I) < 1e-14);
    for (long nu = 0; nu <= 6; ++nu)
        for (long nup = 0; nup <= 5; ++nup)
            CHECK(std::abs(omega_factor(nu, nup, 6, 5, 2)) == Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(omega_factor(7, 0, 6, 5, 0), ParameterError);
}
