#include "talbotsum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "talbotsum/galilean.hpp"
#include "talbotsum/gauss_arith.hpp"
#include "talbotsum/numeric.hpp"
#include "talbotsum/periodic_schrodinger.hpp"
#include "talbotsum/superosc.hpp"
#include "talbotsum/talbot.hpp"

namespace talbotsum::verify {

namespace {

using gauss::GaussSumSpec;
using talbot::TestFunction;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

CheckResult check_closed_vs_direct_odd() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::int64_t q = 1; q <= 64; q += 2) {
        for (std::int64_t p = 0; p < std::max<std::int64_t>(q, 1); ++p) {
            if (gauss::gcd64(p, q) != 1) continue;
            for (std::int64_t kappa = 0; kappa < q; ++kappa) {
                GaussSumSpec s{p, kappa, q};
                worst = std::max(worst,
                                 std::abs(gauss::gauss_closed_odd_q(s) - gauss::gauss_sum_direct(s)));
            }
        }
    }
    const double el = seconds_since(t0);
    return {worst < 1e-9 && el < 5.0,
            "max |closed - direct| = " + fmt(worst) + " over odd q<=64, " + fmt(el) + " s"};
}

CheckResult check_parity_even() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_vanish = 0.0, worst_mod = 0.0;
    for (std::int64_t q = 2; q <= 64; q += 2) {
        for (std::int64_t p = 0; p < q; ++p) {
            if (gauss::gcd64(p, q) != 1) continue;
            for (std::int64_t kappa = 0; kappa < q; ++kappa) {
                GaussSumSpec s{p, kappa, q};
                const auto g = gauss::gauss_sum_direct(s);
                const auto cls = gauss::gauss_even_q_classify(s);
                if (cls.vanishes)
                    worst_vanish = std::max(worst_vanish, std::abs(g));
                else
                    worst_mod = std::max(worst_mod,
                                         std::fabs(std::abs(g) - std::sqrt(2.0 * static_cast<double>(q))));
            }
        }
    }
    const double el = seconds_since(t0);
    return {worst_vanish < 1e-9 && worst_mod < 1e-9 && el < 5.0,
            "max |G| on vanishing classes = " + fmt(worst_vanish) +
                ", max ||G|-sqrt(2q)| = " + fmt(worst_mod) + ", " + fmt(el) + " s"};
}

CheckResult check_normal_closed() {
    double worst = 0.0;
    for (std::int64_t c = 1; c <= 100; ++c) {
        for (std::int64_t a = 1; a <= c; ++a) {
            if (gauss::gcd64(a, c) != 1) continue;
            worst = std::max(worst, std::abs(gauss::normal_gauss_closed(a, c) -
                                             gauss::quadratic_exponential_sum(a, 0, c)));
        }
    }
    return {worst < 1e-9, "max |closed - direct| = " + fmt(worst) + " over coprime (a,c), c<=100"};
}

CheckResult check_multiplicative() {
    double worst = 0.0;
    long pairs = 0;
    for (std::int64_t c = 1; c <= 30; ++c) {
        for (std::int64_t d = 1; d <= 30; ++d) {
            if (gauss::gcd64(c, d) != 1) continue;
            ++pairs;
            const std::int64_t cd = c * d;
            // a: the three smallest residues coprime to cd; b: exhaustive
            int picked = 0;
            for (std::int64_t a = 1; a <= cd && picked < 3; ++a) {
                if (gauss::gcd64(a, cd) != 1) continue;
                ++picked;
                for (std::int64_t b = 0; b < cd; ++b) {
                    worst = std::max(worst, std::abs(gauss::gauss_multiplicative(a, b, c, d) -
                                                     gauss::quadratic_exponential_sum(a, b, cd)));
                }
            }
        }
    }
    return {worst < 1e-9, "max |G(ac,b,d)G(ad,b,c) - G(a,b,cd)| = " + fmt(worst) + " over " +
                              std::to_string(pairs) + " coprime pairs c,d<=30"};
}

CheckResult check_jacobi_multiplicative() {
    for (std::int64_t n = 1; n <= 99; n += 2) {
        for (std::int64_t a = 1; a <= n; ++a) {
            for (std::int64_t b = 1; b <= n; ++b) {
                if (gauss::gcd64(a * b, n) != 1) continue;
                if (gauss::jacobi_symbol(a, n) * gauss::jacobi_symbol(b, n) !=
                    gauss::jacobi_symbol(a * b, n))
                    return {false, "failed at (a,b,n)=(" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(n) + ")"};
            }
        }
    }
    return {true, "(a/n)(b/n) = (ab/n) for all gcd(ab,n)=1, odd n<=99"};
}

CheckResult check_conjugation() {
    double worst = 0.0;
    for (std::int64_t q = 1; q <= 40; ++q) {
        for (std::int64_t p = 0; p < std::max<std::int64_t>(q, 1); ++p) {
            if (gauss::gcd64(p, q) != 1) continue;
            for (std::int64_t kappa = 0; kappa < q; ++kappa) {
                const auto lhs = gauss::gauss_sum_direct(GaussSumSpec{p, kappa, q});
                const auto rhs = std::conj(gauss::quadratic_exponential_sum(p, -kappa, q));
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return {worst < 1e-12, "max |G(-p,k,q) - conj(sum e^{2pi i(pl^2-kl)/q})| = " + fmt(worst)};
}

CheckResult check_talbot_recovery() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto phi = TestFunction::builtin(TestFunction::Kind::bspline3);
    double worst_err = 0.0, worst_ratio = 1e300, worst_over = 0.0;
    for (std::int64_t q = 1; q <= 6; ++q) {
        for (std::int64_t p = 0; p < std::max<std::int64_t>(q, 1); ++p) {
            if (gauss::gcd64(p, q) != 1) continue;
            for (std::int64_t kappa = 0; kappa < q; ++kappa) {
                GaussSumSpec s{p, kappa, q};
                const auto exact = gauss::gauss_sum_direct(s);
                const auto r4 = talbot::gauss_via_talbot(s, phi, 10000);
                const auto r5 = talbot::gauss_via_talbot(s, phi, 100000);
                const double e4 = std::abs(r4.value - exact);
                const double e5 = std::abs(r5.value - exact);
                worst_err = std::max(worst_err, e5);
                worst_ratio = std::min(worst_ratio, e4 / std::max(e5, 1e-300));
                worst_over = std::max(worst_over, e4 - *r4.error_estimate);
                worst_over = std::max(worst_over, e5 - *r5.error_estimate);
            }
        }
    }
    const double el = seconds_since(t0);
    return {worst_err < 1e-2 && worst_ratio >= 5.0 && worst_over <= 0.0 && el < 30.0,
            "bspline3: max |err(K=1e5)| = " + fmt(worst_err) + ", min err(1e4)/err(1e5) = " +
                fmt(worst_ratio) + ", bound margin ok, " + fmt(el) + " s"};
}

CheckResult check_superosc_bound_and_slope() {
    int violations = 0;
    int pairs = 0;
    double worst_ratio_lo = 1.0, worst_ratio_hi = 0.0;
    const int Ns[] = {50, 100, 200};
    for (long q = 2; q <= 4; ++q) {
        for (long k = -3; k <= 3; ++k) {
            if (std::labs(2 * k) == q) continue;  // exact reproduction, nothing to measure
            for (int iz = -5; iz <= 5; ++iz) {
                if (iz == 0) continue;
                const double z = 0.1 * iz;
                double err[3];
                for (int i = 0; i < 3; ++i) {
                    const auto m = superosc::modulation_approximant({z, 0.0}, k, q, Ns[i]);
                    err[i] = std::abs(m - cis(kTwoPi * k * z));
                    if (err[i] > superosc::error_bound_M({z, 0.0}, k, q, Ns[i])) ++violations;
                }
                if (err[1] > 1e-12) {
                    ++pairs;
                    const double ratio = err[2] / err[1];
                    worst_ratio_lo = std::min(worst_ratio_lo, ratio);
                    worst_ratio_hi = std::max(worst_ratio_hi, ratio);
                }
            }
        }
    }
    const bool slope_ok = worst_ratio_lo >= 0.3 && worst_ratio_hi <= 0.7 && pairs > 0;
    return {slope_ok, "slope ratios in [" + fmt(worst_ratio_lo) + ", " + fmt(worst_ratio_hi) +
                          "] over " + std::to_string(pairs) + " pairs; printed-bound violations: " +
                          std::to_string(violations) + " (reported, not gating)"};
}

CheckResult check_superosc_recovery() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto phi = TestFunction::builtin(TestFunction::Kind::cos4);
    std::ostringstream detail;
    bool ok = true;
    for (std::int64_t kappa : {0, 1}) {
        GaussSumSpec s{1, kappa, 2};
        const auto exact = gauss::gauss_sum_direct(s);
        double prev = 1e300;
        double final_err = 0.0;
        for (int N : {256, 1024, 4096}) {
            const auto r = talbot::gauss_via_superosc(s, phi, 2, N, N);
            final_err = std::abs(r.value - exact);
            if (final_err > prev * (1.0 + 1e-12)) ok = false;
            prev = final_err;
        }
        if (kappa == 1)
            ok = ok && final_err / std::abs(exact) < 0.10;
        else
            ok = ok && final_err < 0.2;
        detail << "kappa=" << kappa << " final err " << fmt(final_err) << "; ";
    }
    const double el = seconds_since(t0);
    if (el >= 120.0) ok = false;
    return {ok, detail.str() + fmt(el) + " s"};
}

CheckResult check_free_evolution() {
    schrodinger::Truncation trunc;
    PeriodicPotential zero;
    std::vector<double> tg(64), xg(64);
    for (int i = 0; i < 64; ++i) {
        tg[i] = 1.0 * i / 63.0;
        xg[i] = -kPi + kTwoPi * i / 63.0;
    }
    double worst = 0.0;
    for (double alpha : {1.0, -1.0}) {
        const double w = 0.7;
        const auto g = schrodinger::field_grid(w, alpha, tg, xg, zero, trunc,
                                               schrodinger::Engine::corrected);
        for (std::size_t i = 0; i < tg.size(); ++i)
            for (std::size_t j = 0; j < xg.size(); ++j)
                worst = std::max(worst,
                                 std::abs(g.at(i, j) - cis(w * xg[j] - alpha * w * w * tg[i])));
    }
    return {worst < 1e-12, "max |field - e^{i(wx - a w^2 t)}| = " + fmt(worst) + " on 64x64, both alpha"};
}

CheckResult check_propagator() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto V = PeriodicPotential::two_cos();
    const double alpha = 1.0, omega = 0.7;
    const int K = 16;
    const auto psi0 = schrodinger::ModeVector::delta0(K);
    const auto corr = schrodinger::dyson_corrected(1.0, alpha, alpha * omega, V, K, 64, 12, psi0);
    const auto ref = schrodinger::rk4_oracle(1.0, alpha, alpha * omega, V, K, 4096, psi0);
    double dev = 0.0;
    for (int k = -K; k <= K; ++k) dev = std::max(dev, std::abs(corr.at(k) - ref.at(k)));

    // residual of the assembled field: 64x64 window, h = 1/256, starting at t = 0.3
    const double h = 1.0 / 256.0;
    std::vector<double> tg(64), xg(64);
    for (int i = 0; i < 64; ++i) {
        tg[i] = 0.3 + h * i;
        xg[i] = h * i;
    }
    schrodinger::Truncation trunc;
    const auto g = schrodinger::field_grid(omega, alpha, tg, xg, V, trunc,
                                           schrodinger::Engine::corrected);
    const double res = schrodinger::pde_residual_max(g, V, alpha);
    const double el = seconds_since(t0);
    return {dev < 1e-6 && res < 1e-3 && el < 10.0,
            "max mode dev corrected-vs-rk4 = " + fmt(dev) + ", PDE residual = " + fmt(res) +
                " (h=1/256), " + fmt(el) + " s"};
}

CheckResult check_unitarity() {
    const auto V = PeriodicPotential::two_cos();
    const int K = 16;
    const auto ref = schrodinger::rk4_oracle(1.0, 1.0, 0.7, V, K, 4096,
                                             schrodinger::ModeVector::delta0(K));
    const double drift = std::fabs(ref.norm2() - 1.0);
    return {drift < 1e-8, "| ||psi(1)|| - 1 | = " + fmt(drift) + " at 4096 rk4 steps"};
}

CheckResult check_galilean_roundtrip() {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> freq(-3.0, 3.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        galilean::PlaneWaveField f;
        const int terms = 1 + trial % 4;
        for (int j = 0; j < terms; ++j) {
            galilean::PhasePoly a;
            a.amp = {unit(rng), unit(rng)};
            a.c0 = unit(rng);
            a.c1 = unit(rng);
            f.terms.push_back({freq(rng) + 7.0 * j, a});
        }
        const double w = 2.0 * unit(rng);
        const int alpha = trial % 2 == 0 ? 1 : -1;
        const auto back = galilean::galilean_transform(galilean::galilean_transform(f, w, alpha),
                                                       -w, alpha);
        for (std::size_t j = 0; j < f.terms.size(); ++j) {
            worst = std::max(worst,
                             std::fabs(back.terms[j].frequency - f.terms[j].frequency));
            for (int i = 0; i < 64; ++i) {
                const double t = i / 32.0;
                worst = std::max(worst, std::abs(amplitude_eval(back.terms[j].amplitude, t) -
                                                 amplitude_eval(f.terms[j].amplitude, t)));
            }
        }
    }
    return {worst < 1e-12, "20 randomized round trips, max deviation = " + fmt(worst)};
}

CheckResult check_supershift() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto V = PeriodicPotential::two_cos();
    schrodinger::Truncation trunc;
    trunc.k_modes = 8;
    trunc.m_trunc = 1;
    trunc.order = 8;
    trunc.substeps = 64;
    const double omega = 1.5, alpha = 1.0;
    std::vector<double> tg(17), xg(49);
    for (int i = 0; i < 17; ++i) tg[i] = 0.5 * i / 16.0;
    for (int j = 0; j < 49; ++j) xg[j] = -1.0 + 2.0 * j / 48.0;

    const auto target = schrodinger::field_grid(omega, alpha, tg, xg, V, trunc,
                                                schrodinger::Engine::corrected);
    double sup = 0.0;
    for (const auto& v : target.values) sup = std::max(sup, std::abs(v));

    std::ostringstream detail;
    double prev = 1e300;
    bool mono = true;
    double final_rel = 0.0;
    for (int np : {20, 40, 80}) {
        const auto s = schrodinger::supershift_superposition(omega, np, alpha, tg, xg, V, trunc);
        double d = 0.0;
        for (std::size_t i = 0; i < s.values.size(); ++i)
            d = std::max(d, std::abs(s.values[i] - target.values[i]));
        if (d > prev) mono = false;
        prev = d;
        final_rel = d / sup;
        detail << "N'=" << np << ": " << fmt(100.0 * d / sup) << "%; ";
    }
    const double el = seconds_since(t0);
    return {mono && final_rel < 0.05 && el < 60.0,
            detail.str() + "grid [0,0.5]x[-1,1], " + fmt(el) + " s"};
}

CheckResult check_carpet_structure() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto phi = TestFunction::builtin(TestFunction::Kind::cos4);

    auto cell_ratio = [&phi](double M, int K) {
        talbot::CombParams params{M, K};
        const double t_talbot = kTwoPi / (M * M);
        const double period = kTwoPi / M;
        const auto raster =
            talbot::carpet_raster(params, 0.0, t_talbot, 0.0, period, 512, 512, phi);
        const double t_half = talbot::RationalTime(1, 2).value(M);
        std::size_t row = 0;
        double best = 1e300;
        for (std::size_t i = 0; i < raster.t_axis.size(); ++i) {
            const double d = std::fabs(raster.t_axis[i] - t_half);
            if (d < best) {
                best = d;
                row = i;
            }
        }
        // q = 2 comb positions kappa = 0, 1 at x = kappa * period / 2; cells of
        // width period/4 centered there. q' - kappa even (kappa = 1) is the
        // bright class.
        double bright = 0.0, dark = 0.0;
        for (std::size_t j = 0; j < raster.x_axis.size(); ++j) {
            double x = std::fmod(raster.x_axis[j], period);
            const double d0 = std::min(x, period - x);
            const double d1 = std::fabs(x - 0.5 * period);
            if (d0 < period / 8.0) dark += raster.at(row, j);
            if (d1 < period / 8.0) bright += raster.at(row, j);
        }
        return bright / std::max(dark, 1e-300);
    };

    const double ratio = cell_ratio(kPi / 4.0, 200);
    const double ratio_2pi = cell_ratio(kTwoPi, 200);  // overlapping teeth: capped near 3-4
    const double el = seconds_since(t0);
    return {ratio >= 10.0 && el < 10.0,
            "bright/dark cell ratio = " + fmt(ratio) + " at M=pi/4 (M=2pi gives " +
                fmt(ratio_2pi) + ": teeth of width 2 overlap on the unit comb), " + fmt(el) + " s"};
}

CheckResult check_weight_normalization() {
    double worst = 0.0;
    for (double a : {0.0, 0.5, -1.0, 1.0, 2.0, -3.0, 10.0}) {
        for (int N : {1, 7, 50, 400}) {
            worst = std::max(worst, superosc::BinomialWeights::make(N, a).sum_deviation());
        }
    }
    return {worst < 1e-12, "max |sum C_nu - 1| = " + fmt(worst) + " over |a|<=10, N<=400"};
}

CheckResult check_superosc_exactness() {
    double worst = 0.0;
    for (int N : {1, 5, 64, 333}) {
        for (double z : {-2.0, -0.3, 0.7, 3.1}) {
            worst = std::max(worst, std::abs(superosc::superosc_eval({z, 0.0}, 1.0, N) - cis(z)));
            worst = std::max(worst, std::abs(superosc::superosc_eval({z, 0.0}, -1.0, N) - cis(-z)));
        }
    }
    double worst_mod = 0.0;
    for (long nu = 0; nu <= 8; ++nu)
        for (long nup = 0; nup <= 8; ++nup)
            worst_mod = std::max(worst_mod,
                                 std::fabs(std::abs(superosc::omega_factor(nu, nup, 8, 8, 3)) - 1.0));
    return {worst < 1e-13 && worst_mod < 1e-14,
            "F_N(z,+-1) vs e^{+-iz}: " + fmt(worst) + "; omega_factor unit modulus: " + fmt(worst_mod)};
}

CheckResult check_comb_periodicity() {
    const auto phi = TestFunction::builtin(TestFunction::Kind::cos4);
    talbot::CombParams params{1.7, 40};
    const double period_x = kTwoPi / params.M;
    const double period_t = kTwoPi / (params.M * params.M);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double t = 0.13 * i, x = -1.0 + 0.61 * i;
        const auto a = talbot::comb_field(params, t, x, phi);
        worst = std::max(worst, std::abs(talbot::comb_field(params, t, x + period_x, phi) - a));
        worst = std::max(worst, std::abs(talbot::comb_field(params, t + period_t, x, phi) - a));
    }
    return {worst < 1e-10, "space/time periodicity defect = " + fmt(worst)};
}

CheckResult check_hermiticity_and_entry_bound() {
    const auto V = PeriodicPotential::two_cos();
    const int K = 8;
    double worst_h = 0.0;
    for (double t : {0.0, 0.3, 1.1}) {
        for (double omega : {0.0, 0.7}) {
            const auto A = schrodinger::coupling_matrix(t, 1.0, omega, V, K);
            for (int r = -K; r <= K; ++r)
                for (int c = -K; c <= K; ++c)
                    worst_h = std::max(worst_h,
                                       std::abs(A.entry(r, c) - std::conj(A.entry(c, r))));
        }
    }
    double worst_b = 0.0;
    for (double t : {0.1, 0.9, 2.3}) {
        const auto B = schrodinger::b_matrix(t, 1.0, 0.7, V, -1, K);
        for (int r = -K; r <= K; ++r)
            for (int c = -K; c <= K; ++c) {
                const double cap = std::abs(V.harmonic(r - c)) * t + 1e-12;
                worst_b = std::max(worst_b, std::abs(B.entry(r, c)) - cap);
            }
    }
    return {worst_h < 1e-14 && worst_b <= 0.0,
            "hermiticity defect = " + fmt(worst_h) + "; entry bound margin = " + fmt(worst_b)};
}

CheckResult check_series_convergence() {
    PeriodicPotential V({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});  // ||c||_1 = 4
    const int K = 12;
    const auto psi0 = schrodinger::ModeVector::delta0(K);
    const auto a = schrodinger::dyson_corrected(1.0, 1.0, 0.4, V, K, 64, 12, psi0);
    const auto b = schrodinger::dyson_corrected(1.0, 1.0, 0.4, V, K, 64, 16, psi0);
    double d = 0.0;
    for (int k = -K; k <= K; ++k) d = std::max(d, std::abs(a.at(k) - b.at(k)));
    return {d < 1e-9, "order 12 vs 16 deviation = " + fmt(d) + " at ||c||_1 = 4, t = 1"};
}

CheckResult check_mode_truncation() {
    const auto V = PeriodicPotential::two_cos();
    std::vector<double> xg(33);
    for (int j = 0; j < 33; ++j) xg[j] = -kPi + kTwoPi * j / 32.0;
    schrodinger::Truncation t16, t32;
    t16.k_modes = 16;
    t32.k_modes = 32;
    const auto f16 = schrodinger::plane_wave_evolution(0.7, 1.0, 1.0, xg, V, t16,
                                                       schrodinger::Engine::corrected);
    const auto f32 = schrodinger::plane_wave_evolution(0.7, 1.0, 1.0, xg, V, t32,
                                                       schrodinger::Engine::corrected);
    double d = 0.0;
    for (std::size_t j = 0; j < xg.size(); ++j)
        d = std::max(d, std::abs(f16.field[j] - f32.field[j]));
    return {d < 1e-6, "K_modes 16 vs 32 field deviation = " + fmt(d)};
}

CheckResult check_literal_divergence() {
    const auto V = PeriodicPotential::two_cos();
    const int K = 16;
    const auto psi0 = schrodinger::ModeVector::delta0(K);
    schrodinger::PropagatorSeries series;
    series.alpha = 1.0;
    series.omega = 0.7;
    series.V = V;
    series.k_modes = K;
    const auto lit = schrodinger::dyson_literal(series, 1.0, 12, psi0);
    const auto ref = schrodinger::rk4_oracle(1.0, 1.0, 0.7, V, K, 4096, psi0);
    double d = 0.0;
    for (int k = -K; k <= K; ++k) d = std::max(d, std::abs(lit.at(k) - ref.at(k)));
    // documented divergence: the unordered no -i series is not a propagator
    return {d > 0.1, "PAPER-LITERAL (no -i) deviation from oracle = " + fmt(d) +
                         " (expected O(1); regression artifact, not a failure)"};
}

} // namespace

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {"closed-form vs direct, odd q", "gauss", 1, check_closed_vs_direct_odd},
        {"parity vanishing, even q", "gauss", 2, check_parity_even},
        {"normal Gauss sums closed form", "gauss", 3, check_normal_closed},
        {"multiplicative identity", "gauss", 4, check_multiplicative},
        {"Talbot pairing recovery", "talbot", 5, check_talbot_recovery},
        {"superoscillation bound and slope", "superosc", 6, check_superosc_bound_and_slope},
        {"low-band recovery, growing N", "superosc", 7, check_superosc_recovery},
        {"free plane-wave evolution", "schrodinger", 8, check_free_evolution},
        {"propagator vs rk4 + PDE residual", "schrodinger", 9, check_propagator},
        {"oracle unitarity", "schrodinger", 10, check_unitarity},
        {"Galilean round trip", "schrodinger", 11, check_galilean_roundtrip},
        {"supershift superposition", "schrodinger", 12, check_supershift},
        {"carpet parity structure", "talbot", 13, check_carpet_structure},
        {"jacobi multiplicativity", "gauss", 0, check_jacobi_multiplicative},
        {"direct-sum conjugation symmetry", "gauss", 0, check_conjugation},
        {"binomial weight normalization", "superosc", 0, check_weight_normalization},
        {"band-edge exactness", "superosc", 0, check_superosc_exactness},
        {"comb periodicity", "talbot", 0, check_comb_periodicity},
        {"coupling hermiticity + entry bound", "schrodinger", 0, check_hermiticity_and_entry_bound},
        {"series order convergence", "schrodinger", 0, check_series_convergence},
        {"mode truncation stability", "schrodinger", 0, check_mode_truncation},
        {"paper-literal series divergence", "schrodinger", 0, check_literal_divergence},
    };
    return checks;
}

std::vector<const Check*> suite_checks(const std::string& suite) {
    std::vector<const Check*> out;
    for (const auto& c : all_checks())
        if (suite.empty() || suite == "all" || suite == c.suite) out.push_back(&c);
    return out;
}

} // namespace talbotsum::verify
