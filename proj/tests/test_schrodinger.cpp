#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"
#include "talbotsum/periodic_schrodinger.hpp"

using namespace talbotsum;
using namespace talbotsum::schrodinger;
using doctest::Approx;

namespace {
const std::complex<double> I{0.0, 1.0};
}

TEST_CASE("potential parsing") {
    std::istringstream good("# V = 2 cos x\n0 0 0\n1 1 0\n");
    const auto V = PeriodicPotential::parse(good);
    CHECK(V.max_harmonic() == 1);
    CHECK(V.harmonic(1) == std::complex<double>{1.0, 0.0});
    CHECK(V.harmonic(-1) == std::complex<double>{1.0, 0.0});
    CHECK(V.harmonic(5) == std::complex<double>{0.0, 0.0});
    CHECK(V.l1_norm() == Approx(2.0));
    CHECK(V.eval(0.0) == Approx(2.0));
    CHECK(V.eval(kPi) == Approx(-2.0));

    std::istringstream bad1("1 0.5\n");
    CHECK_THROWS_AS(PeriodicPotential::parse(bad1), IoError);
    std::istringstream bad2("-1 0.5 0\n");
    CHECK_THROWS_AS(PeriodicPotential::parse(bad2), IoError);
    std::istringstream bad3("0 1 0.5\n");
    CHECK_THROWS_AS(PeriodicPotential::parse(bad3), IoError);
    std::istringstream bad4("");
    CHECK_THROWS_AS(PeriodicPotential::parse(bad4), IoError);
}

TEST_CASE("coupling matrix") {
    const PeriodicPotential zero;
    const auto A0 = coupling_matrix(0.5, 1.0, 0.0, zero, 4);
    for (int r = -4; r <= 4; ++r)
        for (int c = -4; c <= 4; ++c) CHECK(A0.entry(r, c) == std::complex<double>{0.0, 0.0});

    const auto V = PeriodicPotential::two_cos();
    const double t = 0.37;
    const auto A = coupling_matrix(t, 1.0, 0.0, V, 4);
    // l = 1 entry (1, 0): c_1 e^{i l (2k - l) t} = e^{it}
    CHECK(std::abs(A.entry(1, 0) - cis(t)) < 1e-15);
    CHECK(std::abs(A.entry(0, 1) - cis(-t)) < 1e-15);
    // hermitian at every t for the real potential
    for (int r = -4; r <= 4; ++r)
        for (int c = -4; c <= 4; ++c)
            CHECK(std::abs(A.entry(r, c) - std::conj(A.entry(c, r))) < 1e-15);
    CHECK_THROWS_AS(coupling_matrix(0.0, 1.0, 0.0, V, 0), ParameterError);
}

TEST_CASE("b matrix") {
    const auto V = PeriodicPotential::two_cos();
    const auto B0 = b_matrix(0.0, 1.0, 0.0, V, -1, 4);
    for (int r = -4; r <= 4; ++r)
        for (int c = -4; c <= 4; ++c) CHECK(std::abs(B0.entry(r, c)) == 0.0);

    const double t = 0.8;
    const auto B = b_matrix(t, 1.0, 0.0, V, -1, 4);
    // entry (1, 0): theta = 1, so (e^{it} - 1)/i
    CHECK(std::abs(B.entry(1, 0) - (cis(t) - 1.0) / I) < 1e-15);
    // resonant entry: omega = 1/2, k = 0, l = 1: theta = 1 - 1 = 0 -> c_1 t
    const auto Br = b_matrix(t, 1.0, 0.5, V, -1, 4);
    CHECK(std::abs(Br.entry(0, -1) - t) < 1e-15);
    // entry bound |B[k][k']| <= |c_{k-k'}| t
    for (double tt : {0.3, 1.7}) {
        const auto Bt = b_matrix(tt, 1.0, 0.7, V, -1, 6);
        for (int r = -6; r <= 6; ++r)
            for (int c = -6; c <= 6; ++c)
                CHECK(std::abs(Bt.entry(r, c)) <= std::abs(V.harmonic(r - c)) * tt + 1e-14);
    }
}

TEST_CASE("dyson literal") {
    const auto V = PeriodicPotential::two_cos();
    PropagatorSeries series;
    series.V = V;
    series.k_modes = 4;
    const auto psi0 = ModeVector::delta0(4);

    PropagatorSeries free = series;
    free.V = PeriodicPotential{};
    const auto same = dyson_literal(free, 1.3, 12, psi0);
    for (int k = -4; k <= 4; ++k) CHECK(same.at(k) == psi0.at(k));

    const auto id = dyson_literal(series, 0.9, 0, psi0);
    for (int k = -4; k <= 4; ++k) CHECK(id.at(k) == psi0.at(k));

    const auto first = dyson_literal(series, 0.9, 1, psi0);
    const auto B = series.banded_at(0.9);
    CHECK(std::abs(first.at(0) - 1.0) < 1e-15);
    CHECK(std::abs(first.at(1) - B.entry(1, 0)) < 1e-15);
    CHECK(std::abs(first.at(-1) - B.entry(-1, 0)) < 1e-15);
}

TEST_CASE("corrected propagator") {
    const auto V = PeriodicPotential::two_cos();
    const auto psi0 = ModeVector::delta0(6);

    const auto still = dyson_corrected(1.0, 1.0, 0.0, PeriodicPotential{}, 6, 8, 8, psi0);
    for (int k = -6; k <= 6; ++k) CHECK(std::abs(still.at(k) - psi0.at(k)) == 0.0);

    // commuting family (alpha = 0): exp(-i int A) is exact, one substep
    // suffices. K wide enough that the truncated shifts' boundary defect is
    // below the residual floor.
    const auto psi0w = ModeVector::delta0(10);
    const auto one = dyson_corrected(0.5, 0.0, 0.3, V, 10, 1, 16, psi0w);
    const auto ref = rk4_oracle(0.5, 0.0, 0.3, V, 10, 4096, psi0w);
    double d = 0.0;
    for (int k = -10; k <= 10; ++k) d = std::max(d, std::abs(one.at(k) - ref.at(k)));
    CHECK(d < 1e-9);

    CHECK_THROWS_AS(dyson_corrected(1.0, 1.0, 0.0, V, 6, 0, 8, psi0), ParameterError);
}

TEST_CASE("rk4 oracle basics") {
    const auto psi0 = ModeVector::delta0(5);
    const auto free = rk4_oracle(2.0, 1.0, 0.0, PeriodicPotential{}, 5, 16, psi0);
    for (int k = -5; k <= 5; ++k) CHECK(free.at(k) == psi0.at(k));

    const auto V = PeriodicPotential::two_cos();
    const auto a = rk4_oracle(0.5, 1.0, 0.7, V, 8, 64, ModeVector::delta0(8));
    const auto b = rk4_oracle(0.5, 1.0, 0.7, V, 8, 128, ModeVector::delta0(8));
    const auto fine = rk4_oracle(0.5, 1.0, 0.7, V, 8, 4096, ModeVector::delta0(8));
    double ea = 0.0, eb = 0.0;
    for (int k = -8; k <= 8; ++k) {
        ea = std::max(ea, std::abs(a.at(k) - fine.at(k)));
        eb = std::max(eb, std::abs(b.at(k) - fine.at(k)));
    }
    const double order = std::log2(ea / eb);
    CHECK(order > 3.5);  // 4th-order step halving
    CHECK(order < 4.5);
    CHECK(fine.norm2() == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("plane wave evolution") {
    Truncation trunc;
    trunc.k_modes = 8;
    std::vector<double> xg{-2.0, -0.5, 0.0, 1.0, 2.5};

    // free case: e^{i(w x - alpha w^2 t)} to round-off
    for (double alpha : {1.0, -1.0}) {
        const auto r = plane_wave_evolution(0.7, alpha, 0.9, xg, PeriodicPotential{}, trunc,
                                            Engine::corrected);
        for (std::size_t j = 0; j < xg.size(); ++j)
            CHECK(std::abs(r.field[j] - cis(0.7 * xg[j] - alpha * 0.49 * 0.9)) < 1e-12);
        CHECK(r.modes.norm2() == Approx(1.0));
    }

    // omega = 0 reduces to the periodic evolution of [1]
    const auto V = PeriodicPotential::two_cos();
    trunc.k_modes = 12;
    const auto r0 = plane_wave_evolution(0.0, 1.0, 0.6, xg, V, trunc, Engine::corrected);
    const auto modes = dyson_corrected(0.6, 1.0, 0.0, V, 12, 64, 12, ModeVector::delta0(12));
    for (std::size_t j = 0; j < xg.size(); ++j) {
        std::complex<double> expect{};
        for (int k = -12; k <= 12; ++k)
            expect += cis(-static_cast<double>(k) * k * 0.6) * modes.at(k) * cis(k * xg[j]);
        CHECK(std::abs(r0.field[j] - expect) < 1e-10);
    }

    // the three engines agree on the free problem
    const auto lit = plane_wave_evolution(1.3, 1.0, 0.4, xg, PeriodicPotential{}, trunc,
                                          Engine::literal);
    const auto orc = plane_wave_evolution(1.3, 1.0, 0.4, xg, PeriodicPotential{}, trunc,
                                          Engine::oracle);
    for (std::size_t j = 0; j < xg.size(); ++j)
        CHECK(std::abs(lit.field[j] - orc.field[j]) < 1e-12);
}

TEST_CASE("supershift degenerate and free cases") {
    const auto V = PeriodicPotential::two_cos();
    Truncation trunc;
    trunc.k_modes = 6;
    trunc.order = 8;
    std::vector<double> tg{0.0, 0.1, 0.2};
    std::vector<double> xg{-0.5, 0.0, 0.5};

    // omega = 1: only nu = 0 survives, equal to the plain evolution
    const auto s1 = supershift_superposition(1.0, 12, 1.0, tg, xg, V, trunc);
    const auto f1 = field_grid(1.0, 1.0, tg, xg, V, trunc, Engine::corrected);
    for (std::size_t i = 0; i < s1.values.size(); ++i)
        CHECK(std::abs(s1.values[i] - f1.values[i]) < 1e-12);

    // V = 0: converges to the free exponential as N' grows
    const PeriodicPotential zero;
    double prev = 1e300;
    for (int np : {20, 40, 80}) {
        const auto s = supershift_superposition(1.5, np, 1.0, tg, xg, zero, trunc);
        double worst = 0.0;
        for (std::size_t i = 0; i < tg.size(); ++i)
            for (std::size_t j = 0; j < xg.size(); ++j)
                worst = std::max(worst, std::abs(s.at(i, j) - cis(1.5 * xg[j] - 2.25 * tg[i])));
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("randomized potentials: hermiticity, unitarity, engine agreement") {
    std::mt19937 rng(987);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::complex<double>> c(4);
        c[0] = {unit(rng), 0.0};
        for (int l = 1; l <= 3; ++l) c[l] = {unit(rng), unit(rng)};
        const PeriodicPotential V(c);
        const double omega = unit(rng), alpha = trial % 2 ? 1.0 : -1.0;
        const int K = 10;

        const auto A = coupling_matrix(0.37 + trial * 0.11, alpha, omega, V, K);
        for (int r = -K; r <= K; ++r)
            for (int col = -K; col <= K; ++col)
                CHECK(std::abs(A.entry(r, col) - std::conj(A.entry(col, r))) < 1e-14);

        const auto ref = rk4_oracle(0.7, alpha, omega, V, K, 2048, ModeVector::delta0(K));
        CHECK(ref.norm2() == Approx(1.0).epsilon(1e-9));
        const auto corr = dyson_corrected(0.7, alpha, omega, V, K, 96, 12, ModeVector::delta0(K));
        double d = 0.0;
        for (int k = -K; k <= K; ++k) d = std::max(d, std::abs(corr.at(k) - ref.at(k)));
        CHECK(d < 1e-7);
    }
}

TEST_CASE("pde residual helper") {
    // analytic free solution on a fine grid has a tiny residual
    const PeriodicPotential zero;
    FieldGrid g;
    const int n = 24;
    const double h = 1.0 / 512.0;
    g.t_axis.resize(n);
    g.x_axis.resize(n);
    g.values.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) g.t_axis[i] = 0.2 + i * h;
    for (int j = 0; j < n; ++j) g.x_axis[j] = j * h;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.values[static_cast<std::size_t>(i) * n + j] =
                cis(1.3 * g.x_axis[j] - 1.69 * g.t_axis[i]);
    CHECK(pde_residual_max(g, zero, 1.0) < 2e-5);
    CHECK_THROWS_AS(pde_residual_max(FieldGrid{}, zero, 1.0), ParameterError);
}
