#include "talbotsum/periodic_schrodinger.hpp"

#include <cmath>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum::schrodinger {

namespace {

using real = long double;
using cplx = std::complex<real>;
using BandedL = BandedMatrix<real>;
using VecL = std::vector<cplx>;

constexpr real kResonanceEps = 1e-9L;

cplx cis_l(real theta) { return {std::cos(theta), std::sin(theta)}; }

int effective_m(const PeriodicPotential& V, int m_trunc) {
    const int mv = std::max(V.max_harmonic(), 0);
    if (m_trunc < 0 || m_trunc > mv) return mv;
    return m_trunc;
}

BandedL coupling_l(real t, real alpha, real omega, const PeriodicPotential& V, int k_modes,
                   int m_trunc) {
    const int W = effective_m(V, m_trunc);
    BandedL A(k_modes, W);
    for (int l = -W; l <= W; ++l) {
        const std::complex<double> cl = V.harmonic(l);
        if (cl == std::complex<double>{}) continue;
        const cplx c{static_cast<real>(cl.real()), static_cast<real>(cl.imag())};
        for (int k = -k_modes; k <= k_modes; ++k) {
            if (k - l < -k_modes || k - l > k_modes) continue;
            const real theta = (2.0L * omega * l + alpha * l * (2 * k - l)) * t;
            A.at(k, l) = c * cis_l(theta);
        }
    }
    return A;
}

// exact moments of A over [t0, t1]:
//   M1 = int A dtau, M2 = int (tau - tmid) A dtau
void moments_l(real t0, real t1, real alpha, real omega, const PeriodicPotential& V,
               int k_modes, int m_trunc, BandedL& M1, BandedL& M2) {
    const int W = effective_m(V, m_trunc);
    M1 = BandedL(k_modes, W);
    M2 = BandedL(k_modes, W);
    const real tm = 0.5L * (t0 + t1);
    const real h = t1 - t0;
    for (int l = -W; l <= W; ++l) {
        const std::complex<double> cl = V.harmonic(l);
        if (cl == std::complex<double>{}) continue;
        const cplx c{static_cast<real>(cl.real()), static_cast<real>(cl.imag())};
        for (int k = -k_modes; k <= k_modes; ++k) {
            if (k - l < -k_modes || k - l > k_modes) continue;
            const real theta = 2.0L * omega * l + alpha * l * (2 * k - l);
            if (std::fabs(theta) < kResonanceEps) {
                M1.at(k, l) = c * h;
                // int (tau - tmid) dtau = 0 over the symmetric window
            } else {
                const cplx ith{0.0L, theta};
                // e^{i theta t0} (e^{i theta h} - 1), with the difference in
                // the stable half-angle form
                const cplx e0 = cis_l(theta * t0);
                const real sh = std::sin(0.5L * theta * h);
                const cplx diff{-2.0L * sh * sh, std::sin(theta * h)};
                M1.at(k, l) = c * e0 * diff / ith;
                const cplx e1 = cis_l(theta * t1);
                M2.at(k, l) = c * (((t1 - tm) * e1 - (t0 - tm) * e0) / ith - e0 * diff / (ith * ith));
            }
        }
    }
}

// psi <- (Id + sum_{n<=N} X^n/n!) psi
void expm_apply(const BandedL& X, int N, VecL& psi, VecL& term, VecL& tmp) {
    term = psi;
    for (int n = 1; n <= N; ++n) {
        X.apply(term, tmp);
        const real inv = 1.0L / static_cast<real>(n);
        for (std::size_t i = 0; i < tmp.size(); ++i) term[i] = tmp[i] * inv;
        for (std::size_t i = 0; i < psi.size(); ++i) psi[i] += term[i];
    }
}

VecL promote(const ModeVector& m) {
    VecL v(m.v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = cplx{static_cast<real>(m.v[i].real()), static_cast<real>(m.v[i].imag())};
    return v;
}

ModeVector demote(int K, const VecL& v) {
    ModeVector m;
    m.K = K;
    m.v.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        m.v[i] = {static_cast<double>(v[i].real()), static_cast<double>(v[i].imag())};
    return m;
}

// one CF4 step over [t0, t1]
void cf4_step(real t0, real t1, real alpha, real omega, const PeriodicPotential& V,
              int k_modes, int m_trunc, int order, VecL& psi, VecL& term, VecL& tmp) {
    BandedL M1, M2;
    moments_l(t0, t1, alpha, omega, V, k_modes, m_trunc, M1, M2);
    const real h = t1 - t0;
    BandedL X1 = M1;
    X1 *= cplx{0.5L, 0.0L};
    BandedL X2 = X1;
    X1.axpy(cplx{-2.0L / h, 0.0L}, M2);
    X2.axpy(cplx{+2.0L / h, 0.0L}, M2);
    X1 *= cplx{0.0L, -1.0L};
    X2 *= cplx{0.0L, -1.0L};
    expm_apply(X1, order, psi, term, tmp);
    expm_apply(X2, order, psi, term, tmp);
}

void rk4_steps(real t0, real t1, int steps, real alpha, real omega, const PeriodicPotential& V,
               int k_modes, int m_trunc, VecL& psi) {
    const real h = (t1 - t0) / static_cast<real>(steps);
    const std::size_t n = psi.size();
    VecL k1(n), k2(n), k3(n), k4(n), stage(n), tmp(n);
    const cplx mi{0.0L, -1.0L};
    for (int s = 0; s < steps; ++s) {
        const real tm = t0 + s * h;
        auto deriv = [&](real tau, const VecL& y, VecL& out) {
            coupling_l(tau, alpha, omega, V, k_modes, m_trunc).apply(y, tmp);
            for (std::size_t i = 0; i < n; ++i) out[i] = mi * tmp[i];
        };
        deriv(tm, psi, k1);
        for (std::size_t i = 0; i < n; ++i) stage[i] = psi[i] + 0.5L * h * k1[i];
        deriv(tm + 0.5L * h, stage, k2);
        for (std::size_t i = 0; i < n; ++i) stage[i] = psi[i] + 0.5L * h * k2[i];
        deriv(tm + 0.5L * h, stage, k3);
        for (std::size_t i = 0; i < n; ++i) stage[i] = psi[i] + h * k3[i];
        deriv(tm + h, stage, k4);
        for (std::size_t i = 0; i < n; ++i)
            psi[i] += h / 6.0L * (k1[i] + 2.0L * k2[i] + 2.0L * k3[i] + k4[i]);
    }
}

// snapshots of psi at the (ascending) times in t_grid, from psi(0) = psi0
std::vector<VecL> evolve_snapshots(const std::vector<double>& t_grid, real alpha,
                                   real omega_twist, const PeriodicPotential& V,
                                   const Truncation& trunc, Engine engine,
                                   const ModeVector& psi0) {
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
        if (!(t_grid[i] <= t_grid[i + 1]))
            throw ParameterError("evolution: time grid must be ascending");
    if (!t_grid.empty() && t_grid.front() < 0.0)
        throw ParameterError("evolution: negative time");

    const int K = trunc.k_modes;
    std::vector<VecL> out;
    out.reserve(t_grid.size());

    if (engine == Engine::literal) {
        PropagatorSeries series;
        series.alpha = static_cast<double>(alpha);
        series.omega = static_cast<double>(omega_twist);
        series.V = V;
        series.m_trunc = trunc.m_trunc;
        series.k_modes = K;
        series.order = trunc.order;
        for (double t : t_grid) {
            ModeVector m = dyson_literal(series, t, trunc.order, psi0);
            out.push_back(promote(m));
        }
        return out;
    }

    const double t_total = t_grid.empty() ? 0.0 : t_grid.back();
    const int budget = engine == Engine::corrected ? trunc.substeps : trunc.oracle_steps;
    VecL psi = promote(psi0);
    VecL term(psi.size()), tmp(psi.size());
    real tprev = 0.0L;
    for (double td : t_grid) {
        const real t = static_cast<real>(td);
        if (t > tprev) {
            int n = t_total > 0.0
                        ? static_cast<int>(std::ceil(budget * (static_cast<double>(t - tprev)) / t_total))
                        : 1;
            if (n < 1) n = 1;
            if (engine == Engine::corrected) {
                const real h = (t - tprev) / static_cast<real>(n);
                for (int s = 0; s < n; ++s)
                    cf4_step(tprev + s * h, tprev + (s + 1) * h, alpha, omega_twist, V, K,
                             trunc.m_trunc, trunc.order, psi, term, tmp);
            } else {
                rk4_steps(tprev, t, n, alpha, omega_twist, V, K, trunc.m_trunc, psi);
            }
            tprev = t;
        }
        out.push_back(psi);
    }
    return out;
}

// assembled field row at time t from the twisted-frame modes
void assemble_row(const VecL& psi, real t, real alpha, real omega,
                  const std::vector<double>& x_grid, cplx* row) {
    const int K = (static_cast<int>(psi.size()) - 1) / 2;
    VecL coef(psi.size());
    for (int k = -K; k <= K; ++k) {
        const real phase = -alpha * (static_cast<real>(k) * k + omega * omega + 2.0L * k * omega) * t;
        coef[static_cast<std::size_t>(k + K)] = psi[static_cast<std::size_t>(k + K)] * cis_l(phase);
    }
    for (std::size_t j = 0; j < x_grid.size(); ++j) {
        const real x = static_cast<real>(x_grid[j]);
        cplx acc{};
        for (int k = -K; k <= K; ++k)
            acc += coef[static_cast<std::size_t>(k + K)] * cis_l((k + omega) * x);
        row[j] = acc;
    }
}

std::vector<cplx> field_grid_l(real omega, real alpha, const std::vector<double>& t_grid,
                               const std::vector<double>& x_grid, const PeriodicPotential& V,
                               const Truncation& trunc, Engine engine) {
    const auto snaps = evolve_snapshots(t_grid, alpha, alpha * omega, V, trunc, engine,
                                        ModeVector::delta0(trunc.k_modes));
    std::vector<cplx> vals(t_grid.size() * x_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        assemble_row(snaps[i], static_cast<real>(t_grid[i]), alpha, omega, x_grid,
                     vals.data() + i * x_grid.size());
    return vals;
}

} // namespace

ModeVector ModeVector::delta0(int K) {
    if (K < 0) throw ParameterError("ModeVector: K must be >= 0");
    ModeVector m;
    m.K = K;
    m.v.assign(static_cast<std::size_t>(2 * K + 1), {0.0, 0.0});
    m.at(0) = {1.0, 0.0};
    return m;
}

double ModeVector::norm2() const {
    long double s = 0.0L;
    for (const auto& z : v) s += static_cast<long double>(std::norm(z));
    return static_cast<double>(std::sqrt(s));
}

Banded coupling_matrix(double t, double alpha, double omega, const PeriodicPotential& V,
                       int k_modes) {
    if (k_modes < V.max_harmonic())
        throw ParameterError("coupling_matrix: K_modes must be >= the harmonic cutoff");
    BandedL A = coupling_l(static_cast<real>(t), static_cast<real>(alpha),
                           static_cast<real>(omega), V, k_modes, -1);
    Banded out(A.modes(), A.bandwidth());
    for (int k = -A.modes(); k <= A.modes(); ++k)
        for (int l = -A.bandwidth(); l <= A.bandwidth(); ++l)
            out.at(k, l) = {static_cast<double>(A.at(k, l).real()),
                            static_cast<double>(A.at(k, l).imag())};
    return out;
}

Banded b_matrix(double t, double alpha, double omega, const PeriodicPotential& V,
                int m_trunc, int k_modes) {
    const int W = effective_m(V, m_trunc);
    if (k_modes < W)
        throw ParameterError("b_matrix: K_modes must be >= the harmonic cutoff");
    BandedL M1, M2;
    moments_l(0.0L, static_cast<real>(t), static_cast<real>(alpha), static_cast<real>(omega),
              V, k_modes, m_trunc, M1, M2);
    Banded out(M1.modes(), M1.bandwidth());
    for (int k = -M1.modes(); k <= M1.modes(); ++k)
        for (int l = -M1.bandwidth(); l <= M1.bandwidth(); ++l)
            out.at(k, l) = {static_cast<double>(M1.at(k, l).real()),
                            static_cast<double>(M1.at(k, l).imag())};
    return out;
}

Banded PropagatorSeries::banded_at(double t) const {
    return b_matrix(t, alpha, omega, V, m_trunc, k_modes);
}

ModeVector dyson_literal(const PropagatorSeries& series, double t, int N,
                         const ModeVector& psi0) {
    if (N < 0) throw ParameterError("dyson_literal: N must be >= 0");
    if (psi0.K != series.k_modes)
        throw ParameterError("dyson_literal: psi0 extent does not match the series");
    BandedL M1, M2;
    moments_l(0.0L, static_cast<real>(t), static_cast<real>(series.alpha),
              static_cast<real>(series.omega), series.V, series.k_modes, series.m_trunc, M1, M2);
    VecL psi = promote(psi0);
    VecL term(psi.size()), tmp(psi.size());
    expm_apply(M1, N, psi, term, tmp);
    return demote(psi0.K, psi);
}

ModeVector dyson_corrected(double t, double alpha, double omega, const PeriodicPotential& V,
                           int k_modes, int substeps, int N, const ModeVector& psi0) {
    if (substeps < 1) throw ParameterError("dyson_corrected: substeps must be >= 1");
    if (psi0.K != k_modes) throw ParameterError("dyson_corrected: psi0 extent mismatch");
    VecL psi = promote(psi0);
    VecL term(psi.size()), tmp(psi.size());
    const real h = static_cast<real>(t) / static_cast<real>(substeps);
    for (int s = 0; s < substeps; ++s)
        cf4_step(s * h, (s + 1) * h, static_cast<real>(alpha), static_cast<real>(omega), V,
                 k_modes, -1, N, psi, term, tmp);
    return demote(psi0.K, psi);
}

ModeVector rk4_oracle(double t, double alpha, double omega, const PeriodicPotential& V,
                      int k_modes, int steps, const ModeVector& psi0) {
    if (steps < 1) throw ParameterError("rk4_oracle: steps must be >= 1");
    if (psi0.K != k_modes) throw ParameterError("rk4_oracle: psi0 extent mismatch");
    VecL psi = promote(psi0);
    rk4_steps(0.0L, static_cast<real>(t), steps, static_cast<real>(alpha),
              static_cast<real>(omega), V, k_modes, -1, psi);
    return demote(psi0.K, psi);
}

EvolveResult plane_wave_evolution(double omega, double alpha, double t,
                                  const std::vector<double>& x_grid,
                                  const PeriodicPotential& V, const Truncation& trunc,
                                  Engine engine) {
    const std::vector<double> tg{t};
    const auto snaps = evolve_snapshots(tg, static_cast<real>(alpha),
                                        static_cast<real>(alpha) * static_cast<real>(omega), V,
                                        trunc, engine, ModeVector::delta0(trunc.k_modes));
    EvolveResult r;
    r.modes = demote(trunc.k_modes, snaps[0]);
    std::vector<cplx> row(x_grid.size());
    assemble_row(snaps[0], static_cast<real>(t), static_cast<real>(alpha),
                 static_cast<real>(omega), x_grid, row.data());
    r.field.resize(x_grid.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        r.field[j] = {static_cast<double>(row[j].real()), static_cast<double>(row[j].imag())};
    return r;
}

FieldGrid field_grid(double omega, double alpha, const std::vector<double>& t_grid,
                     const std::vector<double>& x_grid, const PeriodicPotential& V,
                     const Truncation& trunc, Engine engine) {
    FieldGrid g;
    g.t_axis = t_grid;
    g.x_axis = x_grid;
    const auto vals = field_grid_l(static_cast<real>(omega), static_cast<real>(alpha), t_grid,
                                   x_grid, V, trunc, engine);
    g.values.resize(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        g.values[i] = {static_cast<double>(vals[i].real()), static_cast<double>(vals[i].imag())};
    return g;
}

FieldGrid supershift_superposition(double omega, int n_prime, double alpha,
                                   const std::vector<double>& t_grid,
                                   const std::vector<double>& x_grid,
                                   const PeriodicPotential& V, const Truncation& trunc,
                                   Engine engine) {
    if (n_prime < 1) throw ParameterError("supershift_superposition: N' must be >= 1");
    std::vector<cplx> acc(t_grid.size() * x_grid.size(), cplx{});
    // w_0 = ((1+omega)/2)^{N'}; w_{nu+1} = w_nu (N'-nu)/(nu+1) (1-omega)/(1+omega)
    const real wp = 0.5L * (1.0L + static_cast<real>(omega));
    const real wm = 0.5L * (1.0L - static_cast<real>(omega));
    real w = 1.0L;
    for (int i = 0; i < n_prime; ++i) w *= wp;
    const real ratio = wp == 0.0L ? 0.0L : wm / wp;
    for (int nu = 0; nu <= n_prime; ++nu) {
        const double omega_nu = 1.0 - 2.0 * static_cast<double>(nu) / n_prime;
        if (w != 0.0L) {
            const auto vals = field_grid_l(static_cast<real>(omega_nu), static_cast<real>(alpha),
                                           t_grid, x_grid, V, trunc, engine);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * vals[i];
        }
        if (nu < n_prime) {
            if (wp == 0.0L) {
                // omega = -1: only nu = N' contributes
                w = (nu + 1 == n_prime) ? 1.0L : 0.0L;
                for (int i = 0; nu + 1 == n_prime && i < n_prime; ++i) w *= wm;
            } else {
                w *= static_cast<real>(n_prime - nu) / static_cast<real>(nu + 1) * ratio;
            }
        }
    }
    FieldGrid g;
    g.t_axis = t_grid;
    g.x_axis = x_grid;
    g.values.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        g.values[i] = {static_cast<double>(acc[i].real()), static_cast<double>(acc[i].imag())};
    return g;
}

double pde_residual_max(const FieldGrid& grid, const PeriodicPotential& V, double alpha) {
    const std::size_t nt = grid.t_axis.size();
    const std::size_t nx = grid.x_axis.size();
    if (nt < 3 || nx < 3) throw ParameterError("pde_residual_max: need at least a 3x3 grid");
    const double dt = grid.t_axis[1] - grid.t_axis[0];
    const double dx = grid.x_axis[1] - grid.x_axis[0];
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < nt; ++i) {
        for (std::size_t j = 1; j + 1 < nx; ++j) {
            const std::complex<double> ft =
                (grid.at(i + 1, j) - grid.at(i - 1, j)) / (2.0 * dt);
            const std::complex<double> fxx =
                (grid.at(i, j + 1) - 2.0 * grid.at(i, j) + grid.at(i, j - 1)) / (dx * dx);
            const std::complex<double> r = std::complex<double>{0.0, 1.0} * ft + alpha * fxx -
                                           V.eval(grid.x_axis[j]) * grid.at(i, j);
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

} // namespace talbotsum::schrodinger
