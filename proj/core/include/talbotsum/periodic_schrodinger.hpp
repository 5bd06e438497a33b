#ifndef TALBOTSUM_PERIODIC_SCHRODINGER_HPP
#define TALBOTSUM_PERIODIC_SCHRODINGER_HPP

#include <complex>
#include <vector>

#include "talbotsum/banded.hpp"
#include "talbotsum/potential.hpp"

namespace talbotsum::schrodinger {

// Fourier-mode amplitudes psi_k, k in [-K, K].
struct ModeVector {
    int K = 0;
    std::vector<std::complex<double>> v;

    static ModeVector delta0(int K);
    std::complex<double>& at(int k) { return v[static_cast<std::size_t>(k + K)]; }
    std::complex<double> at(int k) const { return v[static_cast<std::size_t>(k + K)]; }
    double norm2() const;
};

enum class Engine { literal, corrected, oracle };

struct Truncation {
    int k_modes = 16;
    int m_trunc = -1;      // harmonic cutoff; -1 means all harmonics of V
    int order = 12;        // exponential series order N
    int substeps = 64;     // corrected engine
    int oracle_steps = 4096;
};

// A_alpha^omega(t): entry (k, k-l) = c_l e^{2 i omega l t} e^{i alpha l (2k-l) t},
// |l| <= M_V. Hermitian for real potentials at every t. omega here is the
// twist frequency of the time-modulated harmonic law.
Banded coupling_matrix(double t, double alpha, double omega, const PeriodicPotential& V,
                       int k_modes);

// B_alpha^{omega,M}(t) = integral_0^t of the |l| <= M_trunc part of A:
// entry (k, k-l) = c_l (e^{i theta t} - 1)/(i theta), theta = 2 omega l + alpha l (2k-l);
// the resonant |theta| < 1e-9 entry takes the limit value c_l t.
Banded b_matrix(double t, double alpha, double omega, const PeriodicPotential& V,
                int m_trunc, int k_modes);

// The series machinery of the truncated propagator: B(t) with its order and
// a tag for which composition consumes it.
struct PropagatorSeries {
    enum class Mode { paper_literal, corrected_dyson };

    double alpha = 1.0;
    double omega = 0.0;  // twist frequency
    PeriodicPotential V;
    int m_trunc = -1;
    int k_modes = 16;
    int order = 12;
    Mode mode = Mode::paper_literal;

    Banded banded_at(double t) const;
};

// (Id + sum_{n=1}^N B(t)^n / n!) psi0 — the unordered series exactly as the
// truncation family defines it: no -i, no time ordering. Kept as a
// documented-divergence reference, not as a propagator.
ModeVector dyson_literal(const PropagatorSeries& series, double t, int N,
                         const ModeVector& psi0);

// Time-ordered propagator approximation: per substep the commutator-free
// 4th-order pair exp(-i(M1/2 + 2 M2/h)) exp(-i(M1/2 - 2 M2/h)) built from the
// exact moments M1 = int A, M2 = int (tau - t_mid) A over the substep, each
// exponential truncated at series order N. Converges to the rk4 oracle as
// substeps grows; for a commuting family it collapses to exp(-i int A).
ModeVector dyson_corrected(double t, double alpha, double omega, const PeriodicPotential& V,
                           int k_modes, int substeps, int N, const ModeVector& psi0);

// Classical RK4 on Psi' = -i A(tau) Psi; the module's reference truth.
ModeVector rk4_oracle(double t, double alpha, double omega, const PeriodicPotential& V,
                      int k_modes, int steps, const ModeVector& psi0);

struct EvolveResult {
    ModeVector modes;                          // psi(t) in the twisted frame
    std::vector<std::complex<double>> field;   // samples over the x grid
    double oracle_deviation = 0.0;             // filled by callers that compare
};

// Evolution of e^{i omega x} under V: solves the mode system with the
// twisted harmonic law c_l e^{2 i l alpha omega t} and assembles
//   sum_k e^{-i alpha k^2 t} psi_k(t) e^{-i alpha omega^2 t} e^{-2 i alpha k omega t}
//        e^{i (k + omega) x}.
EvolveResult plane_wave_evolution(double omega, double alpha, double t,
                                  const std::vector<double>& x_grid,
                                  const PeriodicPotential& V, const Truncation& trunc,
                                  Engine engine);

struct FieldGrid {
    std::vector<double> t_axis;
    std::vector<double> x_axis;
    std::vector<std::complex<double>> values;  // row-major [t][x]

    std::complex<double> at(std::size_t i, std::size_t j) const {
        return values[i * x_axis.size() + j];
    }
};

// Field on a full (t, x) grid (snapshots along one trajectory).
FieldGrid field_grid(double omega, double alpha, const std::vector<double>& t_grid,
                     const std::vector<double>& x_grid, const PeriodicPotential& V,
                     const Truncation& trunc, Engine engine);

// sum_nu binom(N',nu) ((1+omega)/2)^(N'-nu) ((1-omega)/2)^nu phi^{alpha,1-2nu/N'}
// accumulated in extended precision (the weights reach ((1+|omega|)/2 +
// (|omega|-1)/2)^{N'} in magnitude and amplify trajectory round-off).
FieldGrid supershift_superposition(double omega, int n_prime, double alpha,
                                   const std::vector<double>& t_grid,
                                   const std::vector<double>& x_grid,
                                   const PeriodicPotential& V, const Truncation& trunc,
                                   Engine engine = Engine::corrected);

// max over interior grid points of |i phi_t + alpha phi_xx - V phi| with
// second-order centered stencils; requires uniform axes.
double pde_residual_max(const FieldGrid& grid, const PeriodicPotential& V, double alpha);

} // namespace talbotsum::schrodinger

#endif
