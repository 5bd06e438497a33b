#include "talbotsum/talbot.hpp"

#include <cmath>

#include "big_real.hpp"
#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum::talbot {

void CombParams::validate() const {
    if (!(M > 0.0)) throw ParameterError("CombParams: M must be > 0");
    if (K < 1) throw ParameterError("CombParams: K must be >= 1");
}

RationalTime::RationalTime(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
    if (q < 1 || p < 0 || p >= q) throw ParameterError("RationalTime: need 0 <= p < q");
    if (gauss::gcd64(p, q) != 1)
        throw ParameterError("RationalTime: p and q must be coprime");
}

double RationalTime::value(double M) const {
    return kTwoPi / (M * M) * static_cast<double>(p) / static_cast<double>(q);
}

std::complex<double> comb_field(const CombParams& params, double t, double x,
                                const TestFunction& phi) {
    params.validate();
    KahanComplex<double> acc;
    for (int k = -params.K; k <= params.K; ++k) {
        const double Mk = params.M * k;
        const double theta = std::remainder(Mk * x - Mk * Mk * t, kTwoPi);
        acc.add(phi.transform(Mk) * cis(theta));
    }
    return acc.value();
}

double comb_tail_bound(int K, const TestFunction& phi) {
    if (K < 1) throw ParameterError("comb_tail_bound: K must be >= 1");
    return 2.0 * phi.second_derivative_l1() / static_cast<double>(K);
}

namespace {

// long double transforms for the low-noise spectral sums
long double transform_l(const TestFunction& phi, long double xi) {
    auto sinc = [](long double u) -> long double {
        if (u == 0.0L) return 1.0L;
        return std::sin(u) / u;
    };
    if (phi.kind() == TestFunction::Kind::bspline3) {
        const long double s = sinc(0.25L * xi);
        return 0.75L * s * s * s * s;
    }
    static const long double a[3] = {3.0L / 8.0L, 1.0L / 4.0L, 1.0L / 16.0L};
    long double sum = 0.0L;
    for (int m = -2; m <= 2; ++m) {
        sum += a[std::abs(m)] * 2.0L * sinc(xi - m * kPiL);
    }
    return sum;
}

} // namespace

gauss::GaussSumResult gauss_via_talbot(const gauss::GaussSumSpec& spec,
                                       const TestFunction& phi, std::int64_t K) {
    spec.validate();
    if (K < spec.q)
        throw ParameterError("gauss_via_talbot: need K >= q");
    const std::int64_t q = spec.q;
    const std::int64_t pm = mod_floor(-spec.p, q);
    KahanComplex<long double> acc;
    for (std::int64_t k = -K; k <= K; ++k) {
        const std::int64_t k2 = (k % q) * (k % q) % q;
        const std::int64_t e = mod_floor(pm * k2 + spec.kappa * mod_floor(k, q), q);
        const long double theta =
            2.0L * kPiL * static_cast<long double>(e) / static_cast<long double>(q);
        const long double xi =
            -2.0L * kPiL * static_cast<long double>(k) / static_cast<long double>(q);
        const long double v = transform_l(phi, xi);
        acc.add({v * std::cos(theta), v * std::sin(theta)});
    }
    const std::complex<long double> sum = acc.value();
    // |phihat(xi)| <= ||phi''||_1 / xi^2, so the |k| > K remainder is below
    // ||phi''||_1 q^2 / (2 pi^2 K)
    const double tail = phi.second_derivative_l1() * static_cast<double>(q) *
                        static_cast<double>(q) / (2.0 * kPi * kPi * static_cast<double>(K));
    return gauss::GaussSumResult::of(
        {static_cast<double>(sum.real()), static_cast<double>(sum.imag())},
        gauss::Method::talbot, tail);
}

namespace {

using detail::BigComplex;
using detail::BigReal;

// phihat(pi * j / N) at working precision. j is the integer numerator of
// X = (N - 2 nu)/N; sin(pi X) comes in via the caller's phase recurrence.
void transform_big(const TestFunction& phi, long j, long N, const BigReal& pi_,
                   const BigReal& sin_piX, const BigReal& sin_piX4, BigReal& out,
                   BigReal& t1, BigReal& t2) {
    if (phi.kind() == TestFunction::Kind::bspline3) {
        if (j == 0) {
            out.set(0.75);
            return;
        }
        // (3/4) (sin(u)/u)^4, u = pi j / (4N)
        t1.mul_si(pi_, j);
        t1.div_si(t1, 4 * N);
        t2.div(sin_piX4, t1);
        t1.mul(t2, t2);
        out.mul(t1, t1);
        t1.set(0.75);
        out.mul(out, t1);
        return;
    }
    static const double coef[3] = {3.0 / 8.0, 1.0 / 4.0, 1.0 / 16.0};
    for (int m = -2; m <= 2; ++m) {
        if (j == m * N) {  // xi = m pi exactly: only the m-th sinc survives
            out.set(2.0 * coef[std::abs(m)]);
            return;
        }
    }
    out.set(0.0);
    for (int m = -2; m <= 2; ++m) {
        // sin(pi X - m pi) / (pi (X - m)) = (-1)^m sin(pi X) * N / (pi (j - mN))
        t1.mul_si(pi_, j - m * N);
        t1.div_si(t1, N);
        t2.div(sin_piX, t1);
        const double c = 2.0 * coef[std::abs(m)] * ((m % 2 == 0) ? 1.0 : -1.0);
        BigReal cc(t1.prec());
        cc.set(c);
        t1.mul(t2, cc);
        out.add(out, t1);
    }
}

// One k-term of the recovery sum at the precision its cancellation needs.
std::complex<double> superosc_k_term(const gauss::GaussSumSpec& spec, const TestFunction& phi,
                                     long k, long N, long Np) {
    const long q = static_cast<long>(spec.q);
    const long p = static_cast<long>(spec.p);
    const long kappa = static_cast<long>(spec.kappa);

    const double abs_a = std::fabs(2.0 * k / static_cast<double>(q));
    double extra_bits = abs_a > 1.0 ? static_cast<double>(N) * std::log2(abs_a) : 0.0;
    if (extra_bits > (1 << 22)) {
        // the weight magnitude peaks near nu* = N |B| / (|A| + |B|)
        const long nu_peak = std::lround(N * (abs_a + 1.0) / (2.0 * abs_a));
        throw OverflowError("gauss_via_superosc: coefficient magnitude needs " +
                            std::to_string(static_cast<long>(extra_bits)) + " bits at (k, nu, nu')=(" +
                            std::to_string(k) + ", " + std::to_string(nu_peak) +
                            ", *); reduce N or K");
    }
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(96.0 + extra_bits);

    BigReal pi_(prec), t1(prec), t2(prec);
    pi_.set_pi();

    // weights: A = (q+2k)/(2q), B = (q-2k)/(2q); C = 1/2 - kp, D = 1/2 + kp
    BigReal A(prec), B(prec), Cr(prec), Dr(prec);
    A.set(static_cast<long>(q + 2 * k));
    A.div_si(A, 2 * q);
    B.set(static_cast<long>(q - 2 * k));
    B.div_si(B, 2 * q);
    Cr.set(1 - 2 * k * p);
    Cr.div_si(Cr, 2);
    Dr.set(1 + 2 * k * p);
    Dr.div_si(Dr, 2);

    const bool a_collapse_lo = (q + 2 * k == 0);  // A = 0: only nu = N survives
    const bool a_collapse_hi = (q - 2 * k == 0);  // B = 0: only nu = 0 survives

    // phase recurrence states at nu = 0 (X = 1):
    //   ph  = e^{i pi X (kappa + 1/2)}       step e^{-i pi (2 kappa + 1)/N}
    //   e1  = e^{i pi X}                     step e^{-2 i pi /N}
    //   e4  = e^{i pi X / 4}                 step e^{-i pi /(2N)}
    //   sh  = e^{-i pi X / N'}               step e^{ 2 i pi /(N N')}
    auto cis_big = [&](long num, long den, BigComplex& z) {
        BigReal th(prec);
        th.mul_si(pi_, num);
        th.div_si(th, den);
        z.set_cis(th);
    };
    BigComplex ph(prec), e1(prec), e4(prec), sh(prec);
    BigComplex ph_step(prec), e1_step(prec), e4_step(prec), sh_step(prec);
    cis_big(2 * kappa + 1, 2, ph);
    cis_big(-(2 * kappa + 1), N, ph_step);
    cis_big(1, 1, e1);
    cis_big(-2, N, e1_step);
    cis_big(1, 4, e4);
    cis_big(-1, 2 * N, e4_step);
    cis_big(-1, Np, sh);
    cis_big(2, N * Np, sh_step);

    BigReal w(prec), ratio(prec);
    bool have_ratio = false;
    long nu_only = -1;
    if (a_collapse_lo || a_collapse_hi) {
        nu_only = a_collapse_lo ? N : 0;
        w.set(1.0);  // the surviving weight is A^N or B^N with |.| = 1
    } else {
        mpfr_pow_si(w.raw(), A.raw(), N, MPFR_RNDN);  // w_0 = A^N
        ratio.div(B, A);
        have_ratio = true;
    }

    BigComplex acc(prec), inner(prec), term(prec), shifted(prec);
    acc.set_zero();
    BigReal fhat(prec), sin_piX(prec), sin_piX4(prec);

    for (long nu = 0; nu <= N; ++nu) {
        const bool active = (nu_only < 0) || (nu == nu_only);
        if (active) {
            const long j = N - 2 * nu;  // X = j / N
            // inner = (C + D e^{-i pi X / N'})^{N'}
            shifted.re.mul(Dr, sh.re);
            shifted.re.add(shifted.re, Cr);
            shifted.im.mul(Dr, sh.im);
            inner.pow_ui(shifted, static_cast<unsigned long>(Np), t1, t2);
            sin_piX.set(e1.im);
            sin_piX4.set(e4.im);
            transform_big(phi, j, N, pi_, sin_piX, sin_piX4, fhat, t1, t2);
            term = ph;
            term.mul(term, inner, t1, t2);
            term.scale(fhat);
            term.scale(w);
            acc.add(term);
        }
        if (nu < N) {
            ph.mul(ph, ph_step, t1, t2);
            e1.mul(e1, e1_step, t1, t2);
            e4.mul(e4, e4_step, t1, t2);
            sh.mul(sh, sh_step, t1, t2);
            if (have_ratio) {
                w.mul_si(w, N - nu);
                w.div_si(w, nu + 1);
                w.mul(w, ratio);
            }
        }
    }
    return {acc.re.to_double(), acc.im.to_double()};
}

} // namespace

gauss::GaussSumResult gauss_via_superosc(const gauss::GaussSumSpec& spec,
                                         const TestFunction& phi, int K, int N, int N_prime) {
    spec.validate();
    if (K < 0) throw ParameterError("gauss_via_superosc: K must be >= 0");
    if (N < 1 || N_prime < 1)
        throw ParameterError("gauss_via_superosc: N and N' must be >= 1");
    std::complex<double> total{0.0, 0.0};
    for (long k = -K; k <= K; ++k) {
        total += superosc_k_term(spec, phi, k, N, N_prime);
    }
    return gauss::GaussSumResult::of(total, gauss::Method::superosc);
}

CarpetRaster carpet_raster(const CombParams& params, double t_min, double t_max,
                           double x_min, double x_max, int rows, int cols,
                           const TestFunction& phi) {
    params.validate();
    if (rows < 2 || cols < 2) throw ParameterError("carpet_raster: rows, cols must be >= 2");
    if (!(t_max > t_min) || !(x_max > x_min))
        throw ParameterError("carpet_raster: degenerate ranges");

    CarpetRaster r;
    r.t_axis.resize(rows);
    r.x_axis.resize(cols);
    for (int i = 0; i < rows; ++i)
        r.t_axis[i] = t_min + (t_max - t_min) * i / (rows - 1);
    for (int j = 0; j < cols; ++j)
        r.x_axis[j] = x_min + (x_max - x_min) * j / (cols - 1);
    r.intensity.assign(static_cast<std::size_t>(rows) * cols, 0.0);

    const int K = params.K;
    std::vector<double> fhat(2 * K + 1);
    for (int k = -K; k <= K; ++k) fhat[k + K] = phi.transform(k * params.M);

    parallel_for(static_cast<std::size_t>(rows), [&](std::size_t lo, std::size_t hi) {
        std::vector<std::complex<double>> coef(2 * K + 1);
        for (std::size_t i = lo; i < hi; ++i) {
            const double t = r.t_axis[i];
            for (int k = -K; k <= K; ++k) {
                const double Mk = params.M * k;
                coef[k + K] = fhat[k + K] * cis(std::remainder(-Mk * Mk * t, kTwoPi));
            }
            for (std::size_t j = 0; j < r.x_axis.size(); ++j) {
                // Horner in z = e^{i M x}; the z^{-K} prefactor has unit modulus
                const std::complex<double> z = cis(std::remainder(params.M * r.x_axis[j], kTwoPi));
                std::complex<double> acc = coef[2 * K];
                for (int k = 2 * K - 1; k >= 0; --k) acc = acc * z + coef[k];
                std::complex<double> zK{1.0, 0.0};
                for (int n = 0; n < K; ++n) zK *= z;
                acc *= std::conj(zK);
                r.intensity[i * r.x_axis.size() + j] = std::norm(acc);
            }
        }
    });
    return r;
}

} // namespace talbotsum::talbot
