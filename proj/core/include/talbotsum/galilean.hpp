#ifndef TALBOTSUM_GALILEAN_HPP
#define TALBOTSUM_GALILEAN_HPP

#include <complex>
#include <iosfwd>
#include <variant>
#include <vector>

#include "talbotsum/potential.hpp"

namespace talbotsum::galilean {

// amp * exp(i (c0 + c1 t + c2 t^2)); closed under the phase factors the
// transforms below apply (all linear in t), conjugation, and products.
struct PhasePoly {
    std::complex<double> amp{1.0, 0.0};
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;

    std::complex<double> eval(double t) const;
    PhasePoly conjugated() const;
};

// amplitude trajectory tabulated on a time grid
struct SampledAmplitude {
    std::vector<double> t_grid;
    std::vector<std::complex<double>> values;

    std::complex<double> eval(double t) const;  // nearest-grid lookup, exact at nodes
    SampledAmplitude conjugated() const;
};

using Amplitude = std::variant<PhasePoly, SampledAmplitude>;

std::complex<double> amplitude_eval(const Amplitude& a, double t);

struct FieldTerm {
    double frequency = 0.0;
    Amplitude amplitude = PhasePoly{};
};

// Finite superposition sum_j a_j(t) e^{i omega_j x} with distinct frequencies.
struct PlaneWaveField {
    std::vector<FieldTerm> terms;

    std::complex<double> value(double t, double x) const;
    void validate() const;  // distinct frequencies
};

// phi(t,x) -> phi(t, x - t omega): term-wise a_j *= e^{-i omega_j omega t}.
PlaneWaveField shift_op(const PlaneWaveField& field, double omega);

// phi -> e^{i omega x} phi: every frequency shifts by omega.
PlaneWaveField modulation_op(const PlaneWaveField& field, double omega);

// shift . modulation . shift with the alpha-corrected orientation:
// (t,x) -> e^{i omega x} e^{-i alpha omega^2 t} field(t, x - 2 alpha t omega).
// For alpha = +1 this is exactly the shift/modulate/shift composition.
PlaneWaveField galilean_transform(const PlaneWaveField& field, double omega, int alpha);

// x -> gamma x on the spectral side: frequencies scale by gamma.
PlaneWaveField rescale_field(const PlaneWaveField& field, double gamma);

// V(x) with the moving-frame harmonic law c_l(t) = c_l e^{2 i l direction alpha omega t};
// alpha = 1, direction = +1 gives V(t, x + 2 omega t).
struct TwistedPotential {
    PeriodicPotential base;
    double omega = 0.0;
    int alpha = 1;
    int direction = 1;

    std::complex<double> harmonic_at(int l, double t) const;
};

TwistedPotential twist_potential(const PeriodicPotential& V, double omega, int alpha,
                                 int direction);

// CSV rows "omega_j,t,re(a_j),im(a_j)" over the given sample times.
void write_field_csv(std::ostream& out, const PlaneWaveField& field,
                     const std::vector<double>& times);
PlaneWaveField read_field_csv(std::istream& in);

} // namespace talbotsum::galilean

#endif
