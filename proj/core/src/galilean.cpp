#include "talbotsum/galilean.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum::galilean {

std::complex<double> PhasePoly::eval(double t) const {
    return amp * cis(c0 + c1 * t + c2 * t * t);
}

PhasePoly PhasePoly::conjugated() const {
    return {std::conj(amp), -c0, -c1, -c2};
}

std::complex<double> SampledAmplitude::eval(double t) const {
    if (t_grid.empty()) throw ParameterError("SampledAmplitude: empty grid");
    auto it = std::lower_bound(t_grid.begin(), t_grid.end(), t);
    std::size_t i = static_cast<std::size_t>(it - t_grid.begin());
    if (i == t_grid.size()) i = t_grid.size() - 1;
    if (i > 0 && std::fabs(t_grid[i - 1] - t) < std::fabs(t_grid[i] - t)) --i;
    return values[i];
}

SampledAmplitude SampledAmplitude::conjugated() const {
    SampledAmplitude r{t_grid, values};
    for (auto& v : r.values) v = std::conj(v);
    return r;
}

std::complex<double> amplitude_eval(const Amplitude& a, double t) {
    return std::visit([t](const auto& rep) { return rep.eval(t); }, a);
}

std::complex<double> PlaneWaveField::value(double t, double x) const {
    KahanComplex<double> acc;
    for (const auto& term : terms)
        acc.add(amplitude_eval(term.amplitude, t) * cis(term.frequency * x));
    return acc.value();
}

void PlaneWaveField::validate() const {
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].frequency == terms[j].frequency)
                throw ParameterError("PlaneWaveField: duplicate frequency");
}

namespace {

// term-wise multiplication by e^{i (c1 t)} phase factors
Amplitude apply_linear_phase(const Amplitude& a, double rate) {
    if (std::holds_alternative<PhasePoly>(a)) {
        PhasePoly p = std::get<PhasePoly>(a);
        p.c1 += rate;
        return p;
    }
    SampledAmplitude s = std::get<SampledAmplitude>(a);
    for (std::size_t i = 0; i < s.values.size(); ++i)
        s.values[i] *= cis(rate * s.t_grid[i]);
    return s;
}

} // namespace

PlaneWaveField shift_op(const PlaneWaveField& field, double omega) {
    PlaneWaveField out = field;
    for (auto& term : out.terms)
        term.amplitude = apply_linear_phase(term.amplitude, -term.frequency * omega);
    return out;
}

PlaneWaveField modulation_op(const PlaneWaveField& field, double omega) {
    PlaneWaveField out = field;
    for (auto& term : out.terms) term.frequency += omega;
    return out;
}

PlaneWaveField galilean_transform(const PlaneWaveField& field, double omega, int alpha) {
    if (alpha != 1 && alpha != -1) throw ParameterError("galilean_transform: alpha must be +-1");
    PlaneWaveField out = field;
    const double a = static_cast<double>(alpha);
    for (auto& term : out.terms) {
        // e^{-i alpha omega^2 t} e^{-2 i alpha omega_j omega t}, then omega_j += omega
        term.amplitude =
            apply_linear_phase(term.amplitude, -a * omega * omega - 2.0 * a * term.frequency * omega);
        term.frequency += omega;
    }
    return out;
}

PlaneWaveField rescale_field(const PlaneWaveField& field, double gamma) {
    if (!(gamma > 0.0)) throw ParameterError("rescale_field: gamma must be > 0");
    PlaneWaveField out = field;
    for (auto& term : out.terms) term.frequency *= gamma;
    return out;
}

std::complex<double> TwistedPotential::harmonic_at(int l, double t) const {
    return base.harmonic(l) *
           cis(2.0 * l * direction * alpha * omega * t);
}

TwistedPotential twist_potential(const PeriodicPotential& V, double omega, int alpha,
                                 int direction) {
    if (alpha != 1 && alpha != -1) throw ParameterError("twist_potential: alpha must be +-1");
    if (direction != 1 && direction != -1)
        throw ParameterError("twist_potential: direction must be +-1");
    return TwistedPotential{V, omega, alpha, direction};
}

void write_field_csv(std::ostream& out, const PlaneWaveField& field,
                     const std::vector<double>& times) {
    out << "omega_j,t,re,im\n";
    out.precision(17);
    for (const auto& term : field.terms) {
        for (double t : times) {
            const auto a = amplitude_eval(term.amplitude, t);
            out << term.frequency << ',' << t << ',' << a.real() << ',' << a.imag() << '\n';
        }
    }
}

PlaneWaveField read_field_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("field csv: empty stream");
    std::map<double, SampledAmplitude> by_freq;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        double w, t, re, im;
        char c1, c2, c3;
        if (!(ls >> w >> c1 >> t >> c2 >> re >> c3 >> im) || c1 != ',' || c2 != ',' || c3 != ',')
            throw IoError("field csv: malformed line " + std::to_string(lineno));
        auto& s = by_freq[w];
        s.t_grid.push_back(t);
        s.values.emplace_back(re, im);
    }
    PlaneWaveField f;
    for (auto& [w, s] : by_freq) f.terms.push_back({w, std::move(s)});
    return f;
}

} // namespace talbotsum::galilean
