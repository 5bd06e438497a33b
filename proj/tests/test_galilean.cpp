#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "talbotsum/errors.hpp"
#include "talbotsum/galilean.hpp"
#include "talbotsum/numeric.hpp"

using namespace talbotsum;
using namespace talbotsum::galilean;
using doctest::Approx;

namespace {

PlaneWaveField single(double freq, PhasePoly amp = {}) {
    PlaneWaveField f;
    f.terms.push_back({freq, amp});
    return f;
}

double amp_distance(const PlaneWaveField& a, const PlaneWaveField& b) {
    double worst = 0.0;
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t j = 0; j < a.terms.size(); ++j) {
        worst = std::max(worst, std::fabs(a.terms[j].frequency - b.terms[j].frequency));
        for (int i = 0; i <= 32; ++i) {
            const double t = i / 16.0;
            worst = std::max(worst, std::abs(amplitude_eval(a.terms[j].amplitude, t) -
                                             amplitude_eval(b.terms[j].amplitude, t)));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("field evaluation and conjugation") {
    PlaneWaveField f;
    f.terms.push_back({2.0, PhasePoly{{0.5, 0.5}, 0.0, 1.0, 0.0}});
    f.terms.push_back({-1.0, PhasePoly{{1.0, 0.0}, 0.3, 0.0, 0.0}});
    const double t = 0.6, x = 1.1;
    const auto direct = std::complex<double>{0.5, 0.5} * cis(1.0 * t) * cis(2.0 * x) +
                        cis(0.3) * cis(-1.0 * x);
    CHECK(std::abs(f.value(t, x) - direct) < 1e-15);
    CHECK_NOTHROW(f.validate());

    const auto& p = std::get<PhasePoly>(f.terms[0].amplitude);
    CHECK(std::abs(p.conjugated().eval(t) - std::conj(p.eval(t))) < 1e-15);
    SampledAmplitude s{{0.0, 1.0}, {{0.4, -0.3}, {0.1, 0.2}}};
    CHECK(s.conjugated().eval(1.0) == std::conj(s.eval(1.0)));

    PlaneWaveField dup;
    dup.terms.push_back({1.0, PhasePoly{}});
    dup.terms.push_back({1.0, PhasePoly{}});
    CHECK_THROWS_AS(dup.validate(), ParameterError);
}

TEST_CASE("shift operator") {
    auto f = single(1.0);
    CHECK(amp_distance(shift_op(f, 0.0), f) == 0.0);
    const auto s = shift_op(f, 2.0);
    CHECK(s.terms[0].frequency == 1.0);
    // phi(t, x - 2t): e^{i(x-2t)} has amplitude e^{-2it}
    CHECK(std::abs(amplitude_eval(s.terms[0].amplitude, 0.7) - cis(-2.0 * 0.7)) < 1e-15);
    CHECK(amp_distance(shift_op(s, -2.0), f) < 1e-15);
}

TEST_CASE("modulation operator") {
    auto f = single(0.0);
    CHECK(amp_distance(modulation_op(f, 0.0), f) == 0.0);
    const auto m = modulation_op(f, 3.0);
    CHECK(m.terms[0].frequency == 3.0);
    CHECK(amp_distance(modulation_op(m, -3.0), f) == 0.0);
}

TEST_CASE("shift and modulation commute up to a phase") {
    auto f = single(1.3, PhasePoly{{0.8, -0.2}, 0.4, 1.1, 0.0});
    const double w1 = 0.9, w2 = -1.7;
    const auto ms = modulation_op(shift_op(f, w1), w2);
    const auto sm = shift_op(modulation_op(f, w2), w1);
    // S_{w1} M_{w2} = e^{-i w1 w2 t} M_{w2} S_{w1}: exact on the phase slopes
    const auto& a = std::get<PhasePoly>(ms.terms[0].amplitude);
    const auto& b = std::get<PhasePoly>(sm.terms[0].amplitude);
    CHECK(b.c1 == Approx(a.c1 - w1 * w2).epsilon(1e-15));
    CHECK(b.c0 == Approx(a.c0));
    CHECK(b.amp == a.amp);
}

TEST_CASE("galilean transform of the constant field") {
    for (int alpha : {1, -1}) {
        const auto g = galilean_transform(single(0.0), 0.9, alpha);
        CHECK(g.terms[0].frequency == Approx(0.9));
        // amplitude e^{-i alpha w^2 t}: the free plane-wave phase law
        for (double t : {0.0, 0.4, 1.3})
            CHECK(std::abs(amplitude_eval(g.terms[0].amplitude, t) - cis(-alpha * 0.81 * t)) < 1e-15);
    }
    CHECK(amp_distance(galilean_transform(single(1.0), 0.0, 1), single(1.0)) == 0.0);
    CHECK_THROWS_AS(galilean_transform(single(1.0), 1.0, 2), ParameterError);
}

TEST_CASE("galilean round trip and alpha = +1 composition") {
    PlaneWaveField f;
    f.terms.push_back({1.0, PhasePoly{{1.0, 0.0}, 0.0, -0.3, 0.0}});
    f.terms.push_back({-2.2, PhasePoly{{0.1, 0.7}, 0.2, 0.9, 0.0}});
    for (int alpha : {1, -1}) {
        const auto rt = galilean_transform(galilean_transform(f, 1.7, alpha), -1.7, alpha);
        CHECK(amp_distance(rt, f) < 1e-12);
    }
    // alpha = +1 agrees with shift .. modulation .. shift
    const auto direct = galilean_transform(f, 0.8, 1);
    const auto composed = shift_op(modulation_op(shift_op(f, 0.8), 0.8), 0.8);
    CHECK(amp_distance(direct, composed) < 1e-14);
}

TEST_CASE("free-solution mapping under the transform") {
    // amplitudes obeying a_j(t) = a_j(0) e^{-i alpha w_j^2 t} keep the law at
    // the shifted frequency; checked by central differences on sampled data
    const int alpha = 1;
    const double w = 0.4;
    const double freqs[] = {-0.9, -0.3, 0.2, 0.8};
    PlaneWaveField f;
    std::vector<double> grid(64);
    for (int i = 0; i < 64; ++i) grid[i] = 1e-3 * i;
    for (double wj : freqs) {
        SampledAmplitude s;
        s.t_grid = grid;
        for (double t : grid) s.values.push_back(cis(-alpha * wj * wj * t));
        f.terms.push_back({wj, s});
    }
    const auto g = galilean_transform(f, w, alpha);
    double worst = 0.0;
    for (const auto& term : g.terms) {
        const auto& s = std::get<SampledAmplitude>(term.amplitude);
        for (std::size_t i = 1; i + 1 < s.values.size(); ++i) {
            const auto deriv = (s.values[i + 1] - s.values[i - 1]) / (2e-3);
            const auto law = std::complex<double>{0.0, -alpha * term.frequency * term.frequency} *
                             s.values[i];
            worst = std::max(worst, std::abs(deriv - law));
        }
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("rescale") {
    auto f = single(1.0);
    CHECK(amp_distance(rescale_field(f, 1.0), f) == 0.0);
    CHECK(rescale_field(f, kTwoPi).terms[0].frequency == Approx(kTwoPi));
    CHECK(amp_distance(rescale_field(rescale_field(f, 3.0), 1.0 / 3.0), f) < 1e-15);
    CHECK_THROWS_AS(rescale_field(f, 0.0), ParameterError);
    CHECK_THROWS_AS(rescale_field(f, -1.0), ParameterError);
}

TEST_CASE("twisted potential harmonic law") {
    const auto V = PeriodicPotential::two_cos();
    const auto tw = twist_potential(V, 1.0, 1, 1);
    for (double t : {0.0, 0.3, 1.1}) {
        CHECK(std::abs(tw.harmonic_at(1, t) - cis(2.0 * t)) < 1e-15);
        CHECK(std::abs(tw.harmonic_at(-1, t) - cis(-2.0 * t)) < 1e-15);
        CHECK(std::abs(tw.harmonic_at(2, t)) == 0.0);
    }
    const auto still = twist_potential(V, 0.0, 1, 1);
    CHECK(std::abs(still.harmonic_at(1, 5.0) - V.harmonic(1)) == 0.0);
    // twisting by -omega undoes the phase law
    const auto back = twist_potential(V, -1.0, 1, 1);
    for (double t : {0.2, 0.9})
        CHECK(std::abs(tw.harmonic_at(1, t) * back.harmonic_at(1, t) / V.harmonic(1) -
                       V.harmonic(1)) < 1e-15);
    CHECK_THROWS_AS(twist_potential(V, 1.0, 0, 1), ParameterError);
}

TEST_CASE("field csv round trip") {
    PlaneWaveField f;
    SampledAmplitude s;
    s.t_grid = {0.0, 0.5, 1.0};
    s.values = {{1.0, 0.0}, {0.4, -0.3}, {-0.2, 0.9}};
    f.terms.push_back({1.5, s});
    f.terms.push_back({-0.5, SampledAmplitude{{0.0, 0.5, 1.0}, {{0, 1}, {1, 0}, {0, -1}}}});
    std::ostringstream out;
    write_field_csv(out, f, {0.0, 0.5, 1.0});
    std::istringstream in(out.str());
    const auto back = read_field_csv(in);
    REQUIRE(back.terms.size() == 2);
    CHECK(back.terms[0].frequency == -0.5);  // sorted by frequency on read
    CHECK(std::abs(amplitude_eval(back.terms[1].amplitude, 0.5) -
                   std::complex<double>{0.4, -0.3}) < 1e-12);
    std::istringstream bad("omega_j,t,re,im\n1.0,0.0,0.5\n");
    CHECK_THROWS_AS(read_field_csv(bad), IoError);
}
