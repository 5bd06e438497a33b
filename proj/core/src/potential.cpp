#include "talbotsum/potential.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum {

PeriodicPotential::PeriodicPotential(std::vector<std::complex<double>> nonneg)
    : c_(std::move(nonneg)) {
    if (!c_.empty() && std::fabs(c_[0].imag()) > 1e-12)
        throw ParameterError("PeriodicPotential: c_0 must be real for a real potential");
    while (!c_.empty() && std::abs(c_.back()) == 0.0 && c_.size() > 1) c_.pop_back();
}

PeriodicPotential PeriodicPotential::parse(std::istream& in) {
    std::vector<std::complex<double>> c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long l;
        double re, im;
        if (!(ls >> l)) continue;  // blank line
        if (!(ls >> re >> im))
            throw IoError("potential file: malformed line " + std::to_string(lineno));
        std::string trailing;
        if (ls >> trailing)
            throw IoError("potential file: trailing tokens on line " + std::to_string(lineno));
        if (l < 0)
            throw IoError("potential file: negative harmonic index on line " +
                          std::to_string(lineno) + " (negatives are implied by conjugation)");
        if (static_cast<std::size_t>(l) >= c.size()) c.resize(static_cast<std::size_t>(l) + 1);
        c[static_cast<std::size_t>(l)] = {re, im};
    }
    if (c.empty()) throw IoError("potential file: no harmonics found");
    if (std::fabs(c[0].imag()) > 1e-12)
        throw IoError("potential file: c_0 must be real");
    return PeriodicPotential(std::move(c));
}

std::complex<double> PeriodicPotential::harmonic(int l) const {
    const int a = std::abs(l);
    if (a >= static_cast<int>(c_.size())) return {0.0, 0.0};
    return l >= 0 ? c_[static_cast<std::size_t>(a)] : std::conj(c_[static_cast<std::size_t>(a)]);
}

double PeriodicPotential::l1_norm() const {
    double s = 0.0;
    for (int l = -max_harmonic(); l <= max_harmonic(); ++l) s += std::abs(harmonic(l));
    return s;
}

double PeriodicPotential::eval(double x) const {
    std::complex<double> s{0.0, 0.0};
    for (int l = -max_harmonic(); l <= max_harmonic(); ++l)
        s += harmonic(l) * cis(l * x);
    return s.real();
}

PeriodicPotential PeriodicPotential::two_cos() {
    return PeriodicPotential({{0.0, 0.0}, {1.0, 0.0}});
}

} // namespace talbotsum
