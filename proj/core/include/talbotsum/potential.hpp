#ifndef TALBOTSUM_POTENTIAL_HPP
#define TALBOTSUM_POTENTIAL_HPP

#include <complex>
#include <iosfwd>
#include <vector>

namespace talbotsum {

// Real 2 pi-periodic potential V(x) = sum_l c_l e^{i l x}, stored as the
// harmonics c_l for l >= 0; c_{-l} = conj(c_l) is implied. c_0 must be real.
class PeriodicPotential {
public:
    PeriodicPotential() = default;  // V = 0
    explicit PeriodicPotential(std::vector<std::complex<double>> nonneg_harmonics);

    // Parses lines "l re(c_l) im(c_l)" with l >= 0; '#' starts a comment.
    static PeriodicPotential parse(std::istream& in);

    int max_harmonic() const { return static_cast<int>(c_.size()) - 1; }
    std::complex<double> harmonic(int l) const;  // any l, conjugate symmetry
    double l1_norm() const;                      // sum over all l of |c_l|
    double eval(double x) const;

    // V = 2 cos(x): c_1 = 1
    static PeriodicPotential two_cos();

private:
    std::vector<std::complex<double>> c_;  // c_[l] for l = 0..M_V; empty = zero
};

} // namespace talbotsum

#endif
