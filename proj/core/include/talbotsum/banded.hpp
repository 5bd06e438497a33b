#ifndef TALBOTSUM_BANDED_HPP
#define TALBOTSUM_BANDED_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "talbotsum/errors.hpp"

namespace talbotsum::schrodinger {

// Banded complex matrix over mode indices k in [-K, K] with bandwidth W:
// entry(k, k') is zero unless |k - k'| <= W. Stored by diagonals; the
// accessor uses the offset l = k - k' of the coupled mode.
template <typename R>
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(int K, int W) : K_(K), W_(W) {
        if (K < 0 || W < 0) throw ParameterError("BandedMatrix: negative extents");
        a_.assign(static_cast<std::size_t>(2 * K + 1) * (2 * W + 1), {});
    }

    int modes() const { return K_; }
    int bandwidth() const { return W_; }
    int dim() const { return 2 * K_ + 1; }

    // entry (k, k - l); l in [-W, W]
    std::complex<R>& at(int k, int l) { return a_[index(k, l)]; }
    const std::complex<R>& at(int k, int l) const { return a_[index(k, l)]; }

    // entry (row, col) by absolute mode indices; zero outside the band
    std::complex<R> entry(int row, int col) const {
        if (row < -K_ || row > K_ || col < -K_ || col > K_) return {};
        const int l = row - col;
        if (l < -W_ || l > W_) return {};
        return a_[index(row, l)];
    }

    // y = A x over modes; x indexed by k + K
    void apply(const std::vector<std::complex<R>>& x, std::vector<std::complex<R>>& y) const {
        y.assign(static_cast<std::size_t>(dim()), std::complex<R>{});
        for (int k = -K_; k <= K_; ++k) {
            std::complex<R> acc{};
            for (int l = -W_; l <= W_; ++l) {
                const int kp = k - l;
                if (kp < -K_ || kp > K_) continue;
                acc += a_[index(k, l)] * x[static_cast<std::size_t>(kp + K_)];
            }
            y[static_cast<std::size_t>(k + K_)] = acc;
        }
    }

    BandedMatrix& operator*=(std::complex<R> s) {
        for (auto& v : a_) v *= s;
        return *this;
    }
    BandedMatrix& axpy(std::complex<R> s, const BandedMatrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += s * o.a_[i];
        return *this;
    }

private:
    std::size_t index(int k, int l) const {
        return static_cast<std::size_t>(k + K_) * (2 * W_ + 1) + static_cast<std::size_t>(l + W_);
    }

    int K_ = 0;
    int W_ = 0;
    std::vector<std::complex<R>> a_;
};

using Banded = BandedMatrix<double>;

} // namespace talbotsum::schrodinger

#endif
