#ifndef TALBOTSUM_NUMERIC_HPP
#define TALBOTSUM_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

namespace talbotsum {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;
inline constexpr long double kPiL = std::numbers::pi_v<long double>;

template <typename T>
std::complex<T> cis(T theta) {
    return {std::cos(theta), std::sin(theta)};
}

// Compensated (Kahan) accumulator.
template <typename T>
struct Kahan {
    T sum{};
    T carry{};
    void add(T x) {
        T y = x - carry;
        T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

template <typename T>
struct KahanComplex {
    Kahan<T> re, im;
    void add(std::complex<T> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<T> value() const { return {re.sum, im.sum}; }
};

// floor-convention remainder: result in [0, m) for m > 0
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Thread count: TALBOTSUM_THREADS env var, else hardware concurrency.
unsigned thread_count();

// Static slicing of [0, n) over thread_count() workers.
// Determinism of reductions is only guaranteed at thread count 1.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

} // namespace talbotsum

#endif
