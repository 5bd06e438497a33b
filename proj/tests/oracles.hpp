#ifndef TALBOTSUM_TESTS_ORACLES_HPP
#define TALBOTSUM_TESTS_ORACLES_HPP

// Independent numerical oracles used only by the test suite. They must stay
// independent of the implementation paths they gate: plain adaptive Simpson
// quadrature and nothing from the spectral shortcut code.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

namespace detail {

template <typename F>
auto simpson(const F& f, double a, double b) -> decltype(f(a)) {
    const double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

template <typename F, typename V>
V adapt(const F& f, double a, double b, V whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const V left = simpson(f, a, m);
    const V right = simpson(f, m, b);
    const V delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol) return left + right + delta / 15.0;
    return adapt(f, a, m, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// adaptive Simpson to absolute tolerance tol
template <typename F>
auto integrate(const F& f, double a, double b, double tol = 1e-10, int depth = 40)
    -> decltype(f(a)) {
    return detail::adapt(f, a, b, detail::simpson(f, a, b), tol, depth);
}

// integral of phi(x) e^{-i xi x} over [a, b]
template <typename F>
std::complex<double> fourier_integral(const F& phi, double xi, double a = -1.0, double b = 1.0,
                                      double tol = 1e-10) {
    return integrate(
        [&](double x) {
            return phi(x) * std::complex<double>{std::cos(xi * x), -std::sin(xi * x)};
        },
        a, b, tol);
}

} // namespace oracles

#endif
