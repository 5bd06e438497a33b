#include "talbotsum/test_function.hpp"

#include <array>
#include <cmath>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum::talbot {

namespace {

// cos^4(pi x / 2) = sum_m a_m e^{i m pi x}, m in {0, +-1, +-2}
constexpr std::array<double, 3> kCos4Coef = {3.0 / 8.0, 1.0 / 4.0, 1.0 / 16.0};

// sin(u)/u with the removable singularity expanded for small |u|
double sinc_u(double u) {
    if (std::fabs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

// centered cubic B-spline on [-2,2], peak value 2/3
double bspline3_base(double x) {
    x = std::fabs(x);
    if (x >= 2.0) return 0.0;
    if (x <= 1.0) return 2.0 / 3.0 - x * x + 0.5 * x * x * x;
    const double d = 2.0 - x;
    return d * d * d / 6.0;
}

} // namespace

TestFunction TestFunction::builtin(Kind kind) {
    switch (kind) {
        case Kind::cos4:
            // ||phi''||_1 = 3 sqrt(3) pi / 2 (piecewise-trig integral; checked
            // against quadrature in the test suite)
            return TestFunction(kind, 1.5 * std::sqrt(3.0) * kPi);
        case Kind::bspline3:
            // ||phi''||_1 = 8 for the rescaled, renormalized spline
            return TestFunction(kind, 8.0);
    }
    throw ParameterError("TestFunction: unknown kind");
}

TestFunction TestFunction::builtin(const std::string& name) {
    if (name == "cos4") return builtin(Kind::cos4);
    if (name == "bspline3") return builtin(Kind::bspline3);
    throw ParameterError("TestFunction: unknown name '" + name + "'");
}

const char* TestFunction::name() const {
    return kind_ == Kind::cos4 ? "cos4" : "bspline3";
}

double TestFunction::eval(double x) const {
    if (std::fabs(x) >= 1.0) return 0.0;
    switch (kind_) {
        case Kind::cos4: {
            const double c = std::cos(0.5 * kPi * x);
            return c * c * c * c;
        }
        case Kind::bspline3:
            return 1.5 * bspline3_base(2.0 * x);
    }
    return 0.0;
}

double TestFunction::transform(double xi) const {
    switch (kind_) {
        case Kind::cos4: {
            double s = 0.0;
            for (int m = -2; m <= 2; ++m) {
                s += kCos4Coef[static_cast<std::size_t>(std::abs(m))] * 2.0 * sinc_u(xi - m * kPi);
            }
            return s;
        }
        case Kind::bspline3: {
            const double s = sinc_u(0.25 * xi);
            return 0.75 * s * s * s * s;
        }
    }
    return 0.0;
}

} // namespace talbotsum::talbot
