#ifndef TALBOTSUM_TEST_FUNCTION_HPP
#define TALBOTSUM_TEST_FUNCTION_HPP

#include <string>

namespace talbotsum::talbot {

// Compactly supported C^2 profile phi with phi(0) = 1, supp phi in [-1,1],
// and an analytic Fourier transform phihat(xi) = integral phi(x) e^{-i xi x} dx
// (real and even for both builtins).
class TestFunction {
public:
    enum class Kind { cos4, bspline3 };

    static TestFunction builtin(Kind kind);
    static TestFunction builtin(const std::string& name);  // "cos4" | "bspline3"

    Kind kind() const { return kind_; }
    const char* name() const;

    double eval(double x) const;
    double transform(double xi) const;
    double second_derivative_l1() const { return d2_l1_; }

private:
    explicit TestFunction(Kind k, double d2l1) : kind_(k), d2_l1_(d2l1) {}
    Kind kind_;
    double d2_l1_;
};

} // namespace talbotsum::talbot

#endif
