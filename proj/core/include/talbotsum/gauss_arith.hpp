#ifndef TALBOTSUM_GAUSS_ARITH_HPP
#define TALBOTSUM_GAUSS_ARITH_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace talbotsum::gauss {

// Parameters of the generalized quadratic Gauss sum
//   G(-p, kappa, q) = sum_{l=0}^{q-1} exp(2 pi i (-p l^2 + kappa l) / q).
// Requires gcd(p, q) = 1 (any p when q = 1) and 0 <= kappa < q.
struct GaussSumSpec {
    std::int64_t p = 0;
    std::int64_t kappa = 0;
    std::int64_t q = 1;

    void validate() const;  // throws ParameterError
};

enum class Method { direct, closed_odd, parity_even, talbot, superosc };

const char* method_name(Method m);

struct GaussSumResult {
    std::complex<double> value;
    double modulus = 0.0;
    double phase = 0.0;  // arg(value) in (-pi, pi], meaningful when modulus > 0
    Method method = Method::direct;
    std::optional<double> error_estimate;

    static GaussSumResult of(std::complex<double> v, Method m,
                             std::optional<double> err = std::nullopt);
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// u in [0, q) with p*u == 1 (mod q); extended Euclid. Throws if gcd(p,q) != 1.
std::int64_t modular_inverse(std::int64_t p, std::int64_t q);

// Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1 and (a/n) = 0 iff gcd(a,n) > 1.
int jacobi_symbol(std::int64_t a, std::int64_t n);

// sum_{l=0}^{q-1} exp(2 pi i (a l^2 + b l) / q) with exact mod-q exponent
// reduction, so accuracy does not degrade with l^2.
std::complex<double> quadratic_exponential_sum(std::int64_t a, std::int64_t b, std::int64_t q);

std::complex<double> gauss_sum_direct(const GaussSumSpec& spec);

// Closed form of the normal sum G(a,0,c) = sum exp(2 pi i a l^2 / c),
// gcd(a,c) = 1, a,c >= 1. The zero branch is the classical c = 2 mod 4 case.
std::complex<double> normal_gauss_closed(std::int64_t a, std::int64_t c);

// G(ac,b,d) * G(ad,b,c); equals G(a,b,cd) when gcd(c,d) = 1.
std::complex<double> gauss_multiplicative(std::int64_t a, std::int64_t b,
                                          std::int64_t c, std::int64_t d);

// Odd-q closed form of G(-p,kappa,q). The kappa-dependent phase exponent is
// kappa^2 * (4p)^{-1} mod q (see docs/derivations.md for the square
// completion). Throws UnsupportedCase for even q.
std::complex<double> gauss_closed_odd_q(const GaussSumSpec& spec);

struct EvenQClassification {
    bool vanishes = false;
    double modulus = 0.0;              // sqrt(2q) when not vanishing
    std::optional<double> phase;       // measured from the direct sum
};

// Parity rule for q = 2q': the sum vanishes iff q' - kappa is odd; otherwise
// |G| = sqrt(2q) and the phase is computed numerically (it has no known
// closed form). Throws UnsupportedCase for odd q.
EvenQClassification gauss_even_q_classify(const GaussSumSpec& spec);

} // namespace talbotsum::gauss

#endif
