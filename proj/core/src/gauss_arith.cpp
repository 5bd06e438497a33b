#include "talbotsum/gauss_arith.hpp"

#include <cmath>

#include "talbotsum/errors.hpp"
#include "talbotsum/numeric.hpp"

namespace talbotsum::gauss {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void GaussSumSpec::validate() const {
    if (q < 1) throw ParameterError("GaussSumSpec: q must be >= 1");
    if (gcd64(p, q) != 1)
        throw ParameterError("GaussSumSpec: gcd(p, q) must be 1 (p=" + std::to_string(p) +
                             ", q=" + std::to_string(q) + ")");
    if (kappa < 0 || kappa >= q)
        throw ParameterError("GaussSumSpec: kappa must satisfy 0 <= kappa < q");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::closed_odd: return "closed_odd";
        case Method::parity_even: return "parity_even";
        case Method::talbot: return "talbot";
        case Method::superosc: return "superosc";
    }
    return "?";
}

GaussSumResult GaussSumResult::of(std::complex<double> v, Method m, std::optional<double> err) {
    GaussSumResult r;
    r.value = v;
    r.modulus = std::abs(v);
    r.phase = r.modulus > 0.0 ? std::arg(v) : 0.0;
    r.method = m;
    r.error_estimate = err;
    return r;
}

std::int64_t modular_inverse(std::int64_t p, std::int64_t q) {
    if (q < 1) throw ParameterError("modular_inverse: q must be >= 1");
    if (q == 1) return 0;
    std::int64_t a = mod_floor(p, q);
    if (gcd64(a, q) != 1)
        throw ParameterError("modular_inverse: no inverse, gcd(p, q) = " +
                             std::to_string(gcd64(a, q)));
    // extended Euclid on (a, q)
    std::int64_t r0 = a, r1 = q, s0 = 1, s1 = 0;
    while (r1) {
        std::int64_t k = r0 / r1;
        std::int64_t r2 = r0 - k * r1;
        std::int64_t s2 = s0 - k * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return mod_floor(s0, q);
}

int jacobi_symbol(std::int64_t a, std::int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw ParameterError("jacobi_symbol: n must be odd and positive");
    a = mod_floor(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

std::complex<double> quadratic_exponential_sum(std::int64_t a, std::int64_t b, std::int64_t q) {
    if (q < 1) throw ParameterError("quadratic_exponential_sum: q must be >= 1");
    const std::int64_t am = mod_floor(a, q);
    const std::int64_t bm = mod_floor(b, q);
    KahanComplex<double> acc;
    for (std::int64_t l = 0; l < q; ++l) {
        // (a l^2 + b l) mod q with every factor pre-reduced: keeps intermediates
        // below q^2 <= 10^12 and the trig argument in [0, 2 pi).
        std::int64_t l2 = (l * l) % q;
        std::int64_t e = (am * l2 + bm * l) % q;
        acc.add(cis(kTwoPi * static_cast<double>(e) / static_cast<double>(q)));
    }
    return acc.value();
}

std::complex<double> gauss_sum_direct(const GaussSumSpec& spec) {
    spec.validate();
    return quadratic_exponential_sum(-spec.p, spec.kappa, spec.q);
}

namespace {

// i^a for integer a
std::complex<double> i_power(std::int64_t a) {
    switch (mod_floor(a, 4)) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace

std::complex<double> normal_gauss_closed(std::int64_t a, std::int64_t c) {
    if (c < 1) throw ParameterError("normal_gauss_closed: c must be >= 1");
    if (a < 1) throw ParameterError("normal_gauss_closed: a must be >= 1");
    if (gcd64(a, c) != 1) throw ParameterError("normal_gauss_closed: gcd(a, c) must be 1");
    const double root = std::sqrt(static_cast<double>(c));
    switch (c % 4) {
        case 0:
            // gcd(a,c)=1 with 4 | c forces a odd, so (c/a) is defined
            return root * static_cast<double>(jacobi_symbol(c, a)) *
                   (std::complex<double>{1.0, 0.0} + i_power(a));
        case 1:
            return root * static_cast<double>(jacobi_symbol(a, c));
        case 2:
            return {0.0, 0.0};
        default:  // c = 3 mod 4
            return std::complex<double>{0.0, 1.0} * root *
                   static_cast<double>(jacobi_symbol(a, c));
    }
}

std::complex<double> gauss_multiplicative(std::int64_t a, std::int64_t b,
                                          std::int64_t c, std::int64_t d) {
    if (c < 1 || d < 1) throw ParameterError("gauss_multiplicative: c, d must be >= 1");
    if (gcd64(c, d) != 1) throw ParameterError("gauss_multiplicative: gcd(c, d) must be 1");
    return quadratic_exponential_sum(a * c, b, d) * quadratic_exponential_sum(a * d, b, c);
}

std::complex<double> gauss_closed_odd_q(const GaussSumSpec& spec) {
    spec.validate();
    if (spec.q % 2 == 0)
        throw UnsupportedCase("gauss_closed_odd_q: q is even; use gauss_even_q_classify");
    if (spec.q == 1) return {1.0, 0.0};
    const std::int64_t q = spec.q;
    // complete the square: -p l^2 + kappa l = -p (l - kappa (2p)^{-1})^2 + kappa^2 (4p)^{-1}
    const std::int64_t inv4p = modular_inverse(4 * mod_floor(spec.p, q), q);
    const std::int64_t e = ((spec.kappa * spec.kappa) % q) * inv4p % q;
    const std::complex<double> phase = cis(kTwoPi * static_cast<double>(e) / static_cast<double>(q));
    const double root = std::sqrt(static_cast<double>(q));
    const double js = static_cast<double>(jacobi_symbol(spec.p, q));
    const std::complex<double> eps = (q % 4 == 1) ? std::complex<double>{1.0, 0.0}
                                                  : std::complex<double>{0.0, -1.0};
    return phase * js * root * eps;
}

EvenQClassification gauss_even_q_classify(const GaussSumSpec& spec) {
    spec.validate();
    if (spec.q % 2 != 0)
        throw UnsupportedCase("gauss_even_q_classify: q is odd; use gauss_closed_odd_q");
    const std::int64_t qp = spec.q / 2;
    EvenQClassification r;
    r.vanishes = mod_floor(qp - spec.kappa, 2) == 1;
    if (!r.vanishes) {
        r.modulus = std::sqrt(2.0 * static_cast<double>(spec.q));
        r.phase = std::arg(gauss_sum_direct(spec));
    }
    return r;
}

} // namespace talbotsum::gauss
