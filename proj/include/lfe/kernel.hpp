#pragma once

#include <cmath>
#include <complex>

#include "lfe/errors.hpp"

namespace lfe {

// Gaussian Mellin pair.  The Mellin-side kernel is exp(a s^2): entire, equal
// to 1 at s = 0, symmetric in both axes, and super-polynomially decaying on
// every vertical line.  Its multiplicative-side partner is the log-Gaussian
// bump below, and the cumulative cutoff g obeys g(x) + g(1/x) = 1 with
// -x g'(x) equal to the bump.  The width parameter exists so tests can verify
// that final central values are kernel-independent.
struct KernelParams {
    double a = 0.25;

    void validate() const {
        if (!(a > 0.0)) throw ValidationError("KernelParams: width must be positive");
    }
};

inline std::complex<double> mellin_kernel(std::complex<double> s, const KernelParams& p) {
    return std::exp(p.a * s * s);
}

// h(x) = exp(-(log x)^2 / 4a) / (2 sqrt(a pi)); unit mass against dx/x,
// h(1/x) = h(x).
inline double log_gaussian_bump(double x, const KernelParams& p) {
    if (!(x > 0.0)) throw DomainError("log_gaussian_bump: x must be positive");
    const double u = std::log(x);
    return std::exp(-u * u / (4.0 * p.a)) / (2.0 * std::sqrt(p.a * M_PI));
}

inline double erfc_real(double u) {
    return std::erfc(u);
}

// g(x) = erfc(log x / 2 sqrt a) / 2; smooth, decreasing, g(1) = 1/2.
inline double smooth_cutoff(double x, const KernelParams& p) {
    if (!(x > 0.0)) throw DomainError("smooth_cutoff: x must be positive");
    return 0.5 * erfc_real(std::log(x) / (2.0 * std::sqrt(p.a)));
}

}  // namespace lfe
