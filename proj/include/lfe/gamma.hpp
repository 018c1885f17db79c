#pragma once

#include <complex>

#include "lfe/errors.hpp"

namespace lfe {

// Accuracy knobs for the log-gamma / digamma engine.  The defaults meet a
// 1e-13 relative target for Re z >= 1e-3 and |z| <= 1e6.
struct GammaAccuracy {
    double shift_threshold = 10.0;  // recurrence-shift Re z above this before the series
    int series_terms = 15;          // asymptotic-series length (<= 15)
    double target_rel_err = 1e-13;
};

// Principal-branch log Gamma on the right half-plane.  Continuous there,
// real on the positive real axis.  Throws DomainError for Re z <= 0; callers
// are contractually confined to Re z > 0, which keeps branch logic trivial
// (no reflection formula).
std::complex<double> log_gamma(std::complex<double> z, const GammaAccuracy& acc = {});

// Gamma'/Gamma on the right half-plane, 1e-12 relative for |z| <= 1e6.
std::complex<double> digamma(std::complex<double> z, const GammaAccuracy& acc = {});

// Numerical check of the uniform gamma-ratio growth bound
//   |Gamma(z+sigma)/Gamma(z)| <= K |z+sigma|^sigma   on Re z >= alpha > -sigma.
struct GammaRatioReport {
    double ratio_abs;
    double bound;
    bool ok;
};

GammaRatioReport gamma_ratio_check(std::complex<double> z, double sigma, double alpha,
                                   double harness_constant = 1.0);

}  // namespace lfe
