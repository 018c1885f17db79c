#pragma once

#include <cstdint>
#include <string>

#include "lfe/cutoff.hpp"

namespace lfe {

// How many Dirichlet-series terms to keep.  conductor_power takes
// ceil(C^{1/2+eps}) (floored at 10 so tiny conductors never produce empty
// sums); fixed_length takes hard_cap terms.  The smooth cutoff decays only
// polynomially on GL(1) fixtures, so oracle-accuracy runs use fixed_length
// with a few thousand terms.
enum class TruncationMode { conductor_power, fixed_length };

struct TruncationPolicy {
    double eps = 0.1;
    std::int64_t hard_cap = 8000;
    TruncationMode mode = TruncationMode::fixed_length;
};

std::int64_t truncation_length(double conductor, double eps);

enum class EvalMethod { exact_cutoff, explicit_kernel };

std::string method_name(EvalMethod m);

struct CentralValueResult {
    Complex value;
    EvalMethod method;
    std::int64_t terms_used;
    double error_estimate;
    struct {
        double C;
        double eta;
        Complex lambda;
        Complex kappa_lambda;
    } constants;
};

// Central value by the exact smoothed representation: two Dirichlet series
// weighted by the instance-dependent cutoff f, summed to the policy length.
// error_estimate = accumulated quadrature error + an empirical truncation
// proxy (1.5x the contribution of the last eighth of the terms).
CentralValueResult central_value_exact(const LFunctionInstance& inst, const KernelParams& kp,
                                       const ContourSpec& cs, const TruncationPolicy& tp);

// Central value by the explicit universal kernel g (no contour needed).
// Carries the a-priori error bound c * eta^{-1} * C^{1/4+eps}; the bound is
// reported, never absorbed into the value.  Worth using only when eta is
// large.
CentralValueResult central_value_explicit(const LFunctionInstance& inst,
                                          const KernelParams& kp, const TruncationPolicy& tp,
                                          double error_constant = 5.0);

// L(1/2 + it): twists the instance, reweights coefficients by n^{-it} inside
// the sums, and runs the exact evaluator.  t = 0 reproduces
// central_value_exact bit for bit.
CentralValueResult critical_line_value(const LFunctionInstance& inst, double t,
                                       const KernelParams& kp, const ContourSpec& cs,
                                       const TruncationPolicy& tp);

// |L(1/2)| against the convexity scale C^{1/4}.
struct ConvexityReport {
    double abs_value;
    double c_quarter;
    double ratio;
};

ConvexityReport convexity_report(const LFunctionInstance& inst, const KernelParams& kp,
                                 const ContourSpec& cs, const TruncationPolicy& tp);

}  // namespace lfe
