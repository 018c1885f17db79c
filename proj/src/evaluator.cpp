#include "lfe/evaluator.hpp"

#include <cmath>
#include <functional>

#include "lfe/summation.hpp"

namespace lfe {

namespace {

std::int64_t resolve_terms(const LFunctionInstance& inst, double conductor,
                           const TruncationPolicy& tp) {
    std::int64_t M;
    if (tp.mode == TruncationMode::conductor_power) {
        M = truncation_length(conductor, tp.eps);
    } else {
        if (tp.hard_cap < 1)
            throw ValidationError("TruncationPolicy: fixed_length needs hard_cap >= 1");
        M = tp.hard_cap;
    }
    if (M > inst.coefficients->declared_length())
        throw CoefficientExhaustion(
            "truncation needs " + std::to_string(M) + " coefficients, instance '" +
            inst.label + "' declares " +
            std::to_string(inst.coefficients->declared_length()));
    return M;
}

Complex unit_phase_product(const LFunctionInstance& inst, const Complex& lambda) {
    const Complex kl = inst.root_number * lambda;
    if (std::abs(std::abs(kl) - 1.0) > 1e-12)
        throw NumericalError("kappa*lambda lost unit modulus: |kl| = " +
                             std::to_string(std::abs(kl)));
    return kl;
}

// Shared two-series accumulation.  weight(n) supplies the smooth factor
// (cutoff value or explicit kernel), already paired with its conjugate
// convention; coeff(n) supplies a_n with any critical-line reweighting.
struct SeriesResult {
    Complex value;
    double tail_proxy;
};

SeriesResult assemble(std::int64_t M, const std::function<Complex(std::int64_t)>& coeff,
                      const std::function<Complex(std::int64_t)>& weight,
                      const std::function<Complex(std::int64_t)>& dual_weight,
                      const Complex& kappa_lambda) {
    std::vector<Complex> terms(static_cast<std::size_t>(M));
    for (std::int64_t n = 1; n <= M; ++n) {
        const double rsqrt = 1.0 / std::sqrt(static_cast<double>(n));
        const Complex a = coeff(n);
        terms[static_cast<std::size_t>(n - 1)] =
            a * rsqrt * weight(n) + kappa_lambda * std::conj(a) * rsqrt * dual_weight(n);
    }
    const Complex value = pairwise_sum(std::span<const Complex>(terms));
    const std::int64_t block = std::max<std::int64_t>(1, M / 8);
    const Complex block_sum = pairwise_sum(
        std::span<const Complex>(terms).subspan(static_cast<std::size_t>(M - block)));
    return {value, 1.5 * std::abs(block_sum)};
}

}  // namespace

std::int64_t truncation_length(double conductor, double eps) {
    if (!(eps > 0.0)) throw ValidationError("truncation_length: eps must be positive");
    if (!(conductor > 0.0))
        throw ValidationError("truncation_length: conductor must be positive");
    const double raw = std::pow(conductor, 0.5 + eps);
    const auto len = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
    return std::max<std::int64_t>(10, len);
}

std::string method_name(EvalMethod m) {
    return m == EvalMethod::exact_cutoff ? "exact" : "explicit";
}

CentralValueResult central_value_exact(const LFunctionInstance& inst, const KernelParams& kp,
                                       const ContourSpec& cs, const TruncationPolicy& tp) {
    validate_instance(inst);
    const double C = analytic_conductor(inst);
    const double rtC = std::sqrt(C);
    const std::int64_t M = resolve_terms(inst, C, tp);
    const Complex lambda = lambda_phase(inst);
    const Complex kl = unit_phase_product(inst, lambda);

    const CutoffFunction cutoff(inst, kp, cs);
    std::vector<Complex> fvals(static_cast<std::size_t>(M));
    double quad_acc = 0.0;
    for (std::int64_t n = 1; n <= M; ++n) {
        const CutoffEvaluation fe = cutoff.value(static_cast<double>(n) / rtC);
        fvals[static_cast<std::size_t>(n - 1)] = fe.value;
        quad_acc += 2.0 * fe.quad_error_estimate / std::sqrt(static_cast<double>(n)) *
                    std::abs(inst.coefficients->at(n));
    }
    const SeriesResult series = assemble(
        M, [&](std::int64_t n) { return inst.coefficients->at(n); },
        [&](std::int64_t n) { return fvals[static_cast<std::size_t>(n - 1)]; },
        [&](std::int64_t n) { return std::conj(fvals[static_cast<std::size_t>(n - 1)]); }, kl);

    CentralValueResult result;
    result.value = series.value;
    result.method = EvalMethod::exact_cutoff;
    result.terms_used = M;
    result.error_estimate = quad_acc + series.tail_proxy;
    result.constants = {C, eta_min(inst), lambda, kl};
    return result;
}

CentralValueResult central_value_explicit(const LFunctionInstance& inst,
                                          const KernelParams& kp, const TruncationPolicy& tp,
                                          double error_constant) {
    validate_instance(inst);
    kp.validate();
    const double C = analytic_conductor(inst);
    const double rtC = std::sqrt(C);
    const double eta = eta_min(inst);
    const std::int64_t M = resolve_terms(inst, C, tp);
    const Complex lambda = lambda_phase(inst);
    const Complex kl = unit_phase_product(inst, lambda);

    std::vector<double> gvals(static_cast<std::size_t>(M));
    for (std::int64_t n = 1; n <= M; ++n)
        gvals[static_cast<std::size_t>(n - 1)] =
            smooth_cutoff(static_cast<double>(n) / rtC, kp);
    const SeriesResult series = assemble(
        M, [&](std::int64_t n) { return inst.coefficients->at(n); },
        [&](std::int64_t n) { return Complex{gvals[static_cast<std::size_t>(n - 1)], 0.0}; },
        [&](std::int64_t n) { return Complex{gvals[static_cast<std::size_t>(n - 1)], 0.0}; },
        kl);

    CentralValueResult result;
    result.value = series.value;
    result.method = EvalMethod::explicit_kernel;
    result.terms_used = M;
    result.error_estimate = error_constant / eta * std::pow(C, 0.25 + tp.eps);
    result.constants = {C, eta, lambda, kl};
    return result;
}

CentralValueResult critical_line_value(const LFunctionInstance& inst, double t,
                                       const KernelParams& kp, const ContourSpec& cs,
                                       const TruncationPolicy& tp) {
    if (t == 0.0) return central_value_exact(inst, kp, cs, tp);
    const LFunctionInstance twisted = twist(inst, t);
    const double C = analytic_conductor(twisted);
    const double rtC = std::sqrt(C);
    const std::int64_t M = resolve_terms(twisted, C, tp);
    const Complex lambda = lambda_phase(twisted);
    const Complex kl = unit_phase_product(twisted, lambda);

    const CutoffFunction cutoff(twisted, kp, cs);
    std::vector<Complex> fvals(static_cast<std::size_t>(M));
    double quad_acc = 0.0;
    for (std::int64_t n = 1; n <= M; ++n) {
        const CutoffEvaluation fe = cutoff.value(static_cast<double>(n) / rtC);
        fvals[static_cast<std::size_t>(n - 1)] = fe.value;
        quad_acc += 2.0 * fe.quad_error_estimate / std::sqrt(static_cast<double>(n)) *
                    std::abs(inst.coefficients->at(n));
    }
    const SeriesResult series = assemble(
        M,
        [&](std::int64_t n) {
            // twist reweighting applied here; the coefficient data stays pure
            return inst.coefficients->at(n) *
                   std::polar(1.0, -t * std::log(static_cast<double>(n)));
        },
        [&](std::int64_t n) { return fvals[static_cast<std::size_t>(n - 1)]; },
        [&](std::int64_t n) { return std::conj(fvals[static_cast<std::size_t>(n - 1)]); }, kl);

    CentralValueResult result;
    result.value = series.value;
    result.method = EvalMethod::exact_cutoff;
    result.terms_used = M;
    result.error_estimate = quad_acc + series.tail_proxy;
    result.constants = {C, eta_min(twisted), lambda, kl};
    return result;
}

ConvexityReport convexity_report(const LFunctionInstance& inst, const KernelParams& kp,
                                 const ContourSpec& cs, const TruncationPolicy& tp) {
    const CentralValueResult r = central_value_exact(inst, kp, cs, tp);
    const double cq = std::pow(r.constants.C, 0.25);
    return {std::abs(r.value), cq, std::abs(r.value) / cq};
}

}  // namespace lfe
