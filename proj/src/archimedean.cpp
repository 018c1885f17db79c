#include "lfe/archimedean.hpp"

#include <algorithm>
#include <cmath>

namespace lfe {

EvaluationStrip evaluation_strip(const LFunctionInstance& inst, double delta) {
    const double inv = 1.0 / (static_cast<double>(inst.m) * inst.m + 1.0);
    double min_re_mu = inst.arch.mu.front().real();
    for (const Complex& mu : inst.arch.mu) min_re_mu = std::min(min_re_mu, mu.real());
    EvaluationStrip strip{-inv + delta, std::min(inv, 0.5 + min_re_mu) - delta};
    if (!(strip.sigma_min < 0.0 && 0.0 < strip.sigma_max))
        throw AdmissibilityError("instance '" + inst.label +
                                 "': evaluation strip does not contain 0");
    return strip;
}

Complex log_gamma_factor(Complex s, const ArchimedeanParams& arch, const GammaAccuracy& acc) {
    static const double kLogPi = std::log(M_PI);
    Complex sum = 0.0;
    for (const Complex& mu : arch.mu) {
        const Complex arg = (s + mu) / 2.0;
        if (!(arg.real() > 0.0))
            throw StripViolation(
                "log_gamma_factor: gamma argument left the right half-plane at Re s = " +
                std::to_string(s.real()));
        sum += -(s / 2.0) * kLogPi + log_gamma(arg, acc);
    }
    return sum;
}

Complex gamma_factor_ratio(Complex s, const LFunctionInstance& inst, const GammaAccuracy& acc) {
    const EvaluationStrip strip = evaluation_strip(inst);
    if (!strip.contains(s.real()))
        throw StripViolation("gamma_factor_ratio: Re s = " + std::to_string(s.real()) +
                             " outside the safe strip (" + std::to_string(strip.sigma_min) +
                             ", " + std::to_string(strip.sigma_max) + ")");
    ArchimedeanParams dual;
    dual.mu.reserve(inst.arch.mu.size());
    for (const Complex& mu : inst.arch.mu) dual.mu.push_back(std::conj(mu));

    // Grouped as differences so both groups cancel exactly at s = 0, which
    // pins the branch with ratio(0) = 1 to the last bit.
    const Complex half{0.5, 0.0};
    const Complex log_sum =
        s * std::log(static_cast<double>(inst.conductor)) +
        (log_gamma_factor(half + s, inst.arch, acc) - log_gamma_factor(half, inst.arch, acc)) +
        (log_gamma_factor(half, dual, acc) - log_gamma_factor(half - s, dual, acc));
    return std::exp(0.5 * log_sum);
}

Complex lambda_phase(const LFunctionInstance& inst, const GammaAccuracy& acc) {
    Complex log_sum = 0.0;
    for (const Complex& mu : inst.arch.mu) {
        if (!((0.5 + mu).real() > 0.0))
            throw StripViolation("lambda_phase: central gamma argument outside half-plane");
        log_sum += log_gamma((0.5 + std::conj(mu)) / 2.0, acc) -
                   log_gamma((0.5 + mu) / 2.0, acc);
    }
    return std::exp(log_sum);
}

GrowthSweepReport vertical_growth_sweep(const LFunctionInstance& inst, double sigma,
                                        double t_max, int n_points) {
    if (n_points < 2) throw ValidationError("vertical_growth_sweep: need at least 2 points");
    if (sigma != 0.0) {
        const EvaluationStrip strip = evaluation_strip(inst);
        if (!strip.contains(sigma))
            throw StripViolation("vertical_growth_sweep: abscissa outside the safe strip");
    }
    const double C = analytic_conductor(inst);
    const double expo = static_cast<double>(inst.md()) * sigma / 2.0;
    double best = 0.0, best_t = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double t = -t_max + 2.0 * t_max * i / (n_points - 1);
        const Complex s{sigma, t};
        const double scaled =
            std::abs(std::pow(C, -s / 2.0) * gamma_factor_ratio(s, inst));
        const double normalized = scaled / std::pow(1.0 + std::abs(s), expo);
        if (normalized > best) {
            best = normalized;
            best_t = t;
        }
    }
    return {best, best_t};
}

SmallShiftReport small_shift_deviation(const LFunctionInstance& inst, double t,
                                       double harness_constant, double eps) {
    const double C = analytic_conductor(inst);
    const double eta = eta_min(inst);
    const Complex s{0.0, t};
    const Complex point = std::pow(C, -s / 2.0) * gamma_factor_ratio(s, inst);
    const double deviation = std::abs(point - 1.0);
    const double bound = harness_constant * std::abs(t) / eta * std::pow(C, eps);
    return {deviation, bound};
}

}  // namespace lfe
