#include "lfe/gamma.hpp"

#include <cmath>

namespace lfe {

namespace {

using Cplx = std::complex<double>;

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi)/2

// B_{2n} / (2n (2n-1)), n = 1..15, for the Stirling series of log Gamma.
constexpr double kStirling[15] = {
    8.3333333333333333333e-02,
    -2.7777777777777777778e-03,
    7.9365079365079365079e-04,
    -5.9523809523809523810e-04,
    8.4175084175084175084e-04,
    -1.9175269175269175269e-03,
    6.4102564102564102564e-03,
    -2.9550653594771241830e-02,
    1.7964437236883057165e-01,
    -1.3924322169059011164e+00,
    1.3402864044168391994e+01,
    -1.5684828462600201731e+02,
    2.1931033333333333333e+03,
    -3.6108771253724989357e+04,
    6.9147226885131306710e+05,
};

// B_{2n} / (2n), n = 1..15, for the asymptotic series of digamma.
constexpr double kDigammaSeries[15] = {
    8.3333333333333333333e-02,
    -8.3333333333333333333e-03,
    3.9682539682539682540e-03,
    -4.1666666666666666667e-03,
    7.5757575757575757576e-03,
    -2.1092796092796092796e-02,
    8.3333333333333333333e-02,
    -4.4325980392156862745e-01,
    3.0539543302701197438e+00,
    -2.6456212121212121212e+01,
    2.8146014492753623188e+02,
    -3.6075105463980463980e+03,
    5.4827583333333333333e+04,
    -9.7493682385057471264e+05,
    2.0052695796688078946e+07,
};

// Stirling series at large Re w; caller guarantees Re w >= shift threshold.
Cplx stirling_log_gamma(Cplx w, int terms) {
    const Cplx lw = std::log(w);
    Cplx result = (w - 0.5) * lw - w + kHalfLog2Pi;
    const Cplx w2 = w * w;
    Cplx wpow = w;  // w^(2n-1)
    for (int n = 0; n < terms; ++n) {
        result += kStirling[n] / wpow;
        wpow *= w2;
    }
    return result;
}

Cplx stirling_digamma(Cplx w, int terms) {
    Cplx result = std::log(w) - 0.5 / w;
    const Cplx w2 = w * w;
    Cplx wpow = w2;  // w^(2n)
    for (int n = 0; n < terms; ++n) {
        result -= kDigammaSeries[n] / wpow;
        wpow *= w2;
    }
    return result;
}

int shift_count(Cplx z, double threshold) {
    if (z.real() >= threshold) return 0;
    return static_cast<int>(std::ceil(threshold - z.real()));
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z, const GammaAccuracy& acc) {
    if (!(z.real() > 0.0))
        throw DomainError("log_gamma: argument must have positive real part");
    const int terms = std::min(acc.series_terms, 15);
    const int k = shift_count(z, acc.shift_threshold);
    Cplx result = stirling_log_gamma(z + static_cast<double>(k), terms);
    for (int j = 0; j < k; ++j)
        result -= std::log(z + static_cast<double>(j));
    return result;
}

std::complex<double> digamma(std::complex<double> z, const GammaAccuracy& acc) {
    if (!(z.real() > 0.0))
        throw DomainError("digamma: argument must have positive real part");
    const int terms = std::min(acc.series_terms, 15);
    const int k = shift_count(z, acc.shift_threshold);
    Cplx result = stirling_digamma(z + static_cast<double>(k), terms);
    for (int j = 0; j < k; ++j)
        result -= 1.0 / (z + static_cast<double>(j));
    return result;
}

GammaRatioReport gamma_ratio_check(std::complex<double> z, double sigma, double alpha,
                                   double harness_constant) {
    if (!(alpha > -sigma))
        throw DomainError("gamma_ratio_check: requires alpha > -sigma");
    if (z.real() < alpha)
        throw DomainError("gamma_ratio_check: requires Re z >= alpha");
    if (!((z + sigma).real() > 0.0))
        throw DomainError("gamma_ratio_check: requires Re(z + sigma) > 0");
    const double ratio = std::exp((log_gamma(z + sigma) - log_gamma(z)).real());
    const double bound = harness_constant * std::pow(std::abs(z + sigma), sigma);
    return {ratio, bound, ratio <= bound};
}

}  // namespace lfe
