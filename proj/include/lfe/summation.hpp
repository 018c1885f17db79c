#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lfe {

// Fixed-order compensated summation.  Deterministic: the reduction tree
// depends only on the length, so reruns (and any future parallel splits)
// reproduce bit-identical results.

namespace detail {

// Neumaier variant of Kahan summation over a short run.
inline double neumaier(std::span<const double> v) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

inline double pairwise(std::span<const double> v) {
    constexpr std::size_t kLeaf = 32;
    if (v.size() <= kLeaf) return neumaier(v);
    const std::size_t half = v.size() / 2;
    return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace detail

inline double pairwise_sum(std::span<const double> v) {
    return detail::pairwise(v);
}

inline std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
    std::vector<double> re(v.size()), im(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        re[i] = v[i].real();
        im[i] = v[i].imag();
    }
    return {detail::pairwise(re), detail::pairwise(im)};
}

}  // namespace lfe
