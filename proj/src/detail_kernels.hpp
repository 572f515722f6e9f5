#pragma once

// Per-element kernels shared by the parallel entry points and the serial
// reference mirrors, so the two produce bit-identical results.

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace zckit::detail {

inline std::complex<double> correlation_lag(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b, std::size_t tau) {
    const std::size_t n = a.size();
    std::complex<double> acc{0.0, 0.0};
    std::size_t idx = tau;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * std::conj(b[idx]);
        ++idx;
        if (idx == n)
            idx = 0;
    }
    return acc;
}

// w[j] = exp(-j 2 pi j / n), j = 0 .. n-1.
inline std::vector<std::complex<double>> dft_twiddles(std::size_t n) {
    std::vector<std::complex<double>> w(n);
    for (std::size_t j = 0; j < n; ++j)
        w[j] = std::polar(1.0, -2.0 * std::numbers::pi *
                                   static_cast<double>(j) /
                                   static_cast<double>(n));
    return w;
}

// X[k] = sum_n x[n] w[(k n) mod N], with the index walked incrementally so
// the twiddle table keeps phases exact and no divisions hit the inner loop.
inline std::complex<double> dft_coefficient(
    const std::vector<std::complex<double>>& x,
    const std::vector<std::complex<double>>& w, std::size_t k) {
    const std::size_t n = x.size();
    std::complex<double> acc{0.0, 0.0};
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * w[idx];
        idx += k;
        if (idx >= n)
            idx -= n;
    }
    return acc;
}

} // namespace zckit::detail
