#pragma once

// Slow, obviously-correct reference computations the suite checks the library
// against. Deliberately different arithmetic: floating-point phase formulas
// instead of exact integer reduction, trial division instead of Miller-Rabin,
// set enumeration instead of Euler's criterion, exhaustive search instead of
// extended Euclid.

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Scan the full quadratic-residue set. Moduli stay small in tests.
inline int legendre_enumerate(std::int64_t a, std::uint64_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0)
        r += static_cast<std::int64_t>(p);
    if (r == 0)
        return 0;
    for (std::uint64_t k = 1; k < p; ++k)
        if (k * k % p == static_cast<std::uint64_t>(r))
            return 1;
    return -1;
}

inline std::uint64_t inverse_search(std::uint64_t a, std::uint64_t m) {
    for (std::uint64_t x = 1; x < m; ++x)
        if (a % m * x % m == 1)
            return x;
    return 0;
}

// x_u[n] straight from the phase formula in floating point.
inline std::complex<double> zc_term(std::uint64_t n_zc, std::uint64_t u,
                                    std::int64_t q, std::int64_t n) {
    double nn = static_cast<double>(n_zc);
    double c = static_cast<double>(n_zc % 2);
    double phase = -std::numbers::pi * static_cast<double>(u) *
                   static_cast<double>(n) *
                   (static_cast<double>(n) + c + 2.0 * static_cast<double>(q)) /
                   nn;
    return std::polar(1.0, phase);
}

// Same sample with the exponent reduced mod 2N in integer arithmetic; the
// independent twin of the library's generator for tight-tolerance sweeps.
inline std::complex<double> zc_term_exact(std::uint64_t n_zc, std::uint64_t u,
                                          std::int64_t q, std::int64_t n) {
    const unsigned __int128 m = 2 * static_cast<unsigned __int128>(n_zc);
    auto reduce = [&](__int128 v) {
        __int128 r = v % static_cast<__int128>(m);
        if (r < 0)
            r += static_cast<__int128>(m);
        return static_cast<unsigned __int128>(r);
    };
    unsigned __int128 a = reduce(static_cast<__int128>(u));
    unsigned __int128 b = reduce(static_cast<__int128>(n));
    unsigned __int128 lin = reduce(static_cast<__int128>(n) +
                                   static_cast<__int128>(n_zc % 2) +
                                   2 * static_cast<__int128>(q));
    unsigned __int128 e = a * b % m * lin % m;
    double phase = -std::numbers::pi * static_cast<double>(e) /
                   static_cast<double>(n_zc);
    return std::polar(1.0, phase);
}

inline std::complex<double> dft_term(const std::vector<std::complex<double>>& x,
                                     std::uint64_t k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        double phase = -2.0 * std::numbers::pi * static_cast<double>(k) *
                       static_cast<double>(i) / static_cast<double>(x.size());
        acc += x[i] * std::polar(1.0, phase);
    }
    return acc;
}

inline std::complex<double> gauss_sum(std::uint64_t m) {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < m; ++i) {
        double phase = 2.0 * std::numbers::pi *
                       static_cast<double>(i * i % m) / static_cast<double>(m);
        acc += std::polar(1.0, phase);
    }
    return acc;
}

// X_u[0]: one-period sum of the exact samples.
inline std::complex<double> zc_dc_sum(std::uint64_t n_zc, std::uint64_t u) {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < n_zc; ++i)
        acc += zc_term_exact(n_zc, u, 0, static_cast<std::int64_t>(i));
    return acc;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n <= limit; ++n)
        if (is_prime_trial(n))
            out.push_back(n);
    return out;
}

} // namespace oracle
