#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zckit/number_theory.hpp"
#include "zckit/zc_core.hpp"

namespace zckit {

enum class DftMethod { naive, closed_form, chi_form };

struct DftResult {
    ComplexSequence coefficients;
    DftMethod method;
};

// O(N^2) reference DFT of an arbitrary sequence. Parallel over bins.
DftResult dft_naive(const ComplexSequence& x);

// Inverse of dft_naive (conjugate trick), for round-trip checks.
ComplexSequence idft_naive(const ComplexSequence& X);

// X_u[0] for a prime-length root-u sequence, directly from the generalized
// quadratic Gauss sum: ell_{2u} * eta_m * sqrt(m) * exp(j 2 pi u alpha^3 / m)
// with alpha = (m+1)/2. O(log m) without a table, O(1) with one.
std::complex<double> dft_zero_closed(const PrimeModulus& m, std::uint64_t u);
std::complex<double> dft_zero_closed(const PrimeModulus& m, std::uint64_t u,
                                     const LegendreTable& table);

// Same value by direct summation of the N sequence terms; the measuring
// stick the closed form is benchmarked and tested against.
std::complex<double> dft_zero_direct(const PrimeModulus& m, std::uint64_t u);

// Full spectrum in O(N): X_u[k] = X_u[0] * conj(x_u[u^{-1} k mod N]).
DftResult dft_closed(const PrimeModulus& m, std::uint64_t u);
DftResult dft_closed(const PrimeModulus& m, std::uint64_t u,
                     const LegendreTable& table);

// Integer phase of the pure-phase spectrum for m = 3 (mod 4):
// X_u[k] = sqrt(m) exp(j pi chi / (2m)) with
// chi = [4 (u a^3 mod m) + 4 (a (u^{-1} k^2 + k) mod m) - ell_{2u} m] mod 4m,
// a = (m+1)/2. Representative-independent in both u^{-1} and k.
std::uint64_t chi_exponent(const PrimeModulus& m, std::uint64_t u,
                           std::uint64_t k);

// Throws WrongResidueClass when m = 1 (mod 4).
std::complex<double> dft_chi_form(const PrimeModulus& m, std::uint64_t u,
                                  std::uint64_t k);

// exp(-j pi k (u^{-1} - 1) (m + 1) / m): the factor linking the spectrum of
// root u to the sequence with root u^{-1},
// conj(x_u[u^{-1} k]) = conj(x_{u^{-1}}[k]) * dual_root_modulation(m, u, k).
std::complex<double> dual_root_modulation(const PrimeModulus& m, std::uint64_t u,
                                          std::uint64_t k);

// X_u[0] for every root u = 1 .. m-1 (index u-1). Parallel over roots.
std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m);
std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m,
                                                 const LegendreTable& table);

} // namespace zckit
