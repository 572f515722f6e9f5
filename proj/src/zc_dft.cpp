#include "zckit/zc_dft.hpp"

#include <cmath>
#include <numbers>

#include "detail_kernels.hpp"

namespace zckit {

DftResult dft_naive(const ComplexSequence& x) {
    const std::size_t n = x.size();
    DftResult out;
    out.method = DftMethod::naive;
    out.coefficients.origin = SequenceOrigin::dft;
    out.coefficients.samples.resize(n);
    const std::vector<std::complex<double>> w = detail::dft_twiddles(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k)
        out.coefficients.samples[static_cast<std::size_t>(k)] =
            detail::dft_coefficient(x.samples, w, static_cast<std::size_t>(k));
    return out;
}

ComplexSequence idft_naive(const ComplexSequence& X) {
    const std::size_t n = X.size();
    ComplexSequence conj_in;
    conj_in.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        conj_in.samples[i] = std::conj(X.samples[i]);
    DftResult fwd = dft_naive(conj_in);
    ComplexSequence out;
    out.origin = SequenceOrigin::generated;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.samples[i] = std::conj(fwd.coefficients.samples[i]) /
                         static_cast<double>(n);
    return out;
}

namespace {

std::complex<double> dft_zero_from_legendre(const PrimeModulus& m,
                                            std::uint64_t u, int ell_2u) {
    const std::uint64_t p = m.value();
    if (u % p == 0)
        throw InvalidRoot("root 0 mod " + std::to_string(p));
    const std::uint64_t alpha = (p + 1) / 2;
    std::uint64_t rot = mul_mod(mul_mod(mul_mod(alpha, alpha, p), alpha, p),
                                u % p, p);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(rot) /
                   static_cast<double>(p);
    std::complex<double> base =
        std::polar(std::sqrt(static_cast<double>(p)), angle);
    base *= static_cast<double>(ell_2u);
    if (m.residue_mod4() == 3)
        base *= std::complex<double>{0.0, -1.0};
    return base;
}

} // namespace

std::complex<double> dft_zero_closed(const PrimeModulus& m, std::uint64_t u) {
    int ell = legendre_symbol(static_cast<std::int64_t>(
                                  mul_mod(2 % m.value(), u % m.value(), m.value())),
                              m);
    return dft_zero_from_legendre(m, u, ell);
}

std::complex<double> dft_zero_closed(const PrimeModulus& m, std::uint64_t u,
                                     const LegendreTable& table) {
    int ell = table.lookup(static_cast<std::int64_t>(
        mul_mod(2 % m.value(), u % m.value(), m.value())));
    return dft_zero_from_legendre(m, u, ell);
}

std::complex<double> dft_zero_direct(const PrimeModulus& m, std::uint64_t u) {
    const std::uint64_t p = m.value();
    if (u % p == 0)
        throw InvalidRoot("root 0 mod " + std::to_string(p));
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t n = 0; n < p; ++n)
        acc += detail::zc_sample(p, u % p, 0, static_cast<std::int64_t>(n));
    return acc;
}

namespace {

DftResult dft_closed_impl(const PrimeModulus& m, std::uint64_t u,
                          std::complex<double> x0) {
    const std::uint64_t p = m.value();
    ZcParams params(p, u % p, 0);
    ComplexSequence x = generate(params);
    std::uint64_t uinv = mod_inverse(static_cast<std::int64_t>(u % p), m);
    DftResult out;
    out.method = DftMethod::closed_form;
    out.coefficients.origin = SequenceOrigin::dft;
    out.coefficients.samples.resize(p);
    std::size_t idx = 0;
    for (std::uint64_t k = 0; k < p; ++k) {
        // idx = (u^{-1} k) mod p, walked incrementally.
        out.coefficients.samples[k] = x0 * std::conj(x.samples[idx]);
        idx += uinv;
        if (idx >= p)
            idx -= p;
    }
    return out;
}

} // namespace

DftResult dft_closed(const PrimeModulus& m, std::uint64_t u) {
    return dft_closed_impl(m, u, dft_zero_closed(m, u));
}

DftResult dft_closed(const PrimeModulus& m, std::uint64_t u,
                     const LegendreTable& table) {
    return dft_closed_impl(m, u, dft_zero_closed(m, u, table));
}

std::uint64_t chi_exponent(const PrimeModulus& m, std::uint64_t u,
                           std::uint64_t k) {
    const std::uint64_t p = m.value();
    if (m.residue_mod4() != 3)
        throw WrongResidueClass("chi form needs a length of 3 mod 4, got " +
                                std::to_string(p));
    if (p >= (std::uint64_t{1} << 61))
        throw Error("chi exponent overflows for moduli above 2^61");
    if (u % p == 0)
        throw InvalidRoot("root 0 mod " + std::to_string(p));
    const std::uint64_t ur = u % p;
    const std::uint64_t kr = k % p;
    const std::uint64_t alpha = (p + 1) / 2;
    const std::uint64_t uinv = coprime_inverse(static_cast<std::int64_t>(ur), p);
    std::uint64_t cubic = mul_mod(mul_mod(mul_mod(alpha, alpha, p), alpha, p),
                                  ur, p);
    std::uint64_t quad =
        mul_mod(alpha, (mul_mod(mul_mod(uinv, kr, p), kr, p) + kr) % p, p);
    int ell = legendre_symbol(static_cast<std::int64_t>(mul_mod(2, ur, p)), m);
    __int128 chi = 4 * static_cast<__int128>(cubic) +
                   4 * static_cast<__int128>(quad) -
                   static_cast<__int128>(ell) * static_cast<__int128>(p);
    __int128 modulus = 4 * static_cast<__int128>(p);
    chi %= modulus;
    if (chi < 0)
        chi += modulus;
    return static_cast<std::uint64_t>(chi);
}

std::complex<double> dft_chi_form(const PrimeModulus& m, std::uint64_t u,
                                  std::uint64_t k) {
    std::uint64_t chi = chi_exponent(m, u, k);
    double root = std::sqrt(static_cast<double>(m.value()));
    return root * unit_phase(static_cast<std::int64_t>(chi), 2 * m.value());
}

std::complex<double> dual_root_modulation(const PrimeModulus& m, std::uint64_t u,
                                          std::uint64_t k) {
    const std::uint64_t p = m.value();
    if (u % p == 0)
        throw InvalidRoot("root 0 mod " + std::to_string(p));
    const std::uint64_t m2 = 2 * p;
    std::uint64_t uinv = coprime_inverse(static_cast<std::int64_t>(u % p), p);
    // k (u^{-1} - 1) (p + 1) mod 2p; any representative of u^{-1} mod p gives
    // the same result because the difference is a multiple of p (p + 1) = 0.
    std::uint64_t e = mul_mod(
        mul_mod(k % m2, floor_mod(static_cast<std::int64_t>(uinv) - 1, m2), m2),
        (p + 1) % m2, m2);
    return unit_phase(-static_cast<std::int64_t>(e), p);
}

std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m,
                                                 const LegendreTable& table) {
    const std::uint64_t p = m.value();
    std::vector<std::complex<double>> out(p - 1);
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 1; u < static_cast<std::int64_t>(p); ++u)
        out[static_cast<std::size_t>(u - 1)] =
            dft_zero_closed(m, static_cast<std::uint64_t>(u), table);
    return out;
}

std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m) {
    LegendreTable table = build_legendre_table(m);
    return dft_zero_table(m, table);
}

} // namespace zckit
