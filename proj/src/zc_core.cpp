#include "zckit/zc_core.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "zckit/number_theory.hpp"
#include "detail_kernels.hpp"

namespace zckit {

std::complex<double> unit_phase(std::int64_t num, std::uint64_t den) {
    double angle = std::numbers::pi * static_cast<double>(num) /
                   static_cast<double>(den);
    return std::polar(1.0, angle);
}

ZcParams::ZcParams(std::uint64_t n_zc, std::uint64_t root, std::int64_t q)
    : n_zc_(n_zc), root_(root), q_(q) {
    if (n_zc < 2)
        throw InvalidRoot("sequence length must be at least 2");
    if (n_zc > (std::uint64_t{1} << 32))
        throw InvalidRoot("sequence length exceeds 2^32");
    if (root == 0 || root >= n_zc || std::gcd(root, n_zc) != 1)
        throw InvalidRoot("root " + std::to_string(root) +
                          " is not invertible mod " + std::to_string(n_zc));
}

namespace detail {

std::uint64_t zc_exponent(std::uint64_t n_zc, std::uint64_t root, std::int64_t q,
                          std::int64_t n) {
    const std::uint64_t m = 2 * n_zc;
    const std::uint64_t c = n_zc % 2;
    // n + c + 2q can overflow int64 for adversarial q, so widen first.
    __int128 lin = static_cast<__int128>(n) + static_cast<__int128>(c) +
                   2 * static_cast<__int128>(q);
    __int128 lin_mod = lin % static_cast<__int128>(m);
    if (lin_mod < 0)
        lin_mod += static_cast<__int128>(m);
    std::uint64_t a = root % m;
    std::uint64_t b = floor_mod(n, m);
    return mul_mod(mul_mod(a, b, m), static_cast<std::uint64_t>(lin_mod), m);
}

std::complex<double> zc_sample(std::uint64_t n_zc, std::uint64_t root,
                               std::int64_t q, std::int64_t n) {
    std::uint64_t e = zc_exponent(n_zc, root, q, n);
    return unit_phase(-static_cast<std::int64_t>(e), n_zc);
}

} // namespace detail

ComplexSequence generate(const ZcParams& params) {
    ComplexSequence seq;
    seq.origin = SequenceOrigin::generated;
    seq.samples.resize(params.length());
    for (std::uint64_t n = 0; n < params.length(); ++n)
        seq.samples[n] = detail::zc_sample(params.length(), params.root(),
                                           params.phase(),
                                           static_cast<std::int64_t>(n));
    return seq;
}

std::complex<double> sample_at(const ZcParams& params, std::int64_t n) {
    // u (n+N) (n+N+c+2q) = u n (n+c+2q) (mod 2N) since c = N (mod 2), so the
    // reduced exponent is already periodic; no explicit n mod N needed.
    return detail::zc_sample(params.length(), params.root(), params.phase(), n);
}

std::complex<double> autocorrelation(const ZcParams& params, std::int64_t tau) {
    ComplexSequence x = generate(params);
    std::size_t n = x.size();
    return detail::correlation_lag(x.samples, x.samples,
                                   static_cast<std::size_t>(floor_mod(tau, n)));
}

std::complex<double> cross_correlation(const ZcParams& pu, const ZcParams& pv,
                                       std::int64_t tau) {
    if (pu.length() != pv.length())
        throw LengthMismatch("cross-correlation needs equal lengths, got " +
                             std::to_string(pu.length()) + " and " +
                             std::to_string(pv.length()));
    ComplexSequence xu = generate(pu);
    ComplexSequence xv = generate(pv);
    std::size_t n = xu.size();
    return detail::correlation_lag(xu.samples, xv.samples,
                                   static_cast<std::size_t>(floor_mod(tau, n)));
}

std::vector<std::complex<double>> autocorrelation_sweep(const ZcParams& params) {
    ComplexSequence x = generate(params);
    std::size_t n = x.size();
    std::vector<std::complex<double>> sweep(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t tau = 0; tau < static_cast<std::int64_t>(n); ++tau)
        sweep[static_cast<std::size_t>(tau)] = detail::correlation_lag(
            x.samples, x.samples, static_cast<std::size_t>(tau));
    return sweep;
}

std::vector<std::complex<double>> cross_correlation_sweep(const ZcParams& pu,
                                                          const ZcParams& pv) {
    if (pu.length() != pv.length())
        throw LengthMismatch("cross-correlation needs equal lengths, got " +
                             std::to_string(pu.length()) + " and " +
                             std::to_string(pv.length()));
    ComplexSequence xu = generate(pu);
    ComplexSequence xv = generate(pv);
    std::size_t n = xu.size();
    std::vector<std::complex<double>> sweep(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t tau = 0; tau < static_cast<std::int64_t>(n); ++tau)
        sweep[static_cast<std::size_t>(tau)] = detail::correlation_lag(
            xu.samples, xv.samples, static_cast<std::size_t>(tau));
    return sweep;
}

QShiftDecomposition q_shift_decompose(const ZcParams& params) {
    const std::uint64_t n = params.length();
    const std::uint64_t m = 2 * n;
    const std::uint64_t c = n % 2;
    // u q (q + c) mod 2N, exact.
    __int128 lin = static_cast<__int128>(params.phase()) + static_cast<__int128>(c);
    __int128 lin_mod = lin % static_cast<__int128>(m);
    if (lin_mod < 0)
        lin_mod += static_cast<__int128>(m);
    std::uint64_t e = mul_mod(
        mul_mod(params.root() % m, floor_mod(params.phase(), m), m),
        static_cast<std::uint64_t>(lin_mod), m);
    return {params.phase(),
            unit_phase(static_cast<std::int64_t>(e), n)};
}

} // namespace zckit
