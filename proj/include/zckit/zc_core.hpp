#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zckit/errors.hpp"

namespace zckit {

// exp(j pi num / den). Callers pass exactly reduced integer ratios so the
// angle stays within a couple of turns and std::polar does the rest.
std::complex<double> unit_phase(std::int64_t num, std::uint64_t den);

// Parameters of x_u[n] = exp(-j pi u n (n + c + 2q) / N), c = N mod 2.
// The parity c is always recomputed from the length, never stored.
class ZcParams {
public:
    ZcParams(std::uint64_t n_zc, std::uint64_t root, std::int64_t q = 0);

    std::uint64_t length() const { return n_zc_; }
    std::uint64_t root() const { return root_; }
    std::int64_t phase() const { return q_; }
    std::uint64_t parity() const { return n_zc_ % 2; }

    friend bool operator==(const ZcParams&, const ZcParams&) = default;

private:
    std::uint64_t n_zc_;
    std::uint64_t root_;
    std::int64_t q_;
};

enum class SequenceOrigin { generated, dft, correlation };

struct ComplexSequence {
    std::vector<std::complex<double>> samples;
    SequenceOrigin origin = SequenceOrigin::generated;

    std::size_t size() const { return samples.size(); }
};

// One period, samples[n] = x_u[n] for n = 0 .. N-1. The exponent
// u n (n + c + 2q) is reduced mod 2N in integer arithmetic before any
// float conversion, so every sample is a correctly rounded unit phasor.
ComplexSequence generate(const ZcParams& params);

// x_u[n] for any integer n, bitwise equal to generate()'s n mod N entry.
std::complex<double> sample_at(const ZcParams& params, std::int64_t n);

// Periodic correlation R[tau] = sum_n x[n] conj(x[n + tau]).
std::complex<double> autocorrelation(const ZcParams& params, std::int64_t tau);
std::complex<double> cross_correlation(const ZcParams& pu, const ZcParams& pv,
                                       std::int64_t tau);

// Full lag sweeps, tau = 0 .. N-1. Parallel over lags.
std::vector<std::complex<double>> autocorrelation_sweep(const ZcParams& params);
std::vector<std::complex<double>> cross_correlation_sweep(const ZcParams& pu,
                                                          const ZcParams& pv);

// x_u^{(q)}[n] = rotation * x_u^{(0)}[n + shift] with shift = q and
// rotation = exp(+j pi u q (q + c) / N).
struct QShiftDecomposition {
    std::int64_t shift;
    std::complex<double> rotation;
};

QShiftDecomposition q_shift_decompose(const ZcParams& params);

namespace detail {

// u n (n + c + 2q) reduced into [0, 2N) exactly, for any signed n and q.
std::uint64_t zc_exponent(std::uint64_t n_zc, std::uint64_t root, std::int64_t q,
                          std::int64_t n);

std::complex<double> zc_sample(std::uint64_t n_zc, std::uint64_t root,
                               std::int64_t q, std::int64_t n);

} // namespace detail

} // namespace zckit
