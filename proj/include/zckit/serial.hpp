#pragma once

// Single-threaded reference versions of the parallel kernels. They share the
// per-element arithmetic with the parallel entry points, so results are
// bit-identical regardless of thread count; the test suite asserts exactly
// that, and bench/ compares their throughput.

#include "zckit/zc_continuous.hpp"
#include "zckit/zc_core.hpp"
#include "zckit/zc_dft.hpp"

namespace zckit::serial {

DftResult dft_naive(const ComplexSequence& x);

std::vector<std::complex<double>> autocorrelation_sweep(const ZcParams& params);
std::vector<std::complex<double>> cross_correlation_sweep(const ZcParams& pu,
                                                          const ZcParams& pv);

std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m);
std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m,
                                                 const LegendreTable& table);

ContinuousSignal synthesize_lowpass(const ZcParams& params,
                                    const WaveformGrid& grid);

} // namespace zckit::serial
