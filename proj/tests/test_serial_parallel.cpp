#include <complex>
#include <random>

#include "doctest.h"
#include "zckit/serial.hpp"

using namespace zckit;
using cd = std::complex<double>;

// The parallel kernels and their serial mirrors share per-element helpers;
// these tests hold them to bit-identical outputs, not approximate ones.

namespace {

bool identical(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

} // namespace

TEST_CASE("dft_naive matches its serial mirror bitwise") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    ComplexSequence random_input;
    for (int i = 0; i < 101; ++i)
        random_input.samples.emplace_back(coord(rng), coord(rng));
    CHECK(identical(dft_naive(random_input).coefficients.samples,
                    serial::dft_naive(random_input).coefficients.samples));

    ComplexSequence zc = generate(ZcParams(139, 17));
    CHECK(identical(dft_naive(zc).coefficients.samples,
                    serial::dft_naive(zc).coefficients.samples));
}

TEST_CASE("correlation sweeps match their serial mirrors bitwise") {
    ZcParams pu(139, 17, 2);
    ZcParams pv(139, 40, -1);
    CHECK(identical(autocorrelation_sweep(pu),
                    serial::autocorrelation_sweep(pu)));
    CHECK(identical(cross_correlation_sweep(pu, pv),
                    serial::cross_correlation_sweep(pu, pv)));
}

TEST_CASE("zero-coefficient tables match their serial mirrors bitwise") {
    PrimeModulus m(139);
    CHECK(identical(dft_zero_table(m), serial::dft_zero_table(m)));
    LegendreTable table = build_legendre_table(m);
    CHECK(identical(dft_zero_table(m, table),
                    serial::dft_zero_table(m, table)));
}

TEST_CASE("waveform synthesis matches its serial mirror bitwise") {
    ZcParams p(53, 12);
    WaveformGrid grid(53, 1.0, 16);
    ContinuousSignal parallel = synthesize_lowpass(p, grid);
    ContinuousSignal reference = serial::synthesize_lowpass(p, grid);
    CHECK(parallel.kind == reference.kind);
    CHECK(identical(parallel.samples, reference.samples));
}
