// Throughput comparison of the parallel kernels against their serial
// reference mirrors. The two share per-element arithmetic, so outputs are
// bit-identical; this target reports how the loop parallelism pays off.
//
//   zckit_bench [--n N] [--oversampling OS] [--iterations I]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zckit/serial.hpp"
#include "zckit/zc_continuous.hpp"
#include "zckit/zc_core.hpp"
#include "zckit/zc_dft.hpp"

namespace {

volatile double g_sink = 0.0;

template <class F>
double median_ms(F&& f, int iterations) {
    f(); // warm caches once
    std::vector<double> samples(static_cast<std::size_t>(iterations));
    for (int i = 0; i < iterations; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        samples[static_cast<std::size_t>(i)] =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    auto mid = samples.begin() + samples.size() / 2;
    std::nth_element(samples.begin(), mid, samples.end());
    return *mid;
}

bool equal_bits(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

void report(const char* name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-24s %10.3f ms %10.3f ms %8.2fx  %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms,
                same ? "outputs identical" : "OUTPUTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t n = 571;
    std::uint32_t oversampling = 16;
    int iterations = 9;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--n")
            n = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--oversampling")
            oversampling = static_cast<std::uint32_t>(
                std::strtoul(argv[i + 1], nullptr, 10));
        else if (flag == "--iterations")
            iterations = std::atoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "unknown flag %s\n", flag.c_str());
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif
    std::printf("n = %llu, oversampling = %u, iterations = %d\n",
                static_cast<unsigned long long>(n), oversampling, iterations);
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    zckit::ZcParams pu(n, 1);
    zckit::ZcParams pv(n, n - 2);
    zckit::ComplexSequence x = zckit::generate(pu);
    zckit::PrimeModulus m(n);
    zckit::WaveformGrid grid(n, 1.0, oversampling);

    {
        auto serial = zckit::serial::dft_naive(x);
        auto parallel = zckit::dft_naive(x);
        double ts = median_ms(
            [&] {
                g_sink = g_sink + zckit::serial::dft_naive(x)
                                      .coefficients.samples[0]
                                      .real();
            },
            iterations);
        double tp = median_ms(
            [&] {
                g_sink = g_sink +
                         zckit::dft_naive(x).coefficients.samples[0].real();
            },
            iterations);
        report("dft_naive", ts, tp,
               equal_bits(serial.coefficients.samples,
                          parallel.coefficients.samples));
    }
    {
        auto serial = zckit::serial::autocorrelation_sweep(pu);
        auto parallel = zckit::autocorrelation_sweep(pu);
        double ts = median_ms(
            [&] {
                g_sink = g_sink +
                         zckit::serial::autocorrelation_sweep(pu)[0].real();
            },
            iterations);
        double tp = median_ms(
            [&] { g_sink = g_sink + zckit::autocorrelation_sweep(pu)[0].real(); },
            iterations);
        report("autocorrelation_sweep", ts, tp, equal_bits(serial, parallel));
    }
    {
        auto serial = zckit::serial::cross_correlation_sweep(pu, pv);
        auto parallel = zckit::cross_correlation_sweep(pu, pv);
        double ts = median_ms(
            [&] {
                g_sink = g_sink + zckit::serial::cross_correlation_sweep(
                                      pu, pv)[0]
                                      .real();
            },
            iterations);
        double tp = median_ms(
            [&] {
                g_sink =
                    g_sink + zckit::cross_correlation_sweep(pu, pv)[0].real();
            },
            iterations);
        report("cross_correlation_sweep", ts, tp, equal_bits(serial, parallel));
    }
    {
        auto serial = zckit::serial::dft_zero_table(m);
        auto parallel = zckit::dft_zero_table(m);
        double ts = median_ms(
            [&] { g_sink = g_sink + zckit::serial::dft_zero_table(m)[0].real(); },
            iterations);
        double tp = median_ms(
            [&] { g_sink = g_sink + zckit::dft_zero_table(m)[0].real(); },
            iterations);
        report("dft_zero_table", ts, tp, equal_bits(serial, parallel));
    }
    {
        auto serial = zckit::serial::synthesize_lowpass(pu, grid);
        auto parallel = zckit::synthesize_lowpass(pu, grid);
        double ts = median_ms(
            [&] {
                g_sink = g_sink +
                         zckit::serial::synthesize_lowpass(pu, grid)
                             .samples[0]
                             .real();
            },
            iterations);
        double tp = median_ms(
            [&] {
                g_sink = g_sink +
                         zckit::synthesize_lowpass(pu, grid).samples[0].real();
            },
            iterations);
        report("synthesize_lowpass", ts, tp,
               equal_bits(serial.samples, parallel.samples));
    }
    return 0;
}
