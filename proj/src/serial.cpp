#include "zckit/serial.hpp"

#include "detail_kernels.hpp"

namespace zckit::serial {

DftResult dft_naive(const ComplexSequence& x) {
    const std::size_t n = x.size();
    DftResult out;
    out.method = DftMethod::naive;
    out.coefficients.origin = SequenceOrigin::dft;
    out.coefficients.samples.resize(n);
    const std::vector<std::complex<double>> w = detail::dft_twiddles(n);
    for (std::size_t k = 0; k < n; ++k)
        out.coefficients.samples[k] = detail::dft_coefficient(x.samples, w, k);
    return out;
}

std::vector<std::complex<double>> autocorrelation_sweep(const ZcParams& params) {
    ComplexSequence x = generate(params);
    const std::size_t n = x.size();
    std::vector<std::complex<double>> sweep(n);
    for (std::size_t tau = 0; tau < n; ++tau)
        sweep[tau] = detail::correlation_lag(x.samples, x.samples, tau);
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
    const std::size_t n = xu.size();
    std::vector<std::complex<double>> sweep(n);
    for (std::size_t tau = 0; tau < n; ++tau)
        sweep[tau] = detail::correlation_lag(xu.samples, xv.samples, tau);
    return sweep;
}

std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m,
                                                 const LegendreTable& table) {
    const std::uint64_t p = m.value();
    std::vector<std::complex<double>> out(p - 1);
    for (std::uint64_t u = 1; u < p; ++u)
        out[u - 1] = dft_zero_closed(m, u, table);
    return out;
}

std::vector<std::complex<double>> dft_zero_table(const PrimeModulus& m) {
    LegendreTable table = build_legendre_table(m);
    return serial::dft_zero_table(m, table);
}

ContinuousSignal synthesize_lowpass(const ZcParams& params,
                                    const WaveformGrid& grid) {
    LowpassWaveform wave(params, grid.period());
    ContinuousSignal sig{grid, {}, SignalKind::lowpass};
    sig.samples.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        sig.samples[i] = wave.eval(grid.instant(i));
    return sig;
}

} // namespace zckit::serial
