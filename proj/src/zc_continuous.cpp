#include "zckit/zc_continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zckit/number_theory.hpp"

namespace zckit {

namespace {

// Fractional part of t / period in [0, 1).
double wrap_unit(double t, double period) {
    double s = t / period;
    s -= std::floor(s);
    if (s >= 1.0) // floor rounding can leave exactly 1.0 for tiny negatives
        s = 0.0;
    return s;
}

} // namespace

WaveformGrid::WaveformGrid(std::uint64_t n_zc, double period,
                           std::uint32_t oversampling)
    : n_zc_(n_zc), period_(period), oversampling_(oversampling) {
    if (n_zc == 0 || oversampling == 0)
        throw Error("waveform grid needs a positive length and oversampling");
    if (!(period > 0.0))
        throw Error("waveform grid needs a positive period");
}

double dirichlet_kernel(std::uint64_t n_zc, double z) {
    const double n = static_cast<double>(n_zc);
    if (std::abs(z - std::round(z)) < 1e-12)
        return 1.0;
    return std::sin(std::numbers::pi * n * z) /
           (n * std::sin(std::numbers::pi * z));
}

std::complex<double> chirp_eval(const ZcParams& params, double t, double period) {
    const double n = static_cast<double>(params.length());
    const double u = static_cast<double>(params.root());
    double s = wrap_unit(t, period);
    double phase = -std::numbers::pi * u * (n * s * s + s);
    return std::polar(1.0, phase);
}

double chirp_max_frequency(const ZcParams& params, double period) {
    const double n = static_cast<double>(params.length());
    const double u = static_cast<double>(params.root());
    return u * (2.0 * n + 1.0) / (2.0 * period);
}

LowpassWaveform::LowpassWaveform(const ZcParams& params, double period)
    : params_(params), period_(period),
      spectrum_(dft_closed(PrimeModulus(params.length()), params.root())
                    .coefficients),
      chips_(generate(params)) {
    if (params.phase() != 0)
        throw Error("lowpass synthesis is defined for the q = 0 form");
    if (!(period > 0.0))
        throw Error("lowpass synthesis needs a positive period");
}

std::complex<double> LowpassWaveform::eval(double t) const {
    const std::uint64_t n = params_.length();
    const std::int64_t n0 = static_cast<std::int64_t>((n - 1) / 2);
    const double s = wrap_unit(t, period_);
    const std::complex<double> step =
        std::polar(1.0, 2.0 * std::numbers::pi * s);
    // Start at bin -N0 and walk upward with one multiply per bin.
    std::complex<double> phasor =
        std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(n0) * s);
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t k = -n0; k <= n0; ++k) {
        std::size_t bin = static_cast<std::size_t>(
            k >= 0 ? k : k + static_cast<std::int64_t>(n));
        acc += spectrum_.samples[bin] * phasor;
        phasor *= step;
    }
    return acc / static_cast<double>(n);
}

std::complex<double> LowpassWaveform::eval_dirichlet(double t) const {
    const std::uint64_t n = params_.length();
    const double s = wrap_unit(t, period_);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < n; ++i)
        acc += chips_.samples[i] *
               dirichlet_kernel(n, s - static_cast<double>(i) /
                                           static_cast<double>(n));
    return acc;
}

std::complex<double> lowpass_eval(const ZcParams& params, double t, double period) {
    return LowpassWaveform(params, period).eval(t);
}

std::complex<double> lowpass_eval_dirichlet(const ZcParams& params, double t,
                                            double period) {
    return LowpassWaveform(params, period).eval_dirichlet(t);
}

ContinuousSignal synthesize_lowpass(const ZcParams& params,
                                    const WaveformGrid& grid) {
    LowpassWaveform wave(params, grid.period());
    ContinuousSignal sig{grid, {}, SignalKind::lowpass};
    sig.samples.resize(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(grid.size()); ++i)
        sig.samples[static_cast<std::size_t>(i)] =
            wave.eval(grid.instant(static_cast<std::size_t>(i)));
    return sig;
}

ContinuousSignal synthesize_chirp(const ZcParams& params,
                                  const WaveformGrid& grid) {
    ContinuousSignal sig{grid, {}, SignalKind::chirp};
    sig.samples.resize(grid.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(grid.size()); ++i)
        sig.samples[static_cast<std::size_t>(i)] =
            chirp_eval(params, grid.instant(static_cast<std::size_t>(i)),
                       grid.period());
    return sig;
}

std::complex<double> lowpass_autocorr(const ZcParams& params, double tau,
                                      double period) {
    PrimeModulus check(params.length()); // NotPrime for composite lengths
    (void)check;
    return {dirichlet_kernel(params.length(), tau / period), 0.0};
}

std::complex<double> lowpass_autocorr_numeric(const ZcParams& params, double tau,
                                              double period,
                                              std::uint32_t oversampling) {
    LowpassWaveform wave(params, period);
    WaveformGrid grid(params.length(), period, oversampling);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double t = grid.instant(i);
        acc += wave.eval(t) * std::conj(wave.eval(t + tau));
    }
    return acc / static_cast<double>(grid.size());
}

std::complex<double> lowpass_crosscorr(const ZcParams& pu, const ZcParams& pv,
                                       double tau, double period,
                                       std::uint32_t integration_steps) {
    if (pu.length() != pv.length())
        throw LengthMismatch("cross-correlation needs equal lengths, got " +
                             std::to_string(pu.length()) + " and " +
                             std::to_string(pv.length()));
    if (integration_steps > 0) {
        LowpassWaveform wu(pu, period);
        LowpassWaveform wv(pv, period);
        std::complex<double> acc{0.0, 0.0};
        for (std::uint32_t i = 0; i < integration_steps; ++i) {
            double t = period * (static_cast<double>(i) /
                                 static_cast<double>(integration_steps));
            acc += wu.eval(t) * std::conj(wv.eval(t + tau));
        }
        return acc / static_cast<double>(integration_steps);
    }
    const std::uint64_t n = pu.length();
    PrimeModulus m(n);
    ComplexSequence su = dft_closed(m, pu.root()).coefficients;
    ComplexSequence sv = dft_closed(m, pv.root()).coefficients;
    const std::int64_t n0 = static_cast<std::int64_t>((n - 1) / 2);
    const double s = tau / period;
    const std::complex<double> step =
        std::polar(1.0, -2.0 * std::numbers::pi * s);
    std::complex<double> phasor =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(n0) * s);
    std::complex<double> acc{0.0, 0.0};
    for (std::int64_t k = -n0; k <= n0; ++k) {
        std::size_t bin = static_cast<std::size_t>(
            k >= 0 ? k : k + static_cast<std::int64_t>(n));
        acc += su.samples[bin] * std::conj(sv.samples[bin]) * phasor;
        phasor *= step;
    }
    return acc / (static_cast<double>(n) * static_cast<double>(n));
}

double peak_amplitude(const ZcParams& params, double period,
                      std::uint32_t oversampling) {
    LowpassWaveform wave(params, period);
    WaveformGrid grid(params.length(), period, oversampling);
    const std::size_t m = grid.size();
    std::vector<double> mag(m);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i)
        mag[static_cast<std::size_t>(i)] =
            std::abs(wave.eval(grid.instant(static_cast<std::size_t>(i))));
    std::size_t best = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (mag[i] > mag[best])
            best = i;
    // Golden-section refinement one grid step either side of the best sample.
    const double step = period / static_cast<double>(m);
    double lo = grid.instant(best) - step;
    double hi = grid.instant(best) + step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = std::abs(wave.eval(a));
    double fb = std::abs(wave.eval(b));
    for (int iter = 0; iter < 120 && hi - lo > 1e-13 * period; ++iter) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = std::abs(wave.eval(b));
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = std::abs(wave.eval(a));
        }
    }
    return std::max({mag[best], fa, fb});
}

double peak_bound_intermediate(std::uint64_t n_zc) {
    const double n = static_cast<double>(n_zc);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < n_zc; ++i)
        acc += 1.0 / (n * std::sin(std::numbers::pi *
                                   (2.0 * static_cast<double>(i) + 1.0) /
                                   (2.0 * n)));
    return acc;
}

double peak_bound(std::uint64_t n_zc) {
    const double n = static_cast<double>(n_zc);
    return (2.0 / std::numbers::pi) *
           (std::log(n) + 2.0 * std::numbers::ln2 + std::numbers::egamma);
}

} // namespace zckit
