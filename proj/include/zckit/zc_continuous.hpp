#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zckit/zc_core.hpp"
#include "zckit/zc_dft.hpp"

namespace zckit {

// Uniform sampling grid over one period: size() = oversampling * n_zc points,
// instant(i) = period * i / size(). Chip instants i = oversampling * n land
// bitwise on period * n / n_zc.
class WaveformGrid {
public:
    WaveformGrid(std::uint64_t n_zc, double period, std::uint32_t oversampling);

    std::uint64_t n_zc() const { return n_zc_; }
    double period() const { return period_; }
    std::uint32_t oversampling() const { return oversampling_; }
    std::size_t size() const { return static_cast<std::size_t>(oversampling_) * n_zc_; }

    double instant(std::size_t i) const {
        return period_ * (static_cast<double>(i) / static_cast<double>(size()));
    }

private:
    std::uint64_t n_zc_;
    double period_;
    std::uint32_t oversampling_;
};

enum class SignalKind { chirp, lowpass };

struct ContinuousSignal {
    WaveformGrid grid;
    std::vector<std::complex<double>> samples;
    SignalKind kind;
};

// D_N(z) = sin(pi N z) / (N sin(pi z)); 1 at integers (branch taken when z is
// within 1e-12 of one). Even, period 1, and D_N(n/N) = 0 for n = 1 .. N-1.
double dirichlet_kernel(std::uint64_t n_zc, double z);

// Chirp interpolation x(t) = exp(-j pi u (N (t/T)^2 + t/T)), extended
// periodically. Samples to x_u[n] at t = n T / N for the odd-length q = 0
// form; that precondition is documented, not checked.
std::complex<double> chirp_eval(const ZcParams& params, double t, double period);

// Largest instantaneous frequency of the chirp over one period:
// u (2N + 1) / (2T).
double chirp_max_frequency(const ZcParams& params, double period);

// Lowpass OFDM interpolation of a prime-length sequence:
// x(t) = (1/N) sum_{k=-N0}^{N0} X_u[k] exp(j 2 pi k t / T), N0 = (N-1)/2,
// with negative bins read periodically, X[-k] = X[N-k].
// Holds the spectrum so repeated evaluations cost O(N) each.
class LowpassWaveform {
public:
    // Throws NotPrime for composite lengths; the spectral identities are
    // stated for the q = 0 form, so a nonzero phase parameter is rejected.
    LowpassWaveform(const ZcParams& params, double period);

    std::uint64_t length() const { return params_.length(); }
    std::uint64_t root() const { return params_.root(); }
    double period() const { return period_; }

    const ComplexSequence& spectrum() const { return spectrum_; }
    const ComplexSequence& chips() const { return chips_; }

    // Fourier synthesis path (phasor recurrence, O(N)).
    std::complex<double> eval(double t) const;

    // Dirichlet-kernel interpolation of the chips; same function, different
    // arithmetic. Used as the cross-check path.
    std::complex<double> eval_dirichlet(double t) const;

private:
    ZcParams params_;
    double period_;
    ComplexSequence spectrum_;
    ComplexSequence chips_;
};

// One-shot conveniences over LowpassWaveform.
std::complex<double> lowpass_eval(const ZcParams& params, double t, double period);
std::complex<double> lowpass_eval_dirichlet(const ZcParams& params, double t,
                                            double period);

// Grid synthesis, parallel over grid points.
ContinuousSignal synthesize_lowpass(const ZcParams& params, const WaveformGrid& grid);
ContinuousSignal synthesize_chirp(const ZcParams& params, const WaveformGrid& grid);

// Closed form of the lowpass periodic autocorrelation:
// R(tau) = D_N(tau / T), real, root-independent.
std::complex<double> lowpass_autocorr(const ZcParams& params, double tau,
                                      double period);

// Trapezoid-quadrature estimate of the same integral on an oversampled grid.
std::complex<double> lowpass_autocorr_numeric(const ZcParams& params, double tau,
                                              double period,
                                              std::uint32_t oversampling = 64);

// Periodic cross-correlation of two lowpass waveforms sharing a length.
// integration_steps = 0 evaluates the exact frequency-domain sum
// (1/N^2) sum_k X_u[k] conj(X_v[k]) exp(-j 2 pi k tau / T); a positive value
// switches to trapezoid quadrature with that many points.
std::complex<double> lowpass_crosscorr(const ZcParams& pu, const ZcParams& pv,
                                       double tau, double period,
                                       std::uint32_t integration_steps = 0);

// max_t |x_u(t)|: dense-grid scan at the given oversampling, then
// golden-section refinement around the best grid point.
double peak_amplitude(const ZcParams& params, double period,
                      std::uint32_t oversampling = 64);

// Exact intermediate bound: sum of |D_N| over the half-chip offsets,
// (1/N) sum_{n=0}^{N-1} 1 / sin(pi (2n + 1) / (2N)).
double peak_bound_intermediate(std::uint64_t n_zc);

// Closed-form envelope of the intermediate bound:
// (2/pi) ln N + (4/pi) ln 2 + (2/pi) gamma.
double peak_bound(std::uint64_t n_zc);

} // namespace zckit
