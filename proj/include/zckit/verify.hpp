#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zckit {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string skip_reason;
};

struct VerifyOptions {
    // Grid density for the continuous-waveform checks.
    std::uint32_t oversampling = 32;
    // Lag sample count for the numeric lowpass autocorrelation check.
    std::uint32_t autocorr_tau_steps = 64;
    // Cap on cross-correlation root pairs; 0 means every coprime pair.
    std::uint64_t max_cross_pairs = 0;
    // Random evaluation points are drawn deterministically from this seed.
    std::uint64_t rng_seed = 0x5eedULL;
};

// Runs every identity the library promises against length n. Checks whose
// hypotheses n does not satisfy come back skipped with a reason rather than
// failed (composite lengths skip the DFT family, lengths 1 mod 4 skip the
// chi form).
std::vector<CheckResult> run_identity_checks(std::uint64_t n_zc,
                                             const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);

} // namespace zckit
