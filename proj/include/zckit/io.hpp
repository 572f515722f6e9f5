#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zckit/zc_continuous.hpp"
#include "zckit/zc_core.hpp"
#include "zckit/zc_dft.hpp"

namespace zckit {

// Shortest exact decimal form a binary64 survives round-tripping (%.17g),
// with negative zero normalized to "0".
std::string format_double(double value);

// CSV writers. All doubles go through format_double, so writing, reading and
// rewriting a file reproduces it byte for byte.
void write_sequence_csv(std::ostream& out, const ComplexSequence& seq);   // n,re,im
void write_dft_csv(std::ostream& out, const DftResult& result);          // k,re,im
void write_waveform_csv(std::ostream& out, const ContinuousSignal& sig); // t,re,im
void write_correlation_csv(std::ostream& out, const std::vector<double>& taus,
                           const std::vector<std::complex<double>>& values);
                                                                  // tau,re,im,abs

// Parses what write_sequence_csv emits. Throws IoError on malformed input.
ComplexSequence read_sequence_csv(std::istream& in);

} // namespace zckit
