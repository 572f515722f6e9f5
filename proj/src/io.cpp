#include "zckit/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace zckit {

std::string format_double(double value) {
    if (value == 0.0)
        value = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_sequence_csv(std::ostream& out, const ComplexSequence& seq) {
    out << "n,re,im\n";
    for (std::size_t n = 0; n < seq.size(); ++n)
        out << n << ',' << format_double(seq.samples[n].real()) << ','
            << format_double(seq.samples[n].imag()) << '\n';
}

void write_dft_csv(std::ostream& out, const DftResult& result) {
    out << "k,re,im\n";
    const auto& samples = result.coefficients.samples;
    for (std::size_t k = 0; k < samples.size(); ++k)
        out << k << ',' << format_double(samples[k].real()) << ','
            << format_double(samples[k].imag()) << '\n';
}

void write_waveform_csv(std::ostream& out, const ContinuousSignal& sig) {
    out << "t,re,im\n";
    for (std::size_t i = 0; i < sig.samples.size(); ++i)
        out << format_double(sig.grid.instant(i)) << ','
            << format_double(sig.samples[i].real()) << ','
            << format_double(sig.samples[i].imag()) << '\n';
}

void write_correlation_csv(std::ostream& out, const std::vector<double>& taus,
                           const std::vector<std::complex<double>>& values) {
    if (taus.size() != values.size())
        throw LengthMismatch("correlation CSV needs one lag per value");
    out << "tau,re,im,abs\n";
    for (std::size_t i = 0; i < taus.size(); ++i)
        out << format_double(taus[i]) << ',' << format_double(values[i].real())
            << ',' << format_double(values[i].imag()) << ','
            << format_double(std::abs(values[i])) << '\n';
}

ComplexSequence read_sequence_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw IoError("empty sequence CSV");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "n,re,im")
        throw IoError("unexpected sequence CSV header: " + line);
    ComplexSequence seq;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field;
        try {
            if (!std::getline(row, field, ','))
                throw IoError("short row");
            if (static_cast<std::size_t>(std::stoull(field)) != expected)
                throw IoError("non-contiguous index");
            if (!std::getline(row, field, ','))
                throw IoError("short row");
            double re = std::stod(field);
            if (!std::getline(row, field, ','))
                throw IoError("short row");
            double im = std::stod(field);
            seq.samples.emplace_back(re, im);
        } catch (const IoError& e) {
            throw IoError(std::string(e.what()) + " in sequence CSV: " + line);
        } catch (const std::exception&) {
            throw IoError("unparsable row in sequence CSV: " + line);
        }
        ++expected;
    }
    return seq;
}

} // namespace zckit
