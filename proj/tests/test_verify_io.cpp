#include <algorithm>
#include <complex>
#include <sstream>

#include "doctest.h"
#include "zckit/io.hpp"
#include "zckit/verify.hpp"

using namespace zckit;
using cd = std::complex<double>;

namespace {

const CheckResult* find_check(const std::vector<CheckResult>& checks,
                              const std::string& name) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("identity checks pass for a small prime") {
    auto checks = run_identity_checks(7);
    CHECK(all_passed(checks));
    for (const auto& c : checks)
        CHECK_FALSE(c.skipped);
    const CheckResult* chi = find_check(checks, "chi_form_agreement");
    REQUIRE(chi != nullptr);
    CHECK(chi->pass);
}

TEST_CASE("identity checks pass for a prime that is 1 mod 4") {
    auto checks = run_identity_checks(13);
    CHECK(all_passed(checks));
    const CheckResult* chi = find_check(checks, "chi_form_agreement");
    REQUIRE(chi != nullptr);
    CHECK(chi->skipped);
    CHECK(chi->skip_reason == "length is 1 mod 4");
}

TEST_CASE("identity checks skip the spectral family for composite lengths") {
    auto checks = run_identity_checks(9);
    CHECK(all_passed(checks));
    const CheckResult* gauss = find_check(checks, "gauss_sum_closed_form");
    REQUIRE(gauss != nullptr);
    CHECK(gauss->skipped);
    CHECK(gauss->skip_reason == "length is not an odd prime");
    // The correlation identities still run and pass.
    const CheckResult* flat = find_check(checks, "cross_correlation_flatness");
    REQUIRE(flat != nullptr);
    CHECK_FALSE(flat->skipped);
    CHECK(flat->pass);
    const CheckResult* eq4 = find_check(checks, "eq4_factorization");
    REQUIRE(eq4 != nullptr);
    CHECK(eq4->pass);
}

TEST_CASE("identity checks honor the pair cap") {
    VerifyOptions options;
    options.max_cross_pairs = 3;
    auto checks = run_identity_checks(11, options);
    CHECK(all_passed(checks));
}

TEST_CASE("format_double") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-3.25) == "-3.25");
}

TEST_CASE("sequence CSV round-trips byte for byte") {
    ComplexSequence seq = generate(ZcParams(11, 3, -2));
    std::ostringstream first;
    write_sequence_csv(first, seq);

    std::istringstream in(first.str());
    ComplexSequence back = read_sequence_csv(in);
    REQUIRE(back.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
        CHECK(back.samples[i] == seq.samples[i]);

    std::ostringstream second;
    write_sequence_csv(second, back);
    CHECK(second.str() == first.str());
}

TEST_CASE("sequence CSV layout") {
    ComplexSequence seq;
    seq.samples = {cd{1.0, 0.0}, cd{-0.5, 0.25}};
    std::ostringstream out;
    write_sequence_csv(out, seq);
    CHECK(out.str() == "n,re,im\n0,1,0\n1,-0.5,0.25\n");
}

TEST_CASE("csv readers reject malformed input") {
    {
        std::istringstream in("");
        CHECK_THROWS_AS(read_sequence_csv(in), IoError);
    }
    {
        std::istringstream in("wrong,header,line\n0,1,0\n");
        CHECK_THROWS_AS(read_sequence_csv(in), IoError);
    }
    {
        std::istringstream in("n,re,im\n0,1\n");
        CHECK_THROWS_AS(read_sequence_csv(in), IoError);
    }
    {
        std::istringstream in("n,re,im\n5,1,0\n");
        CHECK_THROWS_AS(read_sequence_csv(in), IoError);
    }
    {
        std::istringstream in("n,re,im\n0,one,0\n");
        CHECK_THROWS_AS(read_sequence_csv(in), IoError);
    }
}

TEST_CASE("dft and waveform CSV headers") {
    DftResult spectrum = dft_closed(PrimeModulus(5), 1);
    std::ostringstream dft_out;
    write_dft_csv(dft_out, spectrum);
    std::string dft_text = dft_out.str();
    CHECK(dft_text.substr(0, 8) == "k,re,im\n");
    CHECK(std::count(dft_text.begin(), dft_text.end(), '\n') == 6);

    WaveformGrid grid(5, 1.0, 2);
    ContinuousSignal sig = synthesize_lowpass(ZcParams(5, 4), grid);
    std::ostringstream wave_out;
    write_waveform_csv(wave_out, sig);
    std::string wave_text = wave_out.str();
    CHECK(wave_text.substr(0, 8) == "t,re,im\n");
    CHECK(std::count(wave_text.begin(), wave_text.end(), '\n') == 11);
}

TEST_CASE("correlation CSV carries magnitudes") {
    std::vector<double> taus = {0.0, 1.0};
    std::vector<cd> values = {cd{3.0, 4.0}, cd{1.0, 0.0}};
    std::ostringstream out;
    write_correlation_csv(out, taus, values);
    CHECK(out.str() == "tau,re,im,abs\n0,3,4,5\n1,1,0,1\n");
    std::vector<double> short_taus = {0.0};
    CHECK_THROWS_AS(write_correlation_csv(out, short_taus, values),
                    LengthMismatch);
}
