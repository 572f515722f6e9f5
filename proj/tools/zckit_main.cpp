// zckit command line: generate, transform, correlate, synthesize, verify,
// cache Legendre tables and benchmark the closed forms.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
// 3 I/O failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zckit/io.hpp"
#include "zckit/number_theory.hpp"
#include "zckit/serial.hpp"
#include "zckit/verify.hpp"
#include "zckit/zc_continuous.hpp"
#include "zckit/zc_core.hpp"
#include "zckit/zc_dft.hpp"

namespace {

using json = nlohmann::ordered_json;
using cd = std::complex<double>;

volatile double g_sink = 0.0;
int g_exit = 0;

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw zckit::IoError("cannot open " + path + " for writing");
    out << text;
    if (!out)
        throw zckit::IoError("failed writing " + path);
}

json samples_json(const std::vector<cd>& samples) {
    json arr = json::array();
    for (cd z : samples)
        arr.push_back({z.real(), z.imag()});
    return arr;
}

std::string default_table_path(std::uint64_t n) {
    std::string name = "legendre_" + std::to_string(n) + ".zclt";
    if (const char* dir = std::getenv("ZCKIT_TABLE_DIR"); dir && *dir)
        return std::string(dir) + "/" + name;
    return name;
}

template <class F>
double median_ns(F&& f, int iterations, int warmup, int batch) {
    for (int i = 0; i < warmup; ++i)
        f();
    std::vector<double> samples(static_cast<std::size_t>(iterations));
    for (int i = 0; i < iterations; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        for (int b = 0; b < batch; ++b)
            f();
        auto t1 = std::chrono::steady_clock::now();
        samples[static_cast<std::size_t>(i)] =
            std::chrono::duration<double, std::nano>(t1 - t0).count() / batch;
    }
    auto mid = samples.begin() + samples.size() / 2;
    std::nth_element(samples.begin(), mid, samples.end());
    return *mid;
}

struct GenArgs {
    std::uint64_t n = 0;
    std::uint64_t u = 0;
    std::int64_t q = 0;
    std::string format = "csv";
    std::string out;
};

void run_gen(const GenArgs& a) {
    zckit::ZcParams params(a.n, a.u, a.q);
    zckit::ComplexSequence seq = zckit::generate(params);
    if (a.format == "json") {
        json j;
        j["schema_version"] = 1;
        j["kind"] = "sequence";
        j["n"] = a.n;
        j["u"] = a.u;
        j["q"] = a.q;
        j["samples"] = samples_json(seq.samples);
        emit(a.out, j.dump(2) + "\n");
    } else {
        std::ostringstream ss;
        zckit::write_sequence_csv(ss, seq);
        emit(a.out, ss.str());
    }
}

struct DftArgs {
    std::uint64_t n = 0;
    std::uint64_t u = 0;
    std::string method = "closed";
    bool compare = false;
    std::string format = "csv";
    std::string out;
};

void run_dft(const DftArgs& a) {
    if (a.compare) {
        zckit::PrimeModulus m(a.n);
        zckit::DftResult closed = zckit::dft_closed(m, a.u);
        zckit::DftResult naive =
            zckit::dft_naive(zckit::generate(zckit::ZcParams(a.n, a.u)));
        double max_abs = 0.0;
        double max_rel = 0.0;
        for (std::size_t k = 0; k < a.n; ++k) {
            double diff = std::abs(closed.coefficients.samples[k] -
                                   naive.coefficients.samples[k]);
            max_abs = std::max(max_abs, diff);
            double mag = std::abs(naive.coefficients.samples[k]);
            if (mag > 0.0)
                max_rel = std::max(max_rel, diff / mag);
        }
        json j;
        j["schema_version"] = 1;
        j["kind"] = "dft_comparison";
        j["n"] = a.n;
        j["u"] = a.u;
        j["methods"] = {"closed", "naive"};
        j["max_abs_error"] = max_abs;
        j["max_rel_error"] = max_rel;
        emit(a.out, j.dump(2) + "\n");
        return;
    }
    zckit::DftResult result;
    if (a.method == "naive") {
        result = zckit::dft_naive(zckit::generate(zckit::ZcParams(a.n, a.u)));
    } else if (a.method == "closed") {
        result = zckit::dft_closed(zckit::PrimeModulus(a.n), a.u);
    } else { // chi
        zckit::PrimeModulus m(a.n);
        result.method = zckit::DftMethod::chi_form;
        result.coefficients.origin = zckit::SequenceOrigin::dft;
        result.coefficients.samples.resize(a.n);
        for (std::uint64_t k = 0; k < a.n; ++k)
            result.coefficients.samples[k] = zckit::dft_chi_form(m, a.u, k);
    }
    if (a.format == "json") {
        json j;
        j["schema_version"] = 1;
        j["kind"] = "dft";
        j["n"] = a.n;
        j["u"] = a.u;
        j["method"] = a.method;
        j["coefficients"] = samples_json(result.coefficients.samples);
        emit(a.out, j.dump(2) + "\n");
    } else {
        std::ostringstream ss;
        zckit::write_dft_csv(ss, result);
        emit(a.out, ss.str());
    }
}

struct CorrArgs {
    std::uint64_t n = 0;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    bool has_v = false;
    std::int64_t q_u = 0;
    std::int64_t q_v = 0;
    bool continuous = false;
    double period = 1.0;
    std::uint32_t steps = 128;
    std::string out;
};

void run_corr(const CorrArgs& a) {
    std::vector<double> taus;
    std::vector<cd> values;
    if (a.continuous) {
        zckit::ZcParams pu(a.n, a.u, a.q_u);
        for (std::uint32_t j = 0; j < a.steps; ++j) {
            double tau = a.period * (static_cast<double>(j) /
                                     static_cast<double>(a.steps));
            taus.push_back(tau);
            if (a.has_v)
                values.push_back(zckit::lowpass_crosscorr(
                    pu, zckit::ZcParams(a.n, a.v, a.q_v), tau, a.period));
            else
                values.push_back(zckit::lowpass_autocorr(pu, tau, a.period));
        }
    } else {
        zckit::ZcParams pu(a.n, a.u, a.q_u);
        if (a.has_v)
            values = zckit::cross_correlation_sweep(
                pu, zckit::ZcParams(a.n, a.v, a.q_v));
        else
            values = zckit::autocorrelation_sweep(pu);
        for (std::size_t tau = 0; tau < values.size(); ++tau)
            taus.push_back(static_cast<double>(tau));
    }
    std::ostringstream ss;
    zckit::write_correlation_csv(ss, taus, values);
    emit(a.out, ss.str());
}

struct WaveArgs {
    std::uint64_t n = 0;
    std::uint64_t u = 0;
    std::string kind = "lowpass";
    double period = 1.0;
    std::uint32_t oversampling = 16;
    std::string out;
};

void run_wave(const WaveArgs& a) {
    zckit::ZcParams params(a.n, a.u);
    zckit::WaveformGrid grid(a.n, a.period, a.oversampling);
    zckit::ContinuousSignal sig = a.kind == "chirp"
                                      ? zckit::synthesize_chirp(params, grid)
                                      : zckit::synthesize_lowpass(params, grid);
    std::ostringstream ss;
    zckit::write_waveform_csv(ss, sig);
    emit(a.out, ss.str());
}

struct VerifyArgs {
    std::uint64_t n = 0;
    zckit::VerifyOptions options;
    std::string out;
};

void run_verify(const VerifyArgs& a) {
    std::vector<zckit::CheckResult> checks =
        zckit::run_identity_checks(a.n, a.options);
    json arr = json::array();
    for (const auto& c : checks) {
        json entry;
        entry["name"] = c.name;
        if (c.skipped) {
            entry["skipped"] = true;
            entry["reason"] = c.skip_reason;
        } else {
            entry["max_error"] = c.max_error;
            entry["tolerance"] = c.tolerance;
            entry["pass"] = c.pass;
        }
        arr.push_back(entry);
    }
    bool ok = zckit::all_passed(checks);
    json j;
    j["schema_version"] = 1;
    j["kind"] = "verify";
    j["n"] = a.n;
    j["all_pass"] = ok;
    j["checks"] = arr;
    emit(a.out, j.dump(2) + "\n");
    if (!ok)
        g_exit = 1;
}

struct TableArgs {
    std::uint64_t n = 0;
    std::string out;
};

void run_table(const TableArgs& a) {
    zckit::PrimeModulus m(a.n);
    std::string path = a.out.empty() ? default_table_path(a.n) : a.out;
    std::string action = "built";
    if (std::filesystem::exists(path)) {
        try {
            zckit::LegendreTable cached = zckit::LegendreTable::load(path);
            if (cached.modulus() == m)
                action = "cached";
        } catch (const zckit::IoError&) {
            // stale or corrupt; fall through and rebuild
        }
    }
    zckit::LegendreTable table = action == "cached"
                                     ? zckit::LegendreTable::load(path)
                                     : zckit::build_legendre_table(m);
    if (action == "built")
        table.save(path);
    json j;
    j["schema_version"] = 1;
    j["kind"] = "table";
    j["n"] = a.n;
    j["path"] = path;
    j["payload_bits"] = table.payload_bit_count();
    j["payload_bytes"] = table.payload().size();
    j["action"] = action;
    std::cout << j.dump(2) << "\n";
}

struct BenchArgs {
    std::uint64_t n = 0;
    std::uint64_t u = 1;
    int iterations = 128;
    int warmup = 8;
    std::string out;
};

void run_bench(const BenchArgs& a) {
    zckit::PrimeModulus m(a.n);
    zckit::LegendreTable table = zckit::build_legendre_table(m);
    zckit::ComplexSequence x = zckit::generate(zckit::ZcParams(a.n, a.u));

    double closed_x0 = median_ns(
        [&] { g_sink = g_sink + zckit::dft_zero_closed(m, a.u, table).real(); },
        a.iterations, a.warmup, 4096);
    double direct_x0 = median_ns(
        [&] { g_sink = g_sink + zckit::dft_zero_direct(m, a.u).real(); },
        a.iterations, a.warmup, 4);
    double closed_full = median_ns(
        [&] {
            g_sink = g_sink +
                     zckit::dft_closed(m, a.u, table)
                         .coefficients.samples[0]
                         .real();
        },
        a.iterations, a.warmup, 4);
    double naive_full = median_ns(
        [&] {
            g_sink =
                g_sink + zckit::dft_naive(x).coefficients.samples[0].real();
        },
        a.iterations, a.warmup / 2 + 1, 1);

    json j;
    j["schema_version"] = 1;
    j["kind"] = "bench";
    j["n"] = a.n;
    j["u"] = a.u;
    j["iterations"] = a.iterations;
    j["warmup"] = a.warmup;
    j["median_ns"] = {{"closed_x0", closed_x0},
                      {"direct_x0", direct_x0},
                      {"closed_full", closed_full},
                      {"naive_full", naive_full}};
    j["speedup"] = {{"closed_x0_vs_direct_x0", direct_x0 / closed_x0},
                    {"closed_full_vs_naive_full", naive_full / closed_full}};
    emit(a.out, j.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zadoff-Chu sequence toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate one period of a sequence");
    gen_cmd->add_option("--n", gen.n, "Sequence length")->required();
    gen_cmd->add_option("--u", gen.u, "Root index")->required();
    gen_cmd->add_option("--q", gen.q, "Phase parameter");
    gen_cmd->add_option("--format", gen.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    gen_cmd->add_option("-o,--output", gen.out, "Output file (default stdout)");
    gen_cmd->callback([&] { run_gen(gen); });

    DftArgs dft;
    auto* dft_cmd = app.add_subcommand("dft", "Spectrum of a sequence");
    dft_cmd->add_option("--n", dft.n, "Sequence length")->required();
    dft_cmd->add_option("--u", dft.u, "Root index")->required();
    dft_cmd->add_option("--method", dft.method, "naive, closed or chi")
        ->check(CLI::IsMember({"naive", "closed", "chi"}));
    dft_cmd->add_flag("--compare", dft.compare,
                      "Report closed-vs-naive error instead of coefficients");
    dft_cmd->add_option("--format", dft.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    dft_cmd->add_option("-o,--output", dft.out, "Output file (default stdout)");
    dft_cmd->callback([&] { run_dft(dft); });

    CorrArgs corr;
    auto* corr_cmd = app.add_subcommand("corr", "Periodic correlation sweep");
    corr_cmd->add_option("--n", corr.n, "Sequence length")->required();
    corr_cmd->add_option("--u", corr.u, "First root")->required();
    auto* vopt = corr_cmd->add_option("--v", corr.v, "Second root");
    corr_cmd->add_option("--q-u", corr.q_u, "Phase parameter of the first root");
    corr_cmd->add_option("--q-v", corr.q_v, "Phase parameter of the second root");
    corr_cmd->add_flag("--continuous", corr.continuous,
                       "Correlate the lowpass waveforms instead of the chips");
    corr_cmd->add_option("--period", corr.period, "Waveform period");
    corr_cmd->add_option("--steps", corr.steps,
                         "Lag samples per period in continuous mode");
    corr_cmd->add_option("-o,--output", corr.out, "Output file (default stdout)");
    corr_cmd->callback([&] {
        corr.has_v = vopt->count() > 0;
        run_corr(corr);
    });

    WaveArgs wave;
    auto* wave_cmd = app.add_subcommand("wave", "Sample a continuous waveform");
    wave_cmd->add_option("--n", wave.n, "Sequence length")->required();
    wave_cmd->add_option("--u", wave.u, "Root index")->required();
    wave_cmd->add_option("--kind", wave.kind, "lowpass or chirp")
        ->check(CLI::IsMember({"lowpass", "chirp"}));
    wave_cmd->add_option("--period", wave.period, "Waveform period");
    wave_cmd->add_option("--oversampling", wave.oversampling,
                         "Grid points per chip");
    wave_cmd->add_option("-o,--output", wave.out, "Output file (default stdout)");
    wave_cmd->callback([&] { run_wave(wave); });

    VerifyArgs verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the identity checks for a length");
    verify_cmd->add_option("--n", verify.n, "Sequence length")->required();
    verify_cmd->add_option("--oversampling", verify.options.oversampling,
                           "Grid points per chip for waveform checks");
    verify_cmd->add_option("--tau-steps", verify.options.autocorr_tau_steps,
                           "Lag samples for the numeric autocorrelation check");
    verify_cmd->add_option("--max-pairs", verify.options.max_cross_pairs,
                           "Cap on cross-correlation root pairs (0 = all)");
    verify_cmd->add_option("--seed", verify.options.rng_seed,
                           "Seed for random evaluation points");
    verify_cmd->add_option("-o,--output", verify.out,
                           "Output file (default stdout)");
    verify_cmd->callback([&] { run_verify(verify); });

    TableArgs table;
    auto* table_cmd =
        app.add_subcommand("table", "Build or reuse a cached Legendre table");
    table_cmd->add_option("--n", table.n, "Odd prime modulus")->required();
    table_cmd->add_option("-o,--output", table.out,
                          "Table path (default ZCKIT_TABLE_DIR or cwd)");
    table_cmd->callback([&] { run_table(table); });

    BenchArgs bench;
    auto* bench_cmd =
        app.add_subcommand("bench", "Time closed forms against direct sums");
    bench_cmd->add_option("--n", bench.n, "Odd prime length")->required();
    bench_cmd->add_option("--u", bench.u, "Root index");
    bench_cmd->add_option("--iterations", bench.iterations, "Timing samples")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--warmup", bench.warmup, "Warmup runs");
    bench_cmd->add_option("-o,--output", bench.out,
                          "Output file (default stdout)");
    bench_cmd->callback([&] { run_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const zckit::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const zckit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
