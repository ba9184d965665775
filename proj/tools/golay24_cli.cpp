#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "golay24/golay24.hpp"

namespace {

using namespace golay24;

int run_decode(const std::string& algo, std::size_t list_size, bool shortcut,
               const std::string& source) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (source != "-") {
        file.open(source);
        if (!file) {
            std::cerr << "cannot open " << source << "\n";
            return 3;
        }
        in = &file;
    }
    DecoderKind kind;
    try {
        kind = decoder_from_name(algo == "block" && shortcut ? "block+shortcut" : algo);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    const CodeSpec& spec = golay_spec();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        LlrVector y;
        try {
            y = parse_llr_line(line);
        } catch (const std::exception& e) {
            std::cerr << "line " << line_no << ": " << e.what() << "\n";
            return 1;
        }
        DecodeResult res;
        switch (kind) {
            case DecoderKind::Sc: res = std::move(list_decode(y, spec, 1).front()); break;
            case DecoderKind::List: res = std::move(list_decode(y, spec, list_size).front()); break;
            case DecoderKind::Sequential: res = sequential_decode(y, spec, list_size); break;
            case DecoderKind::Block: res = block_decode(y, false); break;
            case DecoderKind::BlockShortcut: res = block_decode(y, true); break;
            case DecoderKind::Ml: res = ml_decode(y); break;
        }
        double score = res.score + 0.0;  // avoid printing a negative zero
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", score);
        std::cout << format_bits(res.codeword) << ' ' << format_bits(res.info) << ' ' << buf << ' '
                  << res.ops.summations << ' ' << res.ops.comparisons << "\n";
    }
    return 0;
}

bool parse_snr_range(const std::string& text, std::vector<double>& out) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ':')) parts.push_back(cur);
    try {
        if (parts.size() == 1) {
            out.push_back(std::stod(parts[0]));
            return true;
        }
        if (parts.size() == 3) {
            double a = std::stod(parts[0]), step = std::stod(parts[1]), b = std::stod(parts[2]);
            if (step <= 0.0 || b < a) return false;
            for (double v = a; v <= b + 1e-9; v += step) out.push_back(v);
            return true;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

int run_simulate(const std::string& algo, std::size_t list_size, bool shortcut,
                 const std::string& snr_text, std::uint64_t frames, std::uint64_t errors,
                 std::uint64_t max_frames, std::uint64_t seed, int workers, bool all_zero,
                 const std::string& out_path) {
    std::vector<double> snrs;
    if (!parse_snr_range(snr_text, snrs) || snrs.empty()) {
        std::cerr << "bad --snr-db range: " << snr_text << " (want a or a:step:b)\n";
        return 1;
    }
    DecoderKind kind;
    try {
        kind = decoder_from_name(algo == "block" && shortcut ? "block+shortcut" : algo);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    StopRule stop;
    stop.min_frames = frames;
    stop.min_errors = errors;
    stop.max_frames = std::max(max_frames, frames);
    RunOptions opt;
    opt.list_size = list_size;
    opt.all_zero = all_zero;
    opt.workers = workers;
    auto records = run_fer(golay_spec(), kind, snrs, stop, seed, opt);
    if (out_path == "-") {
        write_csv(std::cout, records);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 3;
    }
    write_csv(out, records);
    return out ? 0 : 3;
}

int run_verify() {
    bool all_pass = true;
    for (const CheckResult& c : run_structural_checks()) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        all_pass = all_pass && c.pass;
    }
    for (const CheckResult& c : run_fault_injection_checks()) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        all_pass = all_pass && c.pass;
    }
    return all_pass ? 0 : 2;
}

int run_tables() {
    const CodeSpec& spec = golay_spec();
    BitMatrix g = matrix_from_text(fixtures::kGeneratorText);
    std::cout << "[generator]\n" << matrix_to_text(g);
    std::cout << "[parity-check]\n" << matrix_to_text(g);  // the code is self-dual
    std::cout << "[constraints]\n" << matrix_to_text(spec.v);
    std::cout << "[frozen]\n";
    for (std::size_t i = 0; i < spec.cs.frozen_set.size(); ++i)
        std::cout << (i ? " " : "") << spec.cs.frozen_set[i];
    std::cout << "\n[constraint-equations]\n";
    for (std::size_t pos : spec.cs.frozen_set) {
        std::cout << "u" << pos << " =";
        const auto& deps = spec.cs.constraints.at(pos);
        if (deps.empty()) {
            std::cout << " 0";
        } else {
            for (std::size_t k = 0; k < deps.size(); ++k)
                std::cout << (k ? " + u" : " u") << deps[k];
        }
        std::cout << "\n";
    }
    std::cout << "[schedule]\n";
    for (std::size_t i = 0; i < spec.schedule.size(); ++i)
        std::cout << (i ? "," : "") << spec.schedule[i];
    std::cout << "\n[info-positions]\n";
    for (std::size_t i = 0; i < spec.info_positions.size(); ++i)
        std::cout << (i ? " " : "") << spec.info_positions[i];
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(24,12) extended binary code: decoders, simulation, verification"};
    app.require_subcommand(1);

    std::string algo = "block";
    std::size_t list_size = 16;
    bool shortcut = false;
    std::string llr_source = "-";
    auto* decode = app.add_subcommand("decode", "decode LLR frames, one per line");
    decode->add_option("--algo", algo, "block, seq, list, sc, or ml")->capture_default_str();
    decode->add_option("--list-size", list_size, "list / queue width")->capture_default_str();
    decode->add_flag("--shortcut", shortcut, "enable the hard-decision shortcut (block)");
    decode->add_option("--llr", llr_source, "input path, or - for stdin")->capture_default_str();

    std::string snr_text = "1:1:4";
    std::uint64_t frames = 100000, errors = 200, max_frames = 10000000, seed = 1;
    int workers = 1;
    bool all_zero = false;
    std::string out_path = "-";
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo FER and complexity run");
    simulate->add_option("--snr-db", snr_text, "Eb/N0 in dB: a single value or a:step:b")
        ->capture_default_str();
    simulate->add_option("--frames", frames, "minimum frames per point")->capture_default_str();
    simulate->add_option("--errors", errors, "minimum frame errors per point")
        ->capture_default_str();
    simulate->add_option("--max-frames", max_frames, "hard frame cap per point")
        ->capture_default_str();
    simulate->add_option("--seed", seed, "base RNG seed")->capture_default_str();
    simulate->add_option("--algo", algo, "block, seq, list, sc, or ml")->capture_default_str();
    simulate->add_option("--list-size", list_size, "list / queue width")->capture_default_str();
    simulate->add_flag("--shortcut", shortcut, "enable the hard-decision shortcut (block)");
    simulate->add_option("--workers", workers, "worker threads")->capture_default_str();
    simulate->add_flag("--all-zero", all_zero, "transmit the all-zero codeword");
    simulate->add_option("--out", out_path, "CSV path, or - for stdout")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "structural checks and fault-injection self-tests");
    auto* tables = app.add_subcommand("tables", "print generator, constraints, schedule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (decode->parsed()) return run_decode(algo, list_size, shortcut, llr_source);
        if (simulate->parsed())
            return run_simulate(algo, list_size, shortcut, snr_text, frames, errors, max_frames,
                                seed, workers, all_zero, out_path);
        if (verify->parsed()) return run_verify();
        if (tables->parsed()) return run_tables();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
