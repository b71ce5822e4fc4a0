// dnacodec command line tool: encode binary payloads as constrained DNA
// strands, decode them back, inject channel errors, reproduce the bound and
// rate tables, and run the verification suites.

#include <CLI11.hpp>

#include <dnacodec/dnacodec.hpp>
#include <dnacodec/verify.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

namespace {

using namespace dnacodec;

struct JobConfig {
    std::size_t n = 200;
    unsigned ell = 4;
    std::string eps = "0.1";
    std::string rll_mode = "replace";
    std::string gc_mode = "d";
    std::string protect = "none";
    std::string format = "bin";
    std::string input = "-";
    std::string output = "-";
};

std::vector<std::uint8_t> read_payload(const JobConfig& cfg) {
    std::string raw;
    if (cfg.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        raw = ss.str();
    } else {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) throw Error("cannot open input file: " + cfg.input);
        std::ostringstream ss;
        ss << in.rdbuf();
        raw = ss.str();
    }
    if (cfg.format == "hex") return hex_to_bytes(raw);
    return std::vector<std::uint8_t>(raw.begin(), raw.end());
}

void write_payload(const JobConfig& cfg, const std::vector<std::uint8_t>& bytes) {
    std::string text = cfg.format == "hex"
                           ? bytes_to_hex(bytes) + "\n"
                           : std::string(bytes.begin(), bytes.end());
    if (cfg.output == "-") {
        std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + cfg.output);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    auto consume = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (path == "-") {
        consume(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open input file: " + path);
        consume(in);
    }
    return lines;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    auto emit = [&](std::ostream& out) {
        for (const std::string& l : lines) out << l << '\n';
    };
    if (path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    emit(out);
}

/// The strand codec selected by the flags.
struct Pipeline {
    std::size_t payload_bits;
    std::size_t strand_length;
    std::function<Word(const BitWord&)> encode;
    std::function<BitWord(const Word&)> decode;
};

Pipeline make_pipeline(const JobConfig& cfg) {
    Ratio eps = Ratio::parse(cfg.eps);
    if (cfg.protect != "none" && cfg.protect != "indel" && cfg.protect != "edit")
        throw Error("--protect must be none, indel, or edit");
    if (cfg.rll_mode != "enum" && cfg.rll_mode != "replace")
        throw Error("--rll-mode must be enum or replace");

    if (cfg.ell == 0) {
        // GC balancing only
        if (cfg.protect != "none")
            throw Error("error protection requires a run constraint (--ell >= 3)");
        if (cfg.gc_mode == "c") {
            auto codec = std::make_shared<GcTemplateCodec>(cfg.n, eps);
            return {codec->payload_bits(), cfg.n,
                    [codec](const BitWord& x) { return codec->encode(x); },
                    [codec](const Word& w) { return codec->decode_joint(w); }};
        }
        if (cfg.gc_mode == "d") {
            auto codec = std::make_shared<GcFlipCodec>(cfg.n, eps);
            return {codec->payload_bits(), cfg.n,
                    [codec](const BitWord& x) { return codec->encode(x); },
                    [codec](const Word& w) { return codec->decode(w); }};
        }
        throw Error("--gc-mode must be c or d");
    }

    RllMode mode = cfg.rll_mode == "enum" ? RllMode::Enum : RllMode::Replace;
    auto params = ConstrainedParams::make(cfg.n, cfg.ell, eps, mode);
    if (cfg.protect == "indel") {
        auto codec = std::make_shared<IndelCodec>(params);
        return {codec->payload_bits(), codec->codeword_length(),
                [codec](const BitWord& x) { return codec->encode(x); },
                [codec](const Word& w) { return codec->decode(w); }};
    }
    if (cfg.protect == "edit") {
        auto codec = std::make_shared<EditCodec>(params);
        return {codec->payload_bits(), codec->codeword_length(),
                [codec](const BitWord& x) { return codec->encode(x); },
                [codec](const Word& w) { return codec->decode(w); }};
    }
    auto codec = std::make_shared<ConstrainedCodec>(params);
    return {codec->payload_bits(), codec->codeword_length(),
            [codec](const BitWord& x) { return codec->encode(x); },
            [codec](const Word& w) { return codec->decode(w); }};
}

int cmd_encode(const JobConfig& cfg) {
    Pipeline pipe = make_pipeline(cfg);
    std::vector<std::uint8_t> payload = read_payload(cfg);
    std::vector<std::string> lines;
    for (const BitWord& chunk : frame_payload(payload, pipe.payload_bits))
        lines.push_back(render_dna(pipe.encode(chunk)));
    write_lines(cfg.output, lines);
    return 0;
}

int cmd_decode(const JobConfig& cfg) {
    Pipeline pipe = make_pipeline(cfg);
    std::vector<BitWord> chunks;
    for (const std::string& line : read_lines(cfg.input))
        chunks.push_back(pipe.decode(parse_dna(line)));
    write_payload(cfg, deframe_payload(chunks, pipe.payload_bits));
    return 0;
}

int cmd_corrupt(const std::string& input, const std::string& output,
                const std::string& kind_name, std::uint64_t seed) {
    BallKind kind;
    if (kind_name == "D")
        kind = BallKind::Deletion;
    else if (kind_name == "I")
        kind = BallKind::Insertion;
    else if (kind_name == "S")
        kind = BallKind::Substitution;
    else if (kind_name == "edit")
        kind = BallKind::Edit;
    else if (kind_name == "indel")
        kind = BallKind::Indel;
    else
        throw Error("--kind must be D, I, S, indel, or edit");

    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    for (const std::string& line : read_lines(input)) {
        auto [corrupted, spec] = inject_random(parse_dna(line), kind, rng);
        (void)spec;
        out.push_back(render_dna(corrupted));
    }
    write_lines(output, out);
    std::cerr << "corrupt: kind=" << kind_name << " seed=" << seed
              << " strands=" << out.size() << "\n";
    return 0;
}

int cmd_tables(bool csv) {
    const unsigned prior[4] = {11, 39, 148, 581};
    std::ostringstream os;
    if (csv) {
        os << "ell,max_n,max_n_prior\n";
        for (unsigned ell = 2; ell <= 5; ++ell)
            os << ell << "," << rll_replace_max_len(ell, 4, false) << "," << prior[ell - 2]
               << "\n";
        os << "\nn,capacity,encoder_rate,reference_rate\n";
        const double ref[3] = {1.81, 1.92, 1.94};
        const std::size_t ns[3] = {100, 200, 300};
        for (int i = 0; i < 3; ++i) {
            auto p = ConstrainedParams::make(ns[i], 4, Ratio(1, 10), RllMode::Replace);
            os << ns[i] << "," << finite_rate(ns[i], 4, 4) << "," << encoder_rate(p) << ","
               << ref[i] << "\n";
        }
    } else {
        os << "Maximum block length for one redundant symbol (q = 4)\n";
        os << "  ell   this encoder   prior sequence-replacement encoders\n";
        for (unsigned ell = 2; ell <= 5; ++ell) {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "  %3u   %12zu   %8u\n", ell,
                          rll_replace_max_len(ell, 4, false), prior[ell - 2]);
            os << buf;
        }
        os << "\nRates at eps = 1/10, ell = 4 (bits/nt)\n";
        os << "    n     capacity    encoder rate   reference rate\n";
        const double ref[3] = {1.81, 1.92, 1.94};
        const std::size_t ns[3] = {100, 200, 300};
        for (int i = 0; i < 3; ++i) {
            auto p = ConstrainedParams::make(ns[i], 4, Ratio(1, 10), RllMode::Replace);
            char buf[96];
            std::snprintf(buf, sizeof(buf), "  %3zu   %10.5f   %12.5f   %14.2f\n", ns[i],
                          finite_rate(ns[i], 4, 4), encoder_rate(p), ref[i]);
            os << buf;
        }
    }
    std::cout << os.str();
    return 0;
}

int cmd_verify(const std::string& suite, bool fast, std::uint64_t seed) {
    verify::Options opt;
    opt.fast = fast;
    opt.seed = seed;
    unsigned failures = 0;
    for (const verify::Check& c : verify::suite(suite, opt)) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        failures += !c.pass;
    }
    if (failures) {
        std::cout << failures << " check(s) failed\n";
        return 2;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained DNA strand codec with single-indel/edit protection"};
    app.require_subcommand(1);

    JobConfig cfg;
    auto add_codec_flags = [&cfg](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "codeword length in nucleotides (constrained stage)");
        sub->add_option("--ell", cfg.ell,
                        "maximum homopolymer run; 0 selects GC balancing only");
        sub->add_option("--eps", cfg.eps, "GC balance tolerance, \"p/q\" or decimal");
        sub->add_option("--rll-mode", cfg.rll_mode, "runlength backend: enum | replace");
        sub->add_option("--gc-mode", cfg.gc_mode, "GC-only codec when --ell 0: c | d");
        sub->add_option("--protect", cfg.protect, "error protection: none | indel | edit");
        sub->add_option("--format", cfg.format, "payload format: bin | hex");
        sub->add_option("-i,--input", cfg.input, "payload or strand file ('-' for stdio)");
        sub->add_option("-o,--output", cfg.output, "output file ('-' for stdio)");
    };

    CLI::App* enc = app.add_subcommand("encode", "payload bytes -> DNA strands");
    add_codec_flags(enc);
    CLI::App* dec = app.add_subcommand("decode", "DNA strands -> payload bytes");
    add_codec_flags(dec);

    CLI::App* cor = app.add_subcommand("corrupt", "inject one random error per strand");
    std::string kind = "edit";
    std::uint64_t seed = std::random_device{}();
    std::string cor_in = "-", cor_out = "-";
    cor->add_option("--kind", kind, "error kind: D | I | S | indel | edit");
    cor->add_option("--seed", seed, "RNG seed (echoed for reproducibility)");
    cor->add_option("-i,--input", cor_in, "strand file ('-' for stdin)");
    cor->add_option("-o,--output", cor_out, "output strand file ('-' for stdout)");

    CLI::App* tab = app.add_subcommand("tables", "print block-length bounds and rates");
    bool csv = false;
    tab->add_flag("--csv", csv, "emit CSV instead of aligned text");

    CLI::App* ver = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    bool fast = false;
    std::uint64_t vseed = 0x5eedf00d;
    ver->add_option("--suite", suite,
                    "alphabet | channel | rll | gc | constrained | vt | ecc | all");
    ver->add_flag("--fast", fast, "reduced bounds and sampling");
    ver->add_option("--seed", vseed, "RNG seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enc->parsed()) return cmd_encode(cfg);
        if (dec->parsed()) return cmd_decode(cfg);
        if (cor->parsed()) return cmd_corrupt(cor_in, cor_out, kind, seed);
        if (tab->parsed()) return cmd_tables(csv);
        if (ver->parsed()) return cmd_verify(suite, fast, vseed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
