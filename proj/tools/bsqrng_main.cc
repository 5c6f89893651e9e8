// Copyright 2026 The bsqrng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bsqrng/cli_support.h"
#include "bsqrng/entropy.h"
#include "bsqrng/fock.h"
#include "bsqrng/interferometer.h"
#include "bsqrng/kernels.h"
#include "bsqrng/nist.h"
#include "bsqrng/permanent.h"
#include "bsqrng/pipeline.h"
#include "bsqrng/rng.h"

namespace fs = std::filesystem;
using namespace bsqrng;

namespace {

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void record_input(RunManifest &m, const fs::path &p) {
    m.input_hashes[p.string()] = file_content_hash(p);
}

void record_output(RunManifest &m, const fs::path &p) {
    m.output_hashes[p.string()] = file_content_hash(p);
}

std::ofstream open_output(const fs::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    return out;
}

struct GenArgs {
    std::string config;
    long long bits = 0;
    std::string out;
    std::string format = "packed";
    std::optional<uint64_t> seed;
};

int cmd_gen(const GenArgs &args) {
    Stopwatch clock;
    if (args.bits <= 0) {
        throw ConfigError("--bits must be a positive integer");
    }
    BitFormat format = parse_bit_format(args.format);
    LoadedConfig cfg = load_generator_config(args.config);
    if (args.seed) {
        cfg.generator.seed = *args.seed;
        cfg.resolved["seed"] = *args.seed;
    }
    BitStream stream = generate_bits(cfg.generator, static_cast<std::size_t>(args.bits));
    write_bits(args.out, stream.bits, format);

    RunManifest m;
    m.command = "gen";
    m.config = cfg.resolved;
    m.config["bits"] = args.bits;
    m.config["format"] = args.format;
    m.config["unitary_id"] = stream.meta.unitary_id;
    m.config["sample_pairs_consumed"] = stream.meta.sample_pairs_consumed;
    m.seed = cfg.generator.seed;
    for (const auto &p : cfg.referenced_files) {
        record_input(m, p);
    }
    record_output(m, args.out);
    if (format == BitFormat::kPacked) {
        record_output(m, packed_sidecar_path(args.out));
    }
    m.duration_seconds = clock.seconds();
    write_manifest(args.out, m);
    auto bias = bias_report(stream.bits);
    std::cout << "wrote " << stream.bits.size() << " bits to " << args.out << " (p1 = " << bias.p1 << ", "
              << stream.meta.sample_pairs_consumed << " sample pairs)\n";
    return kExitOk;
}

struct UnitarySource {
    std::string unitary;
    std::string mesh;
};

LoadedUnitary load_unitary_source(const UnitarySource &src, RunManifest &m) {
    if (src.unitary.empty() == src.mesh.empty()) {
        throw ConfigError("pass exactly one of --unitary or --mesh");
    }
    const std::string &path = src.unitary.empty() ? src.mesh : src.unitary;
    record_input(m, path);
    m.config[src.unitary.empty() ? "mesh" : "unitary"] = path;
    return load_unitary_file(path);
}

struct DistArgs {
    UnitarySource source;
    std::string input;
    std::string out;
    bool postselect = false;
};

int cmd_dist(const DistArgs &args) {
    Stopwatch clock;
    RunManifest m;
    m.command = "dist";
    LoadedUnitary u = load_unitary_source(args.source, m);
    FockState input = FockState::parse(args.input);
    OutputDistribution dist = full_distribution(u.matrix, input, args.postselect);
    {
        auto out = open_output(args.out);
        write_distribution_csv(out, dist);
    }
    m.config["input"] = input.str();
    m.config["postselect"] = args.postselect;
    m.config["unitary_id"] = dist.unitary_id;
    record_output(m, args.out);
    m.duration_seconds = clock.seconds();
    write_manifest(args.out, m);
    std::cout << "wrote " << dist.entries.size() << " states to " << args.out << "\n";
    return kExitOk;
}

struct SweepArgs {
    std::string mesh;
    std::vector<std::string> labels;
    std::string input;
    long long grid = 128;
    std::string out;
};

int cmd_entropy_sweep(const SweepArgs &args) {
    Stopwatch clock;
    if (args.grid <= 0) {
        throw ConfigError("--grid must be positive");
    }
    if (args.labels.empty()) {
        throw ConfigError("--labels needs at least one label");
    }
    RunManifest m;
    m.command = "entropy-sweep";
    LoadedUnitary u = load_unitary_source({"", args.mesh}, m);
    if (!u.mesh) {
        throw ConfigError(args.mesh + " is not a mesh file");
    }
    FockState input = FockState::parse(args.input);
    auto curves = parameter_sweep(*u.mesh, args.labels, input, static_cast<std::size_t>(args.grid));
    fs::create_directories(args.out);
    nlohmann::json variance = nlohmann::json::object();
    for (const auto &curve : curves) {
        fs::path file = fs::path(args.out) / ("sweep_" + curve.parameter_label + ".csv");
        {
            auto out = open_output(file);
            write_sweep_csv(out, curve);
        }
        record_output(m, file);
        variance[curve.parameter_label] = curve.shannon_variance();
    }
    m.config["labels"] = args.labels;
    m.config["input"] = input.str();
    m.config["grid"] = args.grid;
    m.config["shannon_variance"] = variance;
    m.duration_seconds = clock.seconds();
    fs::path artifact = fs::path(args.out) / "entropy-sweep";
    write_manifest(artifact, m);
    std::cout << "wrote " << curves.size() << " curves to " << args.out << "\n";
    return kExitOk;
}

struct TestArgs {
    std::string in;
    std::string format = "packed";
    std::string out;
};

int cmd_test(const TestArgs &args) {
    Stopwatch clock;
    BitFormat format = parse_bit_format(args.format);
    BitVector bits = read_bits(args.in, format);
    if (bits.size() < 100) {
        throw InsufficientDataError(args.in + " holds " + std::to_string(bits.size()) +
                                    " bits; the battery needs at least 100");
    }
    auto results = nist::run_battery(bits);
    write_json_file(args.out, nist::to_json(results));
    std::cout << nist::format_table(results);

    RunManifest m;
    m.command = "test";
    m.config = {{"format", args.format}, {"n_bits", bits.size()}};
    record_input(m, args.in);
    if (format == BitFormat::kPacked && fs::exists(packed_sidecar_path(args.in))) {
        record_input(m, packed_sidecar_path(args.in));
    }
    record_output(m, args.out);
    m.duration_seconds = clock.seconds();
    write_manifest(args.out, m);
    return kExitOk;
}

struct RateArgs {
    long long modes = 16;
    long long photons = 6;
    long long pairs = 10000;
    uint64_t seed = 0;
    std::string out;
};

int cmd_rate(const RateArgs &args) {
    Stopwatch clock;
    if (args.photons < 1 || args.modes < args.photons || args.pairs < 1) {
        throw ConfigError("rate needs --modes >= --photons >= 1 and --pairs >= 1");
    }
    auto r = rate_comparison(args.modes, args.photons, args.pairs, args.seed);
    nlohmann::json doc = {{"modes", args.modes},
                          {"photons", args.photons},
                          {"pairs", args.pairs},
                          {"seed", args.seed},
                          {"boson_bits_per_pair", r.boson_bits_per_pair},
                          {"branching_bits_per_pair", r.branching_bits_per_pair}};
    std::cout << doc.dump(2) << "\n";
    if (!args.out.empty()) {
        write_json_file(args.out, doc);
        RunManifest m;
        m.command = "rate";
        m.config = {{"modes", args.modes}, {"photons", args.photons}, {"pairs", args.pairs}};
        m.seed = args.seed;
        record_output(m, args.out);
        m.duration_seconds = clock.seconds();
        write_manifest(args.out, m);
    }
    return kExitOk;
}

struct PermArgs {
    std::string matrix;
    bool naive = false;
};

int cmd_perm(const PermArgs &args) {
    ComplexMatrix a = matrix_from_json(read_json_file(args.matrix));
    Complex per = args.naive ? permanent_naive(a) : permanent_ryser(a);
    nlohmann::json doc = {{"re", per.real()},
                          {"im", per.imag()},
                          {"method", args.naive ? "naive" : "ryser"},
                          {"kernel", args.naive ? "scalar" : std::string(kernels::isa_name(kernels::active_isa()))}};
    std::cout << doc.dump() << "\n";
    return kExitOk;
}

struct UnitaryArgs {
    bool fixture_u5 = false;
    bool printed = false;
    long long haar = 0;
    long long random_mesh = 0;
    uint64_t seed = 0;
    std::string out;
};

int cmd_unitary(const UnitaryArgs &args) {
    int chosen = (args.fixture_u5 ? 1 : 0) + (args.haar > 0 ? 1 : 0) + (args.random_mesh > 0 ? 1 : 0);
    if (chosen != 1) {
        throw ConfigError("pass exactly one of --fixture-u5, --haar M or --random-mesh M");
    }
    Stopwatch clock;
    nlohmann::json doc;
    RunManifest m;
    m.command = "unitary";
    if (args.fixture_u5) {
        doc = to_json(args.printed ? fixture_u5_printed() : fixture_u5());
        m.config = {{"source", args.printed ? "fixture_u5_printed" : "fixture_u5"}};
    } else if (args.haar > 0) {
        doc = to_json(haar_random_unitary(args.haar, args.seed));
        m.config = {{"source", "haar"}, {"modes", args.haar}};
        m.seed = args.seed;
    } else {
        doc = to_json(random_mesh(args.random_mesh, args.seed));
        m.config = {{"source", "random_mesh"}, {"modes", args.random_mesh}};
        m.seed = args.seed;
    }
    write_json_file(args.out, doc);
    record_output(m, args.out);
    m.duration_seconds = clock.seconds();
    write_manifest(args.out, m);
    return kExitOk;
}

struct SourceSweepArgs {
    std::string unitary;
    std::vector<std::string> inputs;
    std::vector<std::string> alternate;
    long long bits = 100000;
    uint64_t seed = 0;
    std::string out;
};

int cmd_source_sweep(const SourceSweepArgs &args) {
    Stopwatch clock;
    if (args.bits <= 0) {
        throw ConfigError("--bits must be positive");
    }
    RunManifest m;
    m.command = "source-sweep";
    LoadedUnitary u = load_unitary_source({args.unitary, ""}, m);
    std::vector<FockState> inputs;
    for (const auto &s : args.inputs) {
        inputs.push_back(FockState::parse(s));
    }
    auto rows = source_sweep(u.matrix, inputs, args.bits, args.seed);
    if (!args.alternate.empty()) {
        if (args.alternate.size() != 2) {
            throw ConfigError("--alternate takes exactly two input states");
        }
        rows.push_back(alternating_source_check(u.matrix, FockState::parse(args.alternate[0]),
                                                FockState::parse(args.alternate[1]), args.bits,
                                                derive_seed(args.seed, inputs.size())));
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &row : rows) {
        doc.push_back({{"input", row.input.str()},
                       {"alternate_input", row.alternate ? nlohmann::json(row.alternate->str()) : nlohmann::json()},
                       {"p1", row.p1},
                       {"n", row.n},
                       {"four_sigma", four_sigma(row.n)},
                       {"expected_p1", row.expected_p1},
                       {"flagged", row.flagged}});
    }
    std::cout << doc.dump(2) << "\n";
    if (!args.out.empty()) {
        write_json_file(args.out, doc);
        m.config["inputs"] = args.inputs;
        m.config["alternate"] = args.alternate;
        m.config["bits"] = args.bits;
        m.seed = args.seed;
        record_output(m, args.out);
        m.duration_seconds = clock.seconds();
        write_manifest(args.out, m);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Boson-sampling QRNG simulator and randomness toolkit"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a Von Neumann corrected bitstream");
    gen_cmd->add_option("config", gen.config, "Generator configuration JSON")->required();
    gen_cmd->add_option("--bits", gen.bits, "Number of bits to emit")->required();
    gen_cmd->add_option("--out", gen.out, "Output bit file")->required();
    gen_cmd->add_option("--format", gen.format, "packed or ascii");
    gen_cmd->add_option("--seed", gen.seed, "Override the configuration seed");

    DistArgs dist;
    auto *dist_cmd = app.add_subcommand("dist", "Export an exact output distribution as CSV");
    dist_cmd->add_option("--unitary", dist.source.unitary, "Matrix (or mesh) JSON");
    dist_cmd->add_option("--mesh", dist.source.mesh, "Mesh JSON");
    dist_cmd->add_option("--input", dist.input, "Input occupations, e.g. 1,1,0,0,0")->required();
    dist_cmd->add_option("--out", dist.out, "Output CSV")->required();
    dist_cmd->add_flag("--postselect", dist.postselect, "Keep collision-free outputs only, renormalized");

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("entropy-sweep", "Sweep mesh angles and export entropy curves");
    sweep_cmd->add_option("--mesh", sweep.mesh, "Mesh JSON")->required();
    sweep_cmd->add_option("--labels", sweep.labels, "Angle labels such as 1I,2I,1E")->delimiter(',')->required();
    sweep_cmd->add_option("--input", sweep.input, "Input occupations")->required();
    sweep_cmd->add_option("--grid", sweep.grid, "Grid points over [0, 2pi)");
    sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();

    TestArgs test;
    auto *test_cmd = app.add_subcommand("test", "Run the randomness test battery on a bit file");
    test_cmd->add_option("--in", test.in, "Bit file")->required();
    test_cmd->add_option("--format", test.format, "packed or ascii");
    test_cmd->add_option("--out", test.out, "Report JSON")->required();

    RateArgs rate;
    auto *rate_cmd = app.add_subcommand("rate", "Compare retained bits per pair against a branching-path source");
    rate_cmd->add_option("--modes", rate.modes, "Modes M");
    rate_cmd->add_option("--photons", rate.photons, "Photons N");
    rate_cmd->add_option("--pairs", rate.pairs, "Trials");
    rate_cmd->add_option("--seed", rate.seed, "Seed");
    rate_cmd->add_option("--out", rate.out, "Also write the JSON here");

    PermArgs perm;
    auto *perm_cmd = app.add_subcommand("perm", "Permanent of a square matrix");
    perm_cmd->add_option("--matrix", perm.matrix, "Matrix JSON")->required();
    perm_cmd->add_flag("--naive", perm.naive, "Use the permutation-sum oracle");

    UnitaryArgs unitary;
    auto *unitary_cmd = app.add_subcommand("unitary", "Write a unitary or mesh fixture");
    unitary_cmd->add_flag("--fixture-u5", unitary.fixture_u5,
                          "The fixed 5-mode prototype unitary, projected to the nearest unitary");
    unitary_cmd->add_flag("--printed", unitary.printed, "With --fixture-u5: the 5-decimal entries verbatim");
    unitary_cmd->add_option("--haar", unitary.haar, "Haar-random unitary on M modes");
    unitary_cmd->add_option("--random-mesh", unitary.random_mesh, "Mesh on M modes with uniform random angles");
    unitary_cmd->add_option("--seed", unitary.seed, "Seed");
    unitary_cmd->add_option("--out", unitary.out, "Output JSON")->required();

    SourceSweepArgs ss;
    auto *ss_cmd = app.add_subcommand("source-sweep", "Frequency of ones across input states");
    ss_cmd->add_option("--unitary", ss.unitary, "Matrix (or mesh) JSON")->required();
    ss_cmd->add_option("--inputs", ss.inputs, "Input states separated by ';'")->delimiter(';');
    ss_cmd->add_option("--alternate", ss.alternate, "Two inputs A;B for the alternating-source check")
        ->delimiter(';');
    ss_cmd->add_option("--bits", ss.bits, "Bits per input");
    ss_cmd->add_option("--seed", ss.seed, "Seed");
    ss_cmd->add_option("--out", ss.out, "Also write the JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen(gen);
        }
        if (*dist_cmd) {
            return cmd_dist(dist);
        }
        if (*sweep_cmd) {
            return cmd_entropy_sweep(sweep);
        }
        if (*test_cmd) {
            return cmd_test(test);
        }
        if (*rate_cmd) {
            return cmd_rate(rate);
        }
        if (*perm_cmd) {
            return cmd_perm(perm);
        }
        if (*unitary_cmd) {
            return cmd_unitary(unitary);
        }
        if (*ss_cmd) {
            return cmd_source_sweep(ss);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
