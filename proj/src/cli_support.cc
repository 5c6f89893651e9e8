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

#include "bsqrng/cli_support.h"

#include <fstream>
#include <iterator>
#include <sstream>

namespace bsqrng {

namespace fs = std::filesystem;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kUsage:
            return kExitUsage;
        case ErrorKind::kPrecondition:
            return kExitPrecondition;
        case ErrorKind::kNumericalIntegrity:
            return kExitNumerical;
    }
    return kExitPrecondition;
}

std::string tool_version() {
    return BSQRNG_VERSION;
}

namespace {

std::vector<uint8_t> read_file_bytes(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path.string());
    }
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

std::string file_content_hash(const fs::path &path) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (uint8_t b : read_file_bytes(path)) {
        h ^= b;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json read_json_file(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void write_json_file(const fs::path &path, const nlohmann::json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << doc.dump(2) << '\n';
}

LoadedUnitary load_unitary_file(const fs::path &path) {
    nlohmann::json doc = read_json_file(path);
    if (doc.is_object() && doc.contains("cells")) {
        MeshParameters mesh = mesh_from_json(doc);
        return {build_unitary(mesh), mesh};
    }
    return {matrix_from_json(doc), std::nullopt};
}

namespace {

// Resolves a "unitary"/"mesh" value: inline JSON, a file path, "fixture_u5"
// (projected to the nearest unitary) or "fixture_u5_printed" (verbatim).
void resolve_unitary_value(const nlohmann::json &value, bool is_mesh, const fs::path &base_dir, LoadedConfig &out) {
    nlohmann::json doc = value;
    if (value.is_string()) {
        std::string ref = value.get<std::string>();
        if (!is_mesh && (ref == "fixture_u5" || ref == "fixture_u5_printed")) {
            ComplexMatrix u = ref == "fixture_u5" ? fixture_u5() : fixture_u5_printed();
            out.generator.unitary = u;
            out.resolved["unitary"] = to_json(u);
            return;
        }
        fs::path p = fs::path(ref).is_absolute() ? fs::path(ref) : base_dir / ref;
        out.referenced_files.push_back(p);
        doc = read_json_file(p);
    }
    if (is_mesh) {
        MeshParameters mesh = mesh_from_json(doc);
        out.generator.unitary = mesh;
        out.resolved["mesh"] = to_json(mesh);
    } else {
        ComplexMatrix u = matrix_from_json(doc);
        out.generator.unitary = u;
        out.resolved["unitary"] = to_json(u);
    }
}

}  // namespace

LoadedConfig load_generator_config(const fs::path &path) {
    nlohmann::json doc = read_json_file(path);
    if (!doc.is_object()) {
        throw ConfigError(path.string() + ": configuration must be a JSON object");
    }
    LoadedConfig out;
    out.referenced_files.push_back(path);
    out.resolved = nlohmann::json::object();
    const fs::path base_dir = path.parent_path();
    try {
        bool has_unitary = doc.contains("unitary");
        bool has_mesh = doc.contains("mesh");
        if (has_unitary == has_mesh) {
            throw ConfigError("configuration needs exactly one of 'unitary' or 'mesh'");
        }
        resolve_unitary_value(has_mesh ? doc.at("mesh") : doc.at("unitary"), has_mesh, base_dir, out);

        out.generator.input = FockState::parse(doc.at("input").get<std::string>());
        out.resolved["input"] = out.generator.input.str();

        out.generator.postselect_collision_free = doc.value("postselect", false);
        out.resolved["postselect"] = out.generator.postselect_collision_free;

        nlohmann::json pairing = doc.value("pairing", nlohmann::json("consecutive"));
        if (pairing.is_string() && pairing.get<std::string>() == "consecutive") {
            out.generator.pairing = ConsecutivePairing{};
        } else if (pairing.is_object() && pairing.contains("random_pair_T")) {
            auto t = pairing.at("random_pair_T").get<long long>();
            if (t <= 2) {
                throw ConfigError("random_pair_T must be > 2");
            }
            out.generator.pairing = RandomPairT{static_cast<std::size_t>(t)};
        } else {
            throw ConfigError("pairing must be \"consecutive\" or {\"random_pair_T\": T}");
        }
        out.resolved["pairing"] = pairing;

        if (doc.contains("alternate_input")) {
            out.generator.alternate_input = FockState::parse(doc.at("alternate_input").get<std::string>());
            out.resolved["alternate_input"] = out.generator.alternate_input->str();
        }
        out.generator.seed = doc.value("seed", uint64_t{0});
        out.resolved["seed"] = out.generator.seed;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    validate(out.generator);
    return out;
}

BitFormat parse_bit_format(const std::string &name) {
    if (name == "packed") {
        return BitFormat::kPacked;
    }
    if (name == "ascii") {
        return BitFormat::kAscii;
    }
    throw ConfigError("unknown bit format '" + name + "' (expected packed or ascii)");
}

fs::path packed_sidecar_path(const fs::path &path) {
    return fs::path(path.string() + ".json");
}

void write_bits(const fs::path &path, const BitVector &bits, BitFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    if (format == BitFormat::kAscii) {
        write_ascii(out, bits);
        return;
    }
    auto bytes = pack_msb_first(bits);
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    write_json_file(packed_sidecar_path(path),
                    {{"format", "packed"}, {"bit_order", "msb_first"}, {"bit_length", bits.size()}});
}

BitVector read_bits(const fs::path &path, BitFormat format) {
    if (format == BitFormat::kAscii) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw ConfigError("cannot read " + path.string());
        }
        return read_ascii(in);
    }
    auto bytes = read_file_bytes(path);
    std::size_t bit_length = bytes.size() * 8;
    fs::path sidecar = packed_sidecar_path(path);
    if (fs::exists(sidecar)) {
        try {
            bit_length = read_json_file(sidecar).at("bit_length").get<std::size_t>();
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(sidecar.string() + ": " + e.what());
        }
    }
    return unpack_msb_first(bytes, bit_length);
}

nlohmann::json to_json(const RunManifest &m) {
    return {
        {"command", m.command},
        {"config", m.config},
        {"seed", m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr)},
        {"tool_version", tool_version()},
        {"input_hashes", m.input_hashes},
        {"output_hashes", m.output_hashes},
        {"duration_seconds", m.duration_seconds},
    };
}

fs::path manifest_path(const fs::path &artifact) {
    return fs::path(artifact.string() + ".manifest.json");
}

void write_manifest(const fs::path &artifact, const RunManifest &m) {
    write_json_file(manifest_path(artifact), to_json(m));
}

void write_sweep_csv(std::ostream &out, const EntropyCurve &curve) {
    out << "angle_rad,shannon_bits,min_entropy_bits\n";
    for (std::size_t k = 0; k < curve.angles.size(); k++) {
        out << format_double(curve.angles[k]) << ',' << format_double(curve.shannon[k]) << ','
            << format_double(curve.min_entropy[k]) << '\n';
    }
}

}  // namespace bsqrng
