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

#ifndef BSQRNG_CLI_SUPPORT_H
#define BSQRNG_CLI_SUPPORT_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsqrng/bit_vector.h"
#include "bsqrng/entropy.h"
#include "bsqrng/error.h"
#include "bsqrng/pipeline.h"

namespace bsqrng {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNumerical = 4;

int exit_code_for(ErrorKind kind);

std::string tool_version();

/// FNV-1a 64 of the file bytes, 16 hex digits. Throws ConfigError if unreadable.
std::string file_content_hash(const std::filesystem::path &path);

/// Throws ConfigError if unreadable or not JSON.
nlohmann::json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const nlohmann::json &doc);

/// A unitary file is either a matrix document or a mesh document (has "cells").
struct LoadedUnitary {
    ComplexMatrix matrix;
    std::optional<MeshParameters> mesh;
};
LoadedUnitary load_unitary_file(const std::filesystem::path &path);

/// Generator configuration file:
///   {"unitary": <matrix> | "<path>" | "fixture_u5" | "fixture_u5_printed"
///        (or "mesh": <mesh> | "<path>"),
///    "input": "1,1,0,0,0", "postselect": false,
///    "pairing": "consecutive" | {"random_pair_T": T},
///    "alternate_input": "0,0,0,1,1" (optional), "seed": 1}
/// Relative paths resolve against the config file's directory.
struct LoadedConfig {
    GeneratorConfig generator;
    nlohmann::json resolved;
    std::vector<std::filesystem::path> referenced_files;
};
LoadedConfig load_generator_config(const std::filesystem::path &path);

enum class BitFormat {
    kPacked,
    kAscii,
};
BitFormat parse_bit_format(const std::string &name);

/// Packed files get a sidecar "<path>.json": {"format":"packed","bit_order":"msb_first","bit_length":N}.
void write_bits(const std::filesystem::path &path, const BitVector &bits, BitFormat format);
/// Packed reads take the length from the sidecar when present, else 8 * bytes.
BitVector read_bits(const std::filesystem::path &path, BitFormat format);
std::filesystem::path packed_sidecar_path(const std::filesystem::path &path);

/// Provenance record written next to every artifact as "<artifact>.manifest.json".
struct RunManifest {
    std::string command;
    nlohmann::json config;
    std::optional<uint64_t> seed;
    std::map<std::string, std::string> input_hashes;
    std::map<std::string, std::string> output_hashes;
    double duration_seconds = 0;
};
nlohmann::json to_json(const RunManifest &m);
std::filesystem::path manifest_path(const std::filesystem::path &artifact);
void write_manifest(const std::filesystem::path &artifact, const RunManifest &m);

/// "angle_rad,shannon_bits,min_entropy_bits" then one row per grid point.
void write_sweep_csv(std::ostream &out, const EntropyCurve &curve);

}  // namespace bsqrng

#endif
