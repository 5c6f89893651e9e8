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

#ifndef BSQRNG_INTERFEROMETER_H
#define BSQRNG_INTERFEROMETER_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bsqrng/complex_matrix.h"

namespace bsqrng {

/// One Mach-Zehnder cell acting on modes (top_mode, top_mode + 1), 0-based.
struct MziCell {
    std::size_t top_mode = 0;
    double theta_internal = 0;
    double theta_external = 0;
};

/// Phase settings of a full Reck triangle over `modes` modes.
///
/// Cells are numbered 1..m(m-1)/2 column by column, top to bottom, starting
/// with the single cell on modes (1,2). Column t (1-based) holds the pairs
/// (k, k+1) with k = t mod 2, k <= t and k <= 2(m-1) - t. The unitary is
///
///     U = diag(e^{i phi}) * B_1 * B_2 * ... * B_N
///
/// so cell 1 sits next to the output phases and light enters through cell N.
struct MeshParameters {
    std::size_t modes = 0;
    std::vector<MziCell> cells;
    std::vector<double> output_phases;
};

/// Pair (top modes, 0-based) of every cell of the Reck layout, in cell order.
std::vector<std::size_t> reck_layout(std::size_t modes);

/// Mesh with every cell at (theta_internal, theta_external) and zero output phases.
MeshParameters uniform_mesh(std::size_t modes, double theta_internal, double theta_external);

/// Mesh whose unitary has |U_ij| = delta_ij: every cell in the bar state.
MeshParameters identity_mesh(std::size_t modes);

/// All angles uniform on [0, 2pi).
MeshParameters random_mesh(std::size_t modes, uint64_t seed);

/// Throws ConfigError unless the cell list is exactly the Reck layout, every
/// angle is finite, and there is one output phase per mode.
void validate(const MeshParameters &p);

/// Wraps every angle into [0, 2pi).
MeshParameters normalized(MeshParameters p);

/// 2x2 transfer matrix of one cell, row-major:
///   i e^{i ti/2} [[e^{i te} sin(ti/2), cos(ti/2)], [e^{i te} cos(ti/2), -sin(ti/2)]]
std::array<Complex, 4> mzi_block(double theta_internal, double theta_external);

/// Throws ConfigError on a malformed mesh.
ComplexMatrix build_unitary(const MeshParameters &p);

/// The fixed 5-mode Haar-random unitary used in the prototype experiment,
/// entries as printed (5 decimals). Unitary only to about 1e-4.
ComplexMatrix fixture_u5_printed();

/// nearest_unitary(fixture_u5_printed()): agrees with the printed entries to ~1e-5 and
/// is unitary to 1e-14, so exact distributions built from it normalize.
ComplexMatrix fixture_u5();

enum class MeshAngle {
    kInternal,
    kExternal,
};

struct CellAngleRef {
    std::size_t cell = 0;  // 1-based cell number
    MeshAngle angle = MeshAngle::kInternal;

    bool operator==(const CellAngleRef &) const = default;
};

/// Resolves "<k>I" / "<k>E" for a mesh with `cell_count` cells. Throws LookupError.
CellAngleRef mzi_cell_index(std::string_view label, std::size_t cell_count);

double &angle_at(MeshParameters &p, CellAngleRef ref);

/// {"modes":m,"cells":[{"pair":[k,k+1],"theta_internal":..,"theta_external":..}],"output_phases":[..]}
/// with 1-based pairs. "pair" may be omitted, in which case the layout position is used.
nlohmann::json to_json(const MeshParameters &p);
/// Parses, wraps angles into [0, 2pi) and validates. Throws ConfigError.
MeshParameters mesh_from_json(const nlohmann::json &doc);

}  // namespace bsqrng

#endif
