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

#include "bsqrng/interferometer.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "bsqrng/error.h"
#include "bsqrng/rng.h"

namespace bsqrng {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a value just below a multiple of 2pi can round up to 2pi.
    if (r >= kTwoPi) {
        r = 0;
    }
    return r;
}

}  // namespace

std::vector<std::size_t> reck_layout(std::size_t modes) {
    std::vector<std::size_t> tops;
    if (modes < 2) {
        return tops;
    }
    const std::size_t last_column = 2 * modes - 3;
    for (std::size_t t = 1; t <= last_column; t++) {
        for (std::size_t k = (t % 2 == 1) ? 1 : 2; k <= t && k <= 2 * (modes - 1) - t; k += 2) {
            tops.push_back(k - 1);
        }
    }
    return tops;
}

MeshParameters uniform_mesh(std::size_t modes, double theta_internal, double theta_external) {
    if (modes == 0) {
        throw ConfigError("mesh needs at least one mode");
    }
    MeshParameters p;
    p.modes = modes;
    for (std::size_t top : reck_layout(modes)) {
        p.cells.push_back({top, theta_internal, theta_external});
    }
    p.output_phases.assign(modes, 0.0);
    return p;
}

MeshParameters identity_mesh(std::size_t modes) {
    return uniform_mesh(modes, std::numbers::pi, 0.0);
}

MeshParameters random_mesh(std::size_t modes, uint64_t seed) {
    MeshParameters p = uniform_mesh(modes, 0.0, 0.0);
    Rng rng(seed);
    for (auto &cell : p.cells) {
        cell.theta_internal = kTwoPi * rng.uniform01();
        cell.theta_external = kTwoPi * rng.uniform01();
    }
    for (auto &phi : p.output_phases) {
        phi = kTwoPi * rng.uniform01();
    }
    return p;
}

void validate(const MeshParameters &p) {
    if (p.modes == 0) {
        throw ConfigError("mesh needs at least one mode");
    }
    auto layout = reck_layout(p.modes);
    if (p.cells.size() != layout.size()) {
        throw ConfigError("mesh over " + std::to_string(p.modes) + " modes needs " + std::to_string(layout.size()) +
                          " cells, got " + std::to_string(p.cells.size()));
    }
    for (std::size_t k = 0; k < layout.size(); k++) {
        const auto &cell = p.cells[k];
        if (cell.top_mode != layout[k]) {
            throw ConfigError("cell " + std::to_string(k + 1) + " must act on modes (" + std::to_string(layout[k] + 1) +
                              "," + std::to_string(layout[k] + 2) + ")");
        }
        if (!std::isfinite(cell.theta_internal) || !std::isfinite(cell.theta_external)) {
            throw ConfigError("cell " + std::to_string(k + 1) + " has a non-finite angle");
        }
    }
    if (p.output_phases.size() != p.modes) {
        throw ConfigError("mesh needs one output phase per mode");
    }
    for (double phi : p.output_phases) {
        if (!std::isfinite(phi)) {
            throw ConfigError("non-finite output phase");
        }
    }
}

MeshParameters normalized(MeshParameters p) {
    for (auto &cell : p.cells) {
        cell.theta_internal = wrap_angle(cell.theta_internal);
        cell.theta_external = wrap_angle(cell.theta_external);
    }
    for (auto &phi : p.output_phases) {
        phi = wrap_angle(phi);
    }
    return p;
}

std::array<Complex, 4> mzi_block(double theta_internal, double theta_external) {
    const Complex i(0, 1);
    const Complex prefactor = i * std::polar(1.0, theta_internal / 2);
    const Complex ext = std::polar(1.0, theta_external);
    const double s = std::sin(theta_internal / 2);
    const double c = std::cos(theta_internal / 2);
    return {prefactor * ext * s, prefactor * c, prefactor * ext * c, -prefactor * s};
}

ComplexMatrix build_unitary(const MeshParameters &p) {
    validate(p);
    const std::size_t m = p.modes;
    ComplexMatrix u(m, m);
    for (std::size_t k = 0; k < m; k++) {
        u(k, k) = std::polar(1.0, p.output_phases[k]);
    }
    // Right-multiplying by an embedded 2x2 block mixes two columns.
    for (const auto &cell : p.cells) {
        auto b = mzi_block(cell.theta_internal, cell.theta_external);
        const std::size_t a = cell.top_mode;
        for (std::size_t r = 0; r < m; r++) {
            Complex x = u(r, a);
            Complex y = u(r, a + 1);
            u(r, a) = x * b[0] + y * b[2];
            u(r, a + 1) = x * b[1] + y * b[3];
        }
    }
    return u;
}

ComplexMatrix fixture_u5_printed() {
    using C = Complex;
    return ComplexMatrix(5, 5,
                         {
                             C(0.01311, 0.33011), C(0.65648, 0.18793), C(0.05465, 0.16879), C(0.49720, 0.04980),
                             C(0.18845, 0.32849),
                             C(0.14759, 0.47792), C(-0.24696, -0.23840), C(0.34173, 0.03745), C(0.25733, 0.55151),
                             C(-0.05311, -0.37496),
                             C(0.32357, 0.04518), C(-0.10722, 0.56648), C(0.50920, 0.17247), C(-0.29096, -0.15241),
                             C(0.39168, -0.10264),
                             C(0.35818, -0.46781), C(-0.13350, -0.15289), C(-0.09973, 0.00157), C(0.07696, 0.51280),
                             C(0.42931, 0.38538),
                             C(-0.31110, 0.30001), C(-0.20562, 0.00389), C(0.13427, -0.73030), C(-0.01605, -0.05381),
                             C(0.35379, 0.30204),
                         });
}

ComplexMatrix fixture_u5() {
    static const ComplexMatrix projected = nearest_unitary(fixture_u5_printed());
    return projected;
}

CellAngleRef mzi_cell_index(std::string_view label, std::size_t cell_count) {
    auto fail = [&]() -> CellAngleRef {
        throw LookupError("unknown mesh angle label '" + std::string(label) + "' (mesh has " +
                          std::to_string(cell_count) + " cells)");
    };
    if (label.size() < 2) {
        return fail();
    }
    CellAngleRef ref;
    char kind = label.back();
    if (kind == 'I' || kind == 'i') {
        ref.angle = MeshAngle::kInternal;
    } else if (kind == 'E' || kind == 'e') {
        ref.angle = MeshAngle::kExternal;
    } else {
        return fail();
    }
    auto digits = label.substr(0, label.size() - 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ref.cell);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || ref.cell < 1 || ref.cell > cell_count) {
        return fail();
    }
    return ref;
}

double &angle_at(MeshParameters &p, CellAngleRef ref) {
    if (ref.cell < 1 || ref.cell > p.cells.size()) {
        throw LookupError("cell " + std::to_string(ref.cell) + " out of range");
    }
    auto &cell = p.cells[ref.cell - 1];
    return ref.angle == MeshAngle::kInternal ? cell.theta_internal : cell.theta_external;
}

nlohmann::json to_json(const MeshParameters &p) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto &cell : p.cells) {
        cells.push_back({{"pair", {cell.top_mode + 1, cell.top_mode + 2}},
                         {"theta_internal", cell.theta_internal},
                         {"theta_external", cell.theta_external}});
    }
    return {{"modes", p.modes}, {"cells", cells}, {"output_phases", p.output_phases}};
}

MeshParameters mesh_from_json(const nlohmann::json &doc) {
    MeshParameters p;
    try {
        p.modes = doc.at("modes").get<std::size_t>();
        auto layout = reck_layout(p.modes);
        const auto &cells = doc.at("cells");
        if (!cells.is_array()) {
            throw ConfigError("mesh JSON: 'cells' must be an array");
        }
        for (std::size_t k = 0; k < cells.size(); k++) {
            const auto &c = cells[k];
            MziCell cell;
            if (c.contains("pair")) {
                auto pair = c.at("pair").get<std::vector<std::size_t>>();
                if (pair.size() != 2 || pair[0] < 1 || pair[1] != pair[0] + 1) {
                    throw ConfigError("mesh JSON: cell " + std::to_string(k + 1) + " pair must be [k, k+1], 1-based");
                }
                cell.top_mode = pair[0] - 1;
            } else if (k < layout.size()) {
                cell.top_mode = layout[k];
            }
            cell.theta_internal = c.at("theta_internal").get<double>();
            cell.theta_external = c.at("theta_external").get<double>();
            p.cells.push_back(cell);
        }
        if (doc.contains("output_phases")) {
            p.output_phases = doc.at("output_phases").get<std::vector<double>>();
        } else {
            p.output_phases.assign(p.modes, 0.0);
        }
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("mesh JSON: ") + e.what());
    }
    validate(p);
    return normalized(std::move(p));
}

}  // namespace bsqrng
