// Copyright 2026 The uinterp Authors
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

#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"

#include "uinterp/cycle_graph.hpp"
#include "uinterp/errors.hpp"
#include "uinterp/interpolation.hpp"
#include "uinterp/landau.hpp"
#include "uinterp/matrix.hpp"

namespace uinterp {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

/// Complex number as re, im, re+imi, or re-imi, with exact components.
inline std::string format_complex(const Complex& z) {
    if (z.imag() == 0.0) {
        return format_double(z.real());
    }
    std::string imag_part = format_double(std::abs(z.imag())) + "i";
    if (z.real() == 0.0) {
        return (z.imag() < 0.0 ? "-" : "") + imag_part;
    }
    return format_double(z.real()) + (z.imag() < 0.0 ? "-" : "+") + imag_part;
}

/// JSON form {"n": ..., "entries": [[[re, im], ...], ...]}, rows outermost.
inline nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        entries.push_back(std::move(row));
    }
    return nlohmann::ordered_json{{"n", m.dim()}, {"entries", std::move(entries)}};
}

template <class Json>
inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw ValidationError("matrix JSON must be an object with 'n' and 'entries'");
    }
    if (!j["n"].is_number_integer() || j["n"].template get<long long>() < 1) {
        throw ValidationError("matrix JSON field 'n' must be a positive integer");
    }
    const int n = j["n"].template get<int>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
        throw ValidationError("matrix JSON 'entries' must be an array of " + std::to_string(n) +
                              " rows");
    }
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ValidationError("matrix JSON rows must each hold " + std::to_string(n) +
                                  " entries");
        }
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw ValidationError("matrix JSON entries must be [re, im] number pairs");
            }
            values.emplace_back(entry[0].template get<double>(), entry[1].template get<double>());
        }
    }
    return Matrix(n, std::move(values));
}

/// Reads and validates a matrix JSON file.
inline Matrix load_matrix(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ValidationError("cannot open matrix file '" + path + "'");
    }
    const nlohmann::json j = nlohmann::json::parse(file, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError("file '" + path + "' is not valid JSON");
    }
    return matrix_from_json(j);
}

/// Human-readable aligned grid; entries keep full round-trip precision.
inline std::string matrix_to_pretty(const Matrix& m) {
    const int n = m.dim();
    std::vector<std::string> cells(static_cast<std::size_t>(n) * n);
    std::vector<std::size_t> widths(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::string& cell = cells[static_cast<std::size_t>(i) * n + j];
            cell = format_complex(m(i, j));
            widths[static_cast<std::size_t>(j)] = std::max(widths[static_cast<std::size_t>(j)],
                                                           cell.size());
        }
    }
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::string& cell = cells[static_cast<std::size_t>(i) * n + j];
            if (j > 0) {
                out += "  ";
            }
            out.append(widths[static_cast<std::size_t>(j)] - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

/// Evenly spaced sweep angles covering [0, 2 pi] with both endpoints.
inline std::vector<double> sweep_thetas(int samples) {
    if (samples < 2) {
        throw ValidationError("sweep needs at least 2 samples, got " + std::to_string(samples));
    }
    std::vector<double> thetas(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        thetas[static_cast<std::size_t>(i)] =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples - 1);
    }
    return thetas;
}

/// CSV table of coefficient moduli squared over a full period:
/// theta,abs2_m0,...,abs2_m{p-1} with one row per sample.
inline std::string coefficient_table_csv(int order, int samples,
                                         Formula f = Formula::fourier) {
    std::string out = "theta";
    for (int j = 0; j < order; ++j) {
        out += ",abs2_m" + std::to_string(j);
    }
    out += '\n';
    for (double theta : sweep_thetas(samples)) {
        const std::vector<Complex> values = lagrange_basis(order, theta, f);
        out += format_double(theta);
        for (const Complex& v : values) {
            out += ',' + format_double(std::norm(v));
        }
        out += '\n';
    }
    return out;
}

/// JSON form of the same sweep, with real and imaginary parts alongside the
/// moduli squared.
inline nlohmann::ordered_json coefficient_table_json(int order, int samples,
                                                     Formula f = Formula::fourier) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (double theta : sweep_thetas(samples)) {
        const std::vector<Complex> values = lagrange_basis(order, theta, f);
        nlohmann::ordered_json re = nlohmann::ordered_json::array();
        nlohmann::ordered_json im = nlohmann::ordered_json::array();
        nlohmann::ordered_json abs2 = nlohmann::ordered_json::array();
        for (const Complex& v : values) {
            re.push_back(v.real());
            im.push_back(v.imag());
            abs2.push_back(std::norm(v));
        }
        rows.push_back({{"theta", theta},
                        {"re", std::move(re)},
                        {"im", std::move(im)},
                        {"abs2", std::move(abs2)}});
    }
    return nlohmann::ordered_json{
        {"order", order}, {"samples", samples}, {"rows", std::move(rows)}};
}

/// JSON form {"n": ..., "cycles": [[image, ...], ...]}, each cycle listed as
/// the power sequence of its generator ending at the identity.
inline nlohmann::ordered_json cycle_graph_to_json(const CycleGraph& graph) {
    nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
    for (const MaximalCycle& cycle : graph.cycles) {
        nlohmann::ordered_json elements = nlohmann::ordered_json::array();
        for (const Permutation& perm : cycle.elements) {
            elements.push_back(perm.images());
        }
        cycles.push_back(std::move(elements));
    }
    return nlohmann::ordered_json{{"n", graph.n}, {"cycles", std::move(cycles)}};
}

/// Undirected DOT graph: one node per permutation (one-line notation as the
/// label, identity drawn as a double circle) and one closed ring of edges
/// per maximal cycle.
inline std::string cycle_graph_to_dot(const CycleGraph& graph) {
    std::string out = "graph cycle_graph {\n";
    out += "  label=\"maximal cycles of P(" + std::to_string(graph.n) + ")\";\n";

    std::vector<Permutation> nodes;
    for (const MaximalCycle& cycle : graph.cycles) {
        nodes.insert(nodes.end(), cycle.elements.begin(), cycle.elements.end());
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (const Permutation& node : nodes) {
        out += "  \"" + node.to_string() + "\"";
        if (node.is_identity()) {
            out += " [shape=doublecircle]";
        }
        out += ";\n";
    }

    for (const MaximalCycle& cycle : graph.cycles) {
        const std::size_t p = cycle.elements.size();
        for (std::size_t i = 0; i < p; ++i) {
            const Permutation& from = cycle.elements[i];
            const Permutation& to = cycle.elements[(i + 1) % p];
            out += "  \"" + from.to_string() + "\" -- \"" + to.to_string() + "\";\n";
        }
    }
    out += "}\n";
    return out;
}

/// CSV table n,landau,witness for n = 1..n_max; the witness partition is
/// plus-joined (e.g. 1+2+3).
inline std::string landau_table_csv(int n_max) {
    std::string out = "n,landau,witness\n";
    for (int n = 1; n <= n_max; ++n) {
        const LandauEntry entry = landau_with_witness(n);
        out += std::to_string(n) + ',' + std::to_string(entry.value) + ',';
        for (std::size_t i = 0; i < entry.witness.size(); ++i) {
            if (i > 0) {
                out += '+';
            }
            out += std::to_string(entry.witness[i]);
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json landau_table_json(int n_max) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 1; n <= n_max; ++n) {
        const LandauEntry entry = landau_with_witness(n);
        rows.push_back({{"n", n}, {"landau", entry.value}, {"witness", entry.witness}});
    }
    return nlohmann::ordered_json{{"n_max", n_max}, {"rows", std::move(rows)}};
}

inline std::string landau_table_pretty(int n_max) {
    std::string out = "  n       L(n)  witness\n";
    for (int n = 1; n <= n_max; ++n) {
        const LandauEntry entry = landau_with_witness(n);
        std::string n_text = std::to_string(n);
        std::string value_text = std::to_string(entry.value);
        out.append(3 - std::min<std::size_t>(3, n_text.size()), ' ');
        out += n_text;
        out.append(11 - std::min<std::size_t>(10, value_text.size()), ' ');
        out += value_text;
        out += "  ";
        for (std::size_t i = 0; i < entry.witness.size(); ++i) {
            if (i > 0) {
                out += '+';
            }
            out += std::to_string(entry.witness[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace uinterp
