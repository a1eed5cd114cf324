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

// Command-line front end: evaluation of interpolation curves, coefficient
// sweeps, generators, cycle graphs, Landau tables, the named gate catalog,
// and a self-verification runner.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 order-detection failure, 4 numerical-contract violation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "uinterp/uinterp.hpp"

namespace {

using uinterp::Complex;
using uinterp::Matrix;

// One of --perm, --matrix, --catalog (plus --random for verify).
struct InputChoice {
    std::string perm;
    std::string matrix_path;
    std::string catalog_name;
};

void add_input_options(CLI::App* cmd, InputChoice& choice) {
    auto* group = cmd->add_option_group("input", "curve input (exactly one)");
    group->add_option("--perm", choice.perm, "permutation as comma-separated images, e.g. 1,2,0");
    group->add_option("--matrix", choice.matrix_path, "path to a matrix JSON file");
    group->add_option("--catalog", choice.catalog_name, "name of a catalog entry");
    group->require_option(1);
}

uinterp::InterpolationCurve selected_curve(const InputChoice& choice, int p_max) {
    if (!choice.perm.empty()) {
        return uinterp::InterpolationCurve(
            uinterp::CyclicSubgroup::from_permutation(uinterp::Permutation::parse(choice.perm)));
    }
    if (!choice.matrix_path.empty()) {
        return uinterp::InterpolationCurve(
            uinterp::CyclicSubgroup::detect(uinterp::load_matrix(choice.matrix_path), p_max));
    }
    return uinterp::catalog_curve(choice.catalog_name);
}

// --theta in radians, or --theta-frac a/b meaning 2 pi a / b.
struct AngleChoice {
    double theta = 0.0;
    std::string frac;

    double resolve() const {
        if (frac.empty()) {
            return theta;
        }
        const std::size_t slash = frac.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == frac.size()) {
            throw uinterp::ValidationError("--theta-frac expects a/b, got '" + frac + "'");
        }
        long long num = 0;
        long long den = 0;
        try {
            std::size_t used = 0;
            num = std::stoll(frac.substr(0, slash), &used);
            if (used != slash) {
                throw std::invalid_argument("trailing characters");
            }
            const std::string den_text = frac.substr(slash + 1);
            den = std::stoll(den_text, &used);
            if (used != den_text.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw uinterp::ValidationError("--theta-frac expects integer a/b, got '" + frac + "'");
        }
        if (den == 0) {
            throw uinterp::ValidationError("--theta-frac denominator must be nonzero");
        }
        return 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    }
};

void add_angle_options(CLI::App* cmd, AngleChoice& choice) {
    auto* group = cmd->add_option_group("angle", "curve parameter (exactly one)");
    group->add_option("--theta", choice.theta, "angle in radians");
    group->add_option("--theta-frac", choice.frac, "angle as a fraction a/b of a full turn (2 pi a / b)");
    group->require_option(1);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw uinterp::ValidationError("cannot open output file '" + out_path + "'");
    }
    file << text;
}

std::string dump_json(const nlohmann::ordered_json& j) {
    return j.dump(2) + "\n";
}

void check_qubits(int qubits, int n) {
    int expected = 1;
    for (int i = 0; i < qubits; ++i) {
        if (expected > (1 << 29)) {
            throw uinterp::ValidationError("--qubits value too large");
        }
        expected *= 2;
    }
    if (expected != n) {
        throw uinterp::ValidationError("--qubits " + std::to_string(qubits) + " implies dimension " +
                                       std::to_string(expected) + ", but the input has dimension " +
                                       std::to_string(n));
    }
}

int run_eval(const InputChoice& input, const AngleChoice& angle, const std::string& formula,
             const std::string& fmt, const std::string& out, int p_max, int qubits) {
    const uinterp::InterpolationCurve curve = selected_curve(input, p_max);
    if (qubits >= 0) {
        check_qubits(qubits, curve.dim());
    }
    const Matrix m = curve.evaluate(angle.resolve(), uinterp::parse_formula(formula));
    if (fmt == "json") {
        emit(dump_json(uinterp::matrix_to_json(m)), out);
    } else {
        emit(uinterp::matrix_to_pretty(m), out);
    }
    return 0;
}

int run_coeffs(int order, int samples, const std::string& formula, const std::string& fmt,
               const std::string& out) {
    const uinterp::Formula f = uinterp::parse_formula(formula);
    if (fmt == "json") {
        emit(dump_json(uinterp::coefficient_table_json(order, samples, f)), out);
    } else {
        emit(uinterp::coefficient_table_csv(order, samples, f), out);
    }
    return 0;
}

int run_generator(const InputChoice& input, const std::string& form, const std::string& fmt,
                  const std::string& out, int p_max) {
    const uinterp::InterpolationCurve curve = selected_curve(input, p_max);
    if (form == "closed") {
        const Matrix g = uinterp::generator_closed_form(curve);
        emit(fmt == "json" ? dump_json(uinterp::matrix_to_json(g)) : uinterp::matrix_to_pretty(g),
             out);
        return 0;
    }
    if (form == "fourier") {
        const Matrix g = uinterp::generator_fourier_form(curve);
        emit(fmt == "json" ? dump_json(uinterp::matrix_to_json(g)) : uinterp::matrix_to_pretty(g),
             out);
        return 0;
    }
    const Matrix closed = uinterp::generator_closed_form(curve);
    const Matrix fourier = uinterp::generator_fourier_form(curve);
    const double distance = uinterp::frobenius_distance(closed, fourier);
    if (fmt == "json") {
        nlohmann::ordered_json j{{"closed", uinterp::matrix_to_json(closed)},
                                 {"fourier", uinterp::matrix_to_json(fourier)},
                                 {"distance", distance}};
        emit(dump_json(j), out);
    } else {
        std::string text = "closed form:\n" + uinterp::matrix_to_pretty(closed);
        text += "fourier form:\n" + uinterp::matrix_to_pretty(fourier);
        text += "distance: " + uinterp::format_double(distance) + "\n";
        emit(text, out);
    }
    return 0;
}

int run_cycle_graph(int n, int qubits, const std::string& fmt, const std::string& out) {
    if (qubits >= 0) {
        n = 1;
        for (int i = 0; i < qubits; ++i) {
            if (n > uinterp::kCycleGraphCap) {
                break;
            }
            n *= 2;
        }
    }
    const uinterp::CycleGraph graph = uinterp::enumerate_cycle_graph(n);
    if (fmt == "json") {
        emit(dump_json(uinterp::cycle_graph_to_json(graph)), out);
    } else {
        emit(uinterp::cycle_graph_to_dot(graph), out);
    }
    return 0;
}

int run_landau(int n_max, const std::string& fmt, const std::string& out) {
    if (n_max < 1) {
        throw uinterp::ValidationError("--n-max must be >= 1");
    }
    if (n_max > uinterp::kLandauCap) {
        throw uinterp::ValidationError("--n-max must be <= " + std::to_string(uinterp::kLandauCap));
    }
    if (fmt == "json") {
        emit(dump_json(uinterp::landau_table_json(n_max)), out);
    } else if (fmt == "csv") {
        emit(uinterp::landau_table_csv(n_max), out);
    } else {
        emit(uinterp::landau_table_pretty(n_max), out);
    }
    return 0;
}

int run_catalog_list(const std::string& fmt, const std::string& out) {
    if (fmt == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const uinterp::NamedGate& gate : uinterp::gate_catalog()) {
            const uinterp::InterpolationCurve curve = uinterp::catalog_curve(gate.name);
            rows.push_back({{"name", gate.name},
                            {"kind", gate.kind},
                            {"n", gate.matrix.dim()},
                            {"order", curve.order()},
                            {"provenance", gate.provenance}});
        }
        emit(dump_json(nlohmann::ordered_json{{"gates", std::move(rows)}}), out);
        return 0;
    }
    std::string text;
    for (const uinterp::NamedGate& gate : uinterp::gate_catalog()) {
        const uinterp::InterpolationCurve curve = uinterp::catalog_curve(gate.name);
        std::string line = gate.name;
        line.append(gate.name.size() < 14 ? 14 - gate.name.size() : 1, ' ');
        line += gate.kind;
        line.append(gate.kind.size() < 7 ? 7 - gate.kind.size() : 1, ' ');
        line += "n=" + std::to_string(gate.matrix.dim());
        line += " p=" + std::to_string(curve.order());
        line += "  " + gate.provenance + "\n";
        text += line;
    }
    emit(text, out);
    return 0;
}

struct RandomRequest {
    int n = 0;
    int trials = 0;
};

RandomRequest parse_random_request(const std::vector<std::string>& tokens) {
    RandomRequest request;
    bool have_n = false;
    bool have_trials = false;
    for (const std::string& token : tokens) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) {
            throw uinterp::ValidationError("--random expects n=<int> trials=<int>, got '" + token +
                                           "'");
        }
        const std::string key = token.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            const std::string value_text = token.substr(eq + 1);
            value = std::stoi(value_text, &used);
            if (used != value_text.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw uinterp::ValidationError("--random value in '" + token + "' is not an integer");
        }
        if (key == "n") {
            request.n = value;
            have_n = true;
        } else if (key == "trials") {
            request.trials = value;
            have_trials = true;
        } else {
            throw uinterp::ValidationError("--random key '" + key + "' unknown (use n, trials)");
        }
    }
    if (!have_n || !have_trials) {
        throw uinterp::ValidationError("--random needs both n=<int> and trials=<int>");
    }
    if (request.n < 1 || request.n > 16) {
        throw uinterp::ValidationError("--random n must lie in [1, 16]");
    }
    if (request.trials < 1 || request.trials > 10000) {
        throw uinterp::ValidationError("--random trials must lie in [1, 10000]");
    }
    return request;
}

// One verified curve: what it was plus its report.
struct CurveRun {
    std::string label;
    Matrix base;
    uinterp::VerifyReport report;
};

int run_verify(const InputChoice& input, const std::vector<std::string>& random_tokens,
               std::uint64_t seed, double tol, int samples, int p_max) {
    uinterp::VerifyOptions options;
    options.seed = seed;
    options.tol = tol;
    options.samples = samples;

    std::vector<CurveRun> runs;
    if (!random_tokens.empty()) {
        const RandomRequest random = parse_random_request(random_tokens);
        uinterp::SplitMix64 rng(seed);
        for (int trial = 0; trial < random.trials; ++trial) {
            const uinterp::Permutation perm = uinterp::Permutation::random(random.n, rng);
            uinterp::InterpolationCurve curve(uinterp::CyclicSubgroup::from_permutation(perm));
            uinterp::VerifyOptions trial_options = options;
            trial_options.seed = seed + static_cast<std::uint64_t>(trial) + 1;
            uinterp::VerifyReport report = uinterp::verify_curve(curve, trial_options);
            runs.push_back(CurveRun{"perm " + perm.to_string(), curve.group().base(),
                                    std::move(report)});
        }
    } else {
        uinterp::InterpolationCurve curve = selected_curve(input, p_max);
        std::string label = !input.perm.empty()
                                ? "perm " + input.perm
                                : (!input.matrix_path.empty() ? "matrix " + input.matrix_path
                                                              : "catalog " + input.catalog_name);
        runs.push_back(
            CurveRun{std::move(label), curve.group().base(), uinterp::verify_curve(curve, options)});
    }

    // Merge per-check across curves, keeping the instance closest to (or
    // past) its threshold.
    std::vector<uinterp::CheckResult> merged;
    std::vector<std::string> merged_label;
    for (const CurveRun& run : runs) {
        for (const uinterp::CheckResult& check : run.report.checks) {
            std::size_t slot = merged.size();
            for (std::size_t i = 0; i < merged.size(); ++i) {
                if (merged[i].name == check.name) {
                    slot = i;
                    break;
                }
            }
            if (slot == merged.size()) {
                merged.push_back(check);
                merged_label.push_back(run.label);
                continue;
            }
            if (!check.applicable) {
                continue;
            }
            if (!merged[slot].applicable ||
                check.max_error * merged[slot].threshold >
                    merged[slot].max_error * check.threshold) {
                merged[slot] = check;
                merged_label[slot] = run.label;
            }
        }
    }

    bool all_passed = true;
    std::string text;
    for (const uinterp::CheckResult& check : merged) {
        std::string line = "check " + check.name + ":";
        line.append(check.name.size() < 22 ? 22 - check.name.size() : 1, ' ');
        if (!check.applicable) {
            line += "skipped (base has no unit line sums)";
        } else {
            line += "max_error=" + uinterp::format_double(check.max_error);
            line += " threshold=" + uinterp::format_double(check.threshold);
            line += check.passed() ? " PASS" : " FAIL";
        }
        text += line + "\n";
        all_passed = all_passed && check.passed();
    }
    text += std::string("verify: ") + (all_passed ? "PASS" : "FAIL") + " curves=" +
            std::to_string(runs.size()) + " seed=" + std::to_string(seed) + "\n";
    std::cout << text;

    if (all_passed) {
        return 0;
    }

    // Reproducible bug report: every failing check with its worst angles
    // and the matrices evaluated there.
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const CurveRun& run : runs) {
        if (run.report.all_passed()) {
            continue;
        }
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        uinterp::InterpolationCurve curve(
            uinterp::CyclicSubgroup::detect(run.base, std::max(p_max, run.report.order)));
        for (const uinterp::CheckResult& check : run.report.checks) {
            if (check.passed()) {
                continue;
            }
            nlohmann::ordered_json at = nlohmann::ordered_json::array();
            for (double theta : check.worst_thetas) {
                at.push_back({{"theta", theta},
                              {"matrix", uinterp::matrix_to_json(curve.evaluate(theta))}});
            }
            checks.push_back({{"name", check.name},
                              {"max_error", check.max_error},
                              {"threshold", check.threshold},
                              {"worst", std::move(at)}});
        }
        failures.push_back({{"input", run.label},
                            {"dim", run.report.dim},
                            {"order", run.report.order},
                            {"base", uinterp::matrix_to_json(run.base)},
                            {"failed_checks", std::move(checks)}});
    }
    nlohmann::ordered_json diagnostics{{"seed", seed},
                                       {"tol", tol},
                                       {"samples", samples},
                                       {"failures", std::move(failures)}};
    const std::string path =
        "./interp-verify-" + std::to_string(static_cast<long long>(std::time(nullptr))) + ".json";
    std::ofstream file(path, std::ios::binary);
    if (file) {
        file << diagnostics.dump(2) << "\n";
        std::cerr << "error:verify:checks failed; diagnostics written to " << path << "\n";
    } else {
        std::cerr << "error:verify:checks failed; could not write diagnostics file\n";
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrange interpolation of unitary matrix cycles"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a curve at an angle");
    InputChoice eval_input;
    AngleChoice eval_angle;
    std::string eval_formula = "fourier";
    std::string eval_fmt = "pretty";
    std::string eval_out;
    int eval_p_max = uinterp::kDefaultMaxOrder;
    int eval_qubits = -1;
    add_input_options(eval_cmd, eval_input);
    add_angle_options(eval_cmd, eval_angle);
    eval_cmd->add_option("--formula", eval_formula, "evaluation formula")
        ->check(CLI::IsMember({"direct", "compact", "barycentric", "fourier"}));
    eval_cmd->add_option("--fmt", eval_fmt, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
    eval_cmd->add_option("--out", eval_out, "write output to a file instead of stdout");
    eval_cmd->add_option("--p-max", eval_p_max, "order search bound for matrix inputs");
    eval_cmd->add_option("--qubits", eval_qubits,
                         "assert the input acts on this many qubits (dimension 2^w)");

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient sweep over [0, 2 pi]");
    int coeffs_order = 0;
    int coeffs_samples = 256;
    std::string coeffs_formula = "fourier";
    std::string coeffs_fmt = "csv";
    std::string coeffs_out;
    coeffs_cmd->add_option("--order", coeffs_order, "cycle order p")
        ->required()
        ->check(CLI::Range(1, uinterp::kSubgroupOrderCap));
    coeffs_cmd->add_option("--samples", coeffs_samples, "number of sample angles (>= 2)")
        ->check(CLI::Range(2, 1000000));
    coeffs_cmd->add_option("--formula", coeffs_formula, "evaluation formula")
        ->check(CLI::IsMember({"direct", "compact", "barycentric", "fourier"}));
    coeffs_cmd->add_option("--fmt", coeffs_fmt, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    coeffs_cmd->add_option("--out", coeffs_out, "write output to a file instead of stdout");

    // generator
    auto* gen_cmd = app.add_subcommand("generator", "Hermitian generator of a curve");
    InputChoice gen_input;
    std::string gen_form = "closed";
    std::string gen_fmt = "pretty";
    std::string gen_out;
    int gen_p_max = uinterp::kDefaultMaxOrder;
    add_input_options(gen_cmd, gen_input);
    gen_cmd->add_option("--form", gen_form, "generator expression")
        ->check(CLI::IsMember({"closed", "fourier", "both"}));
    gen_cmd->add_option("--fmt", gen_fmt, "output format")->check(CLI::IsMember({"pretty", "json"}));
    gen_cmd->add_option("--out", gen_out, "write output to a file instead of stdout");
    gen_cmd->add_option("--p-max", gen_p_max, "order search bound for matrix inputs");

    // cycle-graph
    auto* graph_cmd = app.add_subcommand("cycle-graph", "maximal cyclic subgroups of P(n)");
    int graph_n = 0;
    int graph_qubits = -1;
    std::string graph_fmt = "dot";
    std::string graph_out;
    auto* graph_size = graph_cmd->add_option_group("size", "group size (exactly one)");
    graph_size->add_option("--n", graph_n, "number of points (1..6)");
    graph_size->add_option("--qubits", graph_qubits, "number of qubits (n = 2^w)");
    graph_size->require_option(1);
    graph_cmd->add_option("--fmt", graph_fmt, "output format")
        ->check(CLI::IsMember({"dot", "json"}));
    graph_cmd->add_option("--out", graph_out, "write output to a file instead of stdout");

    // landau
    auto* landau_cmd = app.add_subcommand("landau", "maximal permutation order table");
    int landau_n_max = 0;
    std::string landau_fmt = "pretty";
    std::string landau_out;
    landau_cmd->add_option("--n-max", landau_n_max, "table rows n = 1..n_max")->required();
    landau_cmd->add_option("--fmt", landau_fmt, "output format")
        ->check(CLI::IsMember({"pretty", "csv", "json"}));
    landau_cmd->add_option("--out", landau_out, "write output to a file instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the structural identity suite");
    InputChoice verify_input;
    std::vector<std::string> verify_random;
    std::uint64_t verify_seed = 0;
    double verify_tol = 1e-9;
    int verify_samples = 25;
    int verify_p_max = uinterp::kDefaultMaxOrder;
    auto* verify_group = verify_cmd->add_option_group("input", "curve input (exactly one)");
    verify_group->add_option("--perm", verify_input.perm,
                             "permutation as comma-separated images, e.g. 1,2,0");
    verify_group->add_option("--matrix", verify_input.matrix_path, "path to a matrix JSON file");
    verify_group->add_option("--catalog", verify_input.catalog_name, "name of a catalog entry");
    verify_group
        ->add_option("--random", verify_random, "random permutation sweep: n=<int> trials=<int>")
        ->expected(2);
    verify_group->require_option(1);
    verify_cmd->add_option("--seed", verify_seed, "seed for sampled angles and permutations");
    verify_cmd->add_option("--tol", verify_tol, "base tolerance for all checks");
    verify_cmd->add_option("--samples", verify_samples, "sampled angles per check")
        ->check(CLI::Range(1, 100000));
    verify_cmd->add_option("--p-max", verify_p_max, "order search bound for matrix inputs");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "named gates and curves");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list all catalog entries");
    std::string list_fmt = "pretty";
    std::string list_out;
    list_cmd->add_option("--fmt", list_fmt, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
    list_cmd->add_option("--out", list_out, "write output to a file instead of stdout");

    try {
        app.parse(argc, argv);

        if (*eval_cmd) {
            return run_eval(eval_input, eval_angle, eval_formula, eval_fmt, eval_out, eval_p_max,
                            eval_qubits);
        }
        if (*coeffs_cmd) {
            return run_coeffs(coeffs_order, coeffs_samples, coeffs_formula, coeffs_fmt,
                              coeffs_out);
        }
        if (*gen_cmd) {
            return run_generator(gen_input, gen_form, gen_fmt, gen_out, gen_p_max);
        }
        if (*graph_cmd) {
            return run_cycle_graph(graph_n, graph_qubits, graph_fmt, graph_out);
        }
        if (*landau_cmd) {
            return run_landau(landau_n_max, landau_fmt, landau_out);
        }
        if (*verify_cmd) {
            return run_verify(verify_input, verify_random, verify_seed, verify_tol,
                              verify_samples, verify_p_max);
        }
        if (*list_cmd) {
            return run_catalog_list(list_fmt, list_out);
        }
        std::cerr << "error:parse:no subcommand selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error:parse:" << e.what() << "\n";
        return 2;
    } catch (const uinterp::OrderDetectionError& e) {
        std::cerr << "error:order:" << e.what() << "\n";
        return 3;
    } catch (const uinterp::DimensionError& e) {
        std::cerr << "error:numeric:" << e.what() << "\n";
        return 4;
    } catch (const uinterp::NumericContractError& e) {
        std::cerr << "error:numeric:" << e.what() << "\n";
        return 4;
    } catch (const uinterp::ValidationError& e) {
        std::cerr << "error:parse:" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error:internal:" << e.what() << "\n";
        return 4;
    }
}
