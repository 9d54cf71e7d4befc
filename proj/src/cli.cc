// Copyright 2026 The pexp Authors
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

#include "pexp/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pexp/count.h"
#include "pexp/measure.h"
#include "pexp/synth.h"
#include "pexp/trotter.h"

namespace pexp {

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SynthFlags {
    std::string algo;
    std::string pauli;
    double angle = 1.0;
    bool merge = false;
    bool expand_identities = false;
    std::string cost_model = "primitive";

    void attach(CLI::App &cmd, bool angle_required) {
        cmd.add_option("--algo", algo, "staircase | inverted | fermionic")
            ->required()
            ->check(CLI::IsMember({"staircase", "inverted", "fermionic"}));
        cmd.add_option("--pauli", pauli, "Pauli letters over I/1, X, Y, Z")->required();
        auto *angle_opt = cmd.add_option("--angle", angle, "coefficient a of exp(-i a P); the rotation gets 2a");
        if (angle_required) {
            angle_opt->required();
        }
        cmd.add_flag("--merge", merge, "merge fermionic entangler runs");
        cmd.add_flag("--expand-identities", expand_identities, "bridge identity letters with SWAP pairs");
        cmd.add_option("--cost-model", cost_model, "primitive | native")
            ->check(CLI::IsMember({"primitive", "native"}));
    }

    SynthOptions options() const {
        return {.merge = merge, .expand_identities = expand_identities};
    }
};

ordered_json counts_json(Algorithm algo, CostModel model, const GateCounts &counts) {
    return ordered_json{
        {"algo", to_string(algo)},
        {"model", to_string(model)},
        {"entangling", counts.entangling},
        {"aux_one_qubit", counts.aux_one_qubit},
        {"rotations", counts.rotations},
    };
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Circuit synthesis for Pauli exponentials exp(-i a P)", "pexp"};
    app.require_subcommand(1);
    double tolerance = kEquivalenceTol;
    size_t max_qubits = kDefaultMaxQubits;
    app.add_option("--tolerance", tolerance, "verification tolerance on max-entry distance")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-qubits", max_qubits, "largest qubit count for dense matrices")->check(CLI::Range(1, 16));

    SynthFlags synth_flags;
    auto *synth_cmd = app.add_subcommand("synth", "print the circuit and its gate counts");
    synth_flags.attach(*synth_cmd, true);

    SynthFlags verify_flags;
    auto *verify_cmd = app.add_subcommand("verify", "compare the circuit against exp(-i a P)");
    verify_flags.attach(*verify_cmd, true);

    SynthFlags count_flags;
    auto *count_cmd = app.add_subcommand("count", "gate counts and closed-form predictions");
    count_flags.attach(*count_cmd, false);

    size_t sweep_n = 0;
    size_t sweep_samples = 0;
    uint64_t sweep_seed = 0;
    bool include_identity = false;
    auto *sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo mean savings over random strings");
    sweep_cmd->add_option("--n", sweep_n, "qubit count")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--samples", sweep_samples, "number of random strings")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sweep_seed, "random seed")->required();
    sweep_cmd->add_flag("--include-identity", include_identity, "draw letters from {I,X,Y,Z} instead of {X,Y,Z}");

    std::string ham_path;
    double trotter_t = 1.0;
    size_t trotter_steps = 1;
    std::string per_term = "auto";
    bool report_error = false;
    bool trotter_merge = false;
    auto *trotter_cmd = app.add_subcommand("trotter", "first-order product-formula circuit");
    trotter_cmd->add_option("--hamiltonian", ham_path, "Hamiltonian JSON file")->required();
    trotter_cmd->add_option("--t", trotter_t, "total evolution time")->required();
    trotter_cmd->add_option("--steps", trotter_steps, "number of steps")->required()->check(CLI::PositiveNumber);
    trotter_cmd->add_option("--per-term", per_term, "auto | staircase | inverted | fermionic")
        ->check(CLI::IsMember({"auto", "staircase", "inverted", "fermionic"}));
    trotter_cmd->add_flag("--merge", trotter_merge, "merge fermionic entangler runs");
    trotter_cmd->add_flag("--report-error", report_error, "append the exact error when the register is small enough");

    std::string demo_name;
    auto *demo_cmd = app.add_subcommand("demo", "built-in demonstrations");
    demo_cmd->add_option("name", demo_name, "demonstration name")->required()->check(CLI::IsMember({"interference"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*synth_cmd || *verify_cmd || *count_cmd) {
            const SynthFlags &f = *synth_cmd ? synth_flags : *verify_cmd ? verify_flags : count_flags;
            Algorithm algo = parse_algorithm(f.algo);
            CostModel model = parse_cost_model(f.cost_model);
            PauliString p = parse_pauli(f.pauli);
            if (*synth_cmd) {
                Circuit c = synthesize_circuit(algo, p, f.angle, f.options());
                out << serialize(c);
                out << counts_json(algo, model, count_gates(c, model)).dump() << '\n';
                return kExitOk;
            }
            if (*verify_cmd) {
                SynthReport report = synthesize(algo, p, f.angle, f.options(), model, tolerance, max_qubits);
                ordered_json j{
                    {"algo", to_string(algo)},
                    {"pauli", p.str()},
                    {"angle", f.angle},
                    {"distance", report.distance},
                    {"verified", report.verified},
                };
                if (report.phase_only) {
                    j["phase_only"] = true;
                }
                out << j.dump() << '\n';
                if (!report.verified) {
                    err << "verification failed: distance " << report.distance << " >= tolerance " << tolerance
                        << '\n';
                    return kExitNotVerified;
                }
                return kExitOk;
            }
            Circuit c = synthesize_circuit(algo, p, f.angle, f.options());
            ordered_json j = counts_json(algo, model, count_gates(c, model));
            j["total_one_qubit"] = count_gates(c, model).total_one_qubit();
            SupportInfo s = support_info(p);
            j["support"] = {{"n_x", s.num_x}, {"n_y", s.num_y}, {"n_z", s.num_z}};
            if (algo != Algorithm::kFermionic) {
                j["predicted_aux_one_qubit"] = predicted_aux_counts(p, algo);
                j["predicted_entangling"] = s.weight() == 0 ? 0 : 2 * (s.weight() - 1);
            }
            out << j.dump() << '\n';
            return kExitOk;
        }
        if (*sweep_cmd) {
            SavingsSummary s = average_savings(sweep_n, sweep_samples, sweep_seed, include_identity);
            ordered_json j{
                {"n", s.num_qubits},
                {"samples", s.samples},
                {"seed", sweep_seed},
                {"alphabet", include_identity ? "IXYZ" : "XYZ"},
                {"mean_delta_one_qubit", s.mean_delta_one_qubit},
                {"mean_delta_cnot", s.mean_delta_cnot},
            };
            out << j.dump() << '\n';
            return kExitOk;
        }
        if (*trotter_cmd) {
            std::optional<Hamiltonian> loaded;
            try {
                loaded = parse_hamiltonian_json(read_file(ham_path));
            } catch (const std::invalid_argument &ex) {
                throw IoError("'" + ham_path + "': " + ex.what());
            }
            const Hamiltonian &h = *loaded;
            TrotterPlan plan{.t = trotter_t, .steps = trotter_steps, .options = {.merge = trotter_merge}};
            if (per_term != "auto") {
                plan.per_term = parse_algorithm(per_term);
            }
            out << serialize(trotter_circuit(h, plan));
            if (report_error) {
                if (h.num_qubits() <= max_qubits) {
                    out << ordered_json{{"error", trotter_error(h, plan, max_qubits)}}.dump() << '\n';
                } else {
                    err << "note: " << h.num_qubits() << " qubits exceed --max-qubits; error not computed\n";
                }
            }
            return kExitOk;
        }
        if (*demo_cmd) {
            InterferenceDemo demo = interference_demo();
            auto branch = [](const MeasurementReport &r) {
                ordered_json dist = ordered_json::object();
                for (size_t idx = 0; idx < r.distribution.size(); idx++) {
                    std::string key;
                    for (size_t q = 0; q < r.num_qubits; q++) {
                        key.push_back((idx >> (r.num_qubits - 1 - q)) & 1 ? '1' : '0');
                    }
                    dist[key] = r.distribution[idx];
                }
                ordered_json marginals = ordered_json::array();
                for (const auto &m : r.marginals) {
                    marginals.push_back({{"p0", m[0]}, {"p1", m[1]}});
                }
                return ordered_json{{"distribution", dist}, {"marginals", marginals}};
            };
            ordered_json j{
                {"state", "(|00>+|11>)/sqrt2"},
                {"swap_then_hh", branch(demo.swap_report)},
                {"fswap_then_hh", branch(demo.fswap_report)},
                {"overlap", std::abs(inner_product(demo.swap_state, demo.fswap_state))},
            };
            out << j.dump(2) << '\n';
            return kExitOk;
        }
    } catch (const ParseError &ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const SizeError &ex) {
        err << "size error: " << ex.what() << '\n';
        return kExitIoOrSize;
    } catch (const SeriesError &ex) {
        err << "size error: " << ex.what() << '\n';
        return kExitIoOrSize;
    } catch (const IoError &ex) {
        err << "i/o error: " << ex.what() << '\n';
        return kExitIoOrSize;
    } catch (const std::invalid_argument &ex) {
        err << "usage error: " << ex.what() << '\n';
        return kExitUsage;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace pexp
