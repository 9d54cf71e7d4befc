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

#include "pexp/synth.h"

#include <numbers>
#include <stdexcept>

namespace pexp {

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 2;

// The pieces every builder shares: basis-change cladding around an entangler
// ladder around one central rotation. The emitted circuit is
//   clad_before, entanglers, rotation, reversed entanglers, clad_after.
struct Ladder {
    std::vector<Gate> clad_before;
    std::vector<Gate> entanglers;  // outermost first
    std::vector<Gate> rotation;

    void clad(std::initializer_list<Gate> gates) {
        clad_before.insert(clad_before.end(), gates.begin(), gates.end());
    }
};

Gate inverse_of_cladding(const Gate &g) {
    if (g.kind() == GateKind::RZ) {
        return Gate::phase(g.qubits()[0], -g.angle());
    }
    return g;
}

bool is_swap_like(const Gate &g) {
    return g.kind() == GateKind::SWAP || g.kind() == GateKind::FSWAP;
}

// Collapses each maximal SWAP/FSWAP run, together with the CNOT directly inside
// it, into a single conjugation-form MERGED gate e_i ... e_j ... e_i. Valid
// because nothing nested inside the run touches the wires of e_i .. e_{j-1}.
std::vector<Gate> merge_runs(const std::vector<Gate> &entanglers) {
    std::vector<Gate> out;
    size_t i = 0;
    while (i < entanglers.size()) {
        if (!is_swap_like(entanglers[i])) {
            out.push_back(entanglers[i++]);
            continue;
        }
        size_t j = i;
        while (j < entanglers.size() && is_swap_like(entanglers[j])) {
            j++;
        }
        if (j < entanglers.size() && entanglers[j].kind() == GateKind::CNOT) {
            j++;
        }
        if (j - i == 1) {
            out.push_back(entanglers[i]);
        } else {
            std::vector<Gate> chain(entanglers.begin() + i, entanglers.begin() + j);
            for (size_t k = j - 1; k-- > i;) {
                chain.push_back(entanglers[k]);
            }
            out.push_back(compose_merged(chain));
        }
        i = j;
    }
    return out;
}

Circuit assemble(size_t num_qubits, const Ladder &ladder) {
    Circuit c(num_qubits);
    for (const Gate &g : ladder.clad_before) {
        c.append(g);
    }
    for (const Gate &g : ladder.entanglers) {
        c.append(g);
    }
    for (const Gate &g : ladder.rotation) {
        c.append(g);
    }
    for (size_t k = ladder.entanglers.size(); k-- > 0;) {
        c.append(ladder.entanglers[k]);
    }
    for (size_t k = ladder.clad_before.size(); k-- > 0;) {
        c.append(inverse_of_cladding(ladder.clad_before[k]));
    }
    return c;
}

void clad_staircase(Ladder &ladder, PauliLetter letter, size_t q) {
    if (letter == PauliLetter::X) {
        ladder.clad({Gate::h(q)});
    } else if (letter == PauliLetter::Y) {
        ladder.clad({Gate::phase(q, -kQuarterTurn), Gate::h(q)});
    }
}

void clad_inverted(Ladder &ladder, PauliLetter letter, size_t q) {
    if (letter == PauliLetter::Z) {
        ladder.clad({Gate::h(q)});
    } else if (letter == PauliLetter::Y) {
        ladder.clad({Gate::phase(q, -kQuarterTurn)});
    }
}

Circuit build(Algorithm algo, const PauliString &p, double a, const SynthOptions &options) {
    size_t n = p.num_qubits();
    SupportInfo support = support_info(p);
    if (support.positions.empty()) {
        return Circuit(n, -a);
    }
    Ladder ladder;
    size_t carrier = support.positions.front();
    size_t last = options.expand_identities ? n - 1 : support.positions.back();
    for (size_t q = carrier; q <= last; q++) {
        PauliLetter letter = p[q];
        bool first = q == support.positions.front();
        if (letter == PauliLetter::I) {
            if (options.expand_identities) {
                ladder.entanglers.push_back(Gate::swap(carrier, q));
                carrier = q;
            }
            continue;
        }
        switch (algo) {
            case Algorithm::kStaircase:
                clad_staircase(ladder, letter, q);
                if (!first) {
                    ladder.entanglers.push_back(Gate::cnot(carrier, q));
                }
                break;
            case Algorithm::kInverted:
                clad_inverted(ladder, letter, q);
                if (!first) {
                    ladder.entanglers.push_back(Gate::cnot(q, carrier));
                }
                break;
            case Algorithm::kFermionic:
                if (first) {
                    clad_inverted(ladder, letter, q);
                } else if (letter == PauliLetter::Z) {
                    ladder.entanglers.push_back(Gate::fswap(carrier, q));
                } else {
                    clad_inverted(ladder, letter, q);
                    ladder.entanglers.push_back(Gate::cnot(q, carrier));
                }
                break;
        }
        carrier = q;
    }
    if (algo == Algorithm::kStaircase) {
        ladder.rotation.push_back(Gate::rz(carrier, 2 * a));
    } else {
        ladder.rotation.push_back(Gate::rx(carrier, 2 * a));
    }
    if (algo == Algorithm::kFermionic && options.merge) {
        ladder.entanglers = merge_runs(ladder.entanglers);
    }
    return assemble(n, ladder);
}

}  // namespace

std::string to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::kStaircase:
            return "staircase";
        case Algorithm::kInverted:
            return "inverted";
        case Algorithm::kFermionic:
            return "fermionic";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "staircase") {
        return Algorithm::kStaircase;
    }
    if (text == "inverted") {
        return Algorithm::kInverted;
    }
    if (text == "fermionic") {
        return Algorithm::kFermionic;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

Circuit synth_staircase(const PauliString &p, double a, const SynthOptions &options) {
    return build(Algorithm::kStaircase, p, a, options);
}

Circuit synth_inverted(const PauliString &p, double a, const SynthOptions &options) {
    return build(Algorithm::kInverted, p, a, options);
}

Circuit synth_fermionic(const PauliString &p, double a, const SynthOptions &options) {
    return build(Algorithm::kFermionic, p, a, options);
}

Circuit synthesize_circuit(Algorithm algo, const PauliString &p, double a, const SynthOptions &options) {
    return build(algo, p, a, options);
}

SynthReport synthesize(
    Algorithm algo,
    const PauliString &p,
    double a,
    const SynthOptions &options,
    CostModel model,
    double tolerance,
    size_t max_qubits) {
    Circuit c = build(algo, p, a, options);
    GateCounts counts = count_gates(c, model);
    double distance = exact_distance(evaluate(c, max_qubits), pauli_exponential_oracle(p, a, max_qubits));
    return SynthReport{
        .circuit = std::move(c),
        .counts = counts,
        .verified = distance < tolerance,
        .distance = distance,
        .phase_only = p.is_identity(),
    };
}

}  // namespace pexp
