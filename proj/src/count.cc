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

#include "pexp/count.h"

#include <random>
#include <stdexcept>

#include "pexp/synth.h"

namespace pexp {

std::string to_string(CostModel model) {
    return model == CostModel::kPrimitive ? "primitive" : "native";
}

CostModel parse_cost_model(std::string_view text) {
    if (text == "primitive") {
        return CostModel::kPrimitive;
    }
    if (text == "native") {
        return CostModel::kNativeFermionic;
    }
    throw std::invalid_argument("unknown cost model '" + std::string(text) + "'");
}

GateCounts &GateCounts::operator+=(const GateCounts &other) {
    entangling += other.entangling;
    aux_one_qubit += other.aux_one_qubit;
    rotations += other.rotations;
    return *this;
}

size_t entangling_cost(const Gate &g, CostModel model) {
    if (g.is_one_qubit()) {
        return 0;
    }
    if (model == CostModel::kNativeFermionic) {
        return 1;
    }
    switch (g.kind()) {
        case GateKind::CNOT:
        case GateKind::CZ:
            return 1;
        case GateKind::SWAP:
            return 3;
        case GateKind::FSWAP:
            return 4;
        case GateKind::MERGED: {
            size_t total = 0;
            for (const Gate &part : g.merged().chain) {
                total += entangling_cost(part, model);
            }
            return total;
        }
        default:
            throw std::logic_error("unexpected two-qubit gate");
    }
}

GateCounts count_gates(const Circuit &c, CostModel model) {
    GateCounts counts;
    for (const Gate &g : c.gates()) {
        if (g.is_entangling()) {
            counts.entangling += entangling_cost(g, model);
        } else if (g.is_rotation() && g.role() == GateRole::kCore) {
            counts.rotations++;
        } else {
            counts.aux_one_qubit++;
        }
    }
    return counts;
}

size_t predicted_aux_counts(const PauliString &p, Algorithm algo) {
    SupportInfo s = support_info(p);
    switch (algo) {
        case Algorithm::kStaircase:
            return 2 * s.num_x + 4 * s.num_y;
        case Algorithm::kInverted:
            return 2 * s.num_y + 2 * s.num_z;
        case Algorithm::kFermionic:
            break;
    }
    throw std::invalid_argument("no closed-form cladding count for the fermionic algorithm");
}

SavingsSummary average_savings(size_t num_qubits, size_t samples, uint64_t seed, bool include_identity) {
    if (samples == 0) {
        throw std::invalid_argument("need at least one sample");
    }
    if (num_qubits == 0) {
        throw std::invalid_argument("need at least one qubit");
    }
    static constexpr PauliLetter kNonIdentity[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    static constexpr PauliLetter kAll[] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    std::span<const PauliLetter> alphabet = include_identity ? std::span<const PauliLetter>(kAll)
                                                             : std::span<const PauliLetter>(kNonIdentity);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    SynthOptions merged{.merge = true};
    double sum_one_qubit = 0;
    double sum_cnot = 0;
    std::vector<PauliLetter> letters(num_qubits);
    for (size_t s = 0; s < samples; s++) {
        for (auto &l : letters) {
            l = alphabet[pick(rng)];
        }
        PauliString p(letters);
        GateCounts st = count_gates(synth_staircase(p, 1.0), CostModel::kNativeFermionic);
        GateCounts inv = count_gates(synth_inverted(p, 1.0), CostModel::kNativeFermionic);
        GateCounts fer = count_gates(synth_fermionic(p, 1.0, merged), CostModel::kNativeFermionic);
        sum_one_qubit += static_cast<double>(st.aux_one_qubit) - static_cast<double>(inv.aux_one_qubit);
        sum_cnot += static_cast<double>(inv.entangling) - static_cast<double>(fer.entangling);
    }
    auto n = static_cast<double>(samples);
    return SavingsSummary{
        .num_qubits = num_qubits,
        .samples = samples,
        .include_identity = include_identity,
        .mean_delta_one_qubit = sum_one_qubit / n,
        .mean_delta_cnot = sum_cnot / n,
    };
}

}  // namespace pexp
