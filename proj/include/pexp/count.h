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

#ifndef PEXP_COUNT_H
#define PEXP_COUNT_H

#include <cstdint>
#include <string>

#include "pexp/circuit.h"
#include "pexp/pauli.h"

namespace pexp {

enum class Algorithm : uint8_t;

/// How entangling gates are priced.
///
/// kPrimitive decomposes into CNOT-equivalents: CNOT = CZ = 1, SWAP = 3,
/// FSWAP = 4 (SWAP followed by CZ), MERGED = sum over its recorded chain.
/// kNativeFermionic prices every two-qubit gate, merged or not, at 1.
enum class CostModel : uint8_t { kPrimitive, kNativeFermionic };

std::string to_string(CostModel model);
/// Accepts "primitive" and "native".
CostModel parse_cost_model(std::string_view text);

struct GateCounts {
    size_t entangling = 0;
    /// One-qubit cladding gates; excludes the central rotations.
    size_t aux_one_qubit = 0;
    size_t rotations = 0;

    size_t total_one_qubit() const { return aux_one_qubit + rotations; }
    GateCounts &operator+=(const GateCounts &other);
    bool operator==(const GateCounts &other) const = default;
};

/// Entangling cost of one gate under a model (0 for one-qubit gates).
size_t entangling_cost(const Gate &g, CostModel model);

GateCounts count_gates(const Circuit &c, CostModel model);

/// Closed-form cladding counts: staircase 2N_x + 4N_y, inverted 2N_y + 2N_z.
/// Throws std::invalid_argument for the fermionic algorithm.
size_t predicted_aux_counts(const PauliString &p, Algorithm algo);

struct SavingsSummary {
    size_t num_qubits = 0;
    size_t samples = 0;
    bool include_identity = false;
    /// Mean of (staircase aux - inverted aux).
    double mean_delta_one_qubit = 0;
    /// Mean of (inverted entangling - merged fermionic entangling, native model).
    double mean_delta_cnot = 0;
};

/// Monte-Carlo average of the one-qubit and entangling savings over random
/// strings with letters drawn uniformly from {X,Y,Z}, or {I,X,Y,Z} when
/// `include_identity` is set. Deterministic for a given seed. Counting needs
/// no matrices, so `num_qubits` is not bounded by the dense limit.
SavingsSummary average_savings(size_t num_qubits, size_t samples, uint64_t seed, bool include_identity = false);

}  // namespace pexp

#endif
