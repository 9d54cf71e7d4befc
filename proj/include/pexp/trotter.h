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

#ifndef PEXP_TROTTER_H
#define PEXP_TROTTER_H

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pexp/circuit.h"
#include "pexp/pauli.h"
#include "pexp/synth.h"

namespace pexp {

struct HamiltonianTerm {
    double coeff;
    PauliString pauli;
};

/// H = sum_k coeff_k P_k over a fixed number of qubits.
class Hamiltonian {
   public:
    Hamiltonian(size_t num_qubits, std::vector<HamiltonianTerm> terms);

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<HamiltonianTerm> &terms() const { return terms_; }

   private:
    size_t num_qubits_;
    std::vector<HamiltonianTerm> terms_;
};

/// Reads `{"qubits": n, "terms": [{"coeff": c, "pauli": "XX"}, ...]}`.
/// Throws std::invalid_argument on malformed input.
Hamiltonian parse_hamiltonian_json(std::string_view text);

struct TrotterPlan {
    double t = 1.0;
    size_t steps = 1;
    /// Empty means pick per term with `auto_algorithm`.
    std::optional<Algorithm> per_term;
    SynthOptions options;
};

/// Staircase when N_z > N_x + N_y (fewer cladding gates), inverted otherwise.
Algorithm auto_algorithm(const PauliString &p);

/// First-order product formula: `steps` repetitions of the per-term circuits
/// for exp(-i coeff_k (t/steps) P_k), terms in file order.
Circuit trotter_circuit(const Hamiltonian &h, const TrotterPlan &plan);

/// Raised when the scaled Taylor series would need more terms than allowed.
class SeriesError : public std::runtime_error {
   public:
    SeriesError(const std::string &message, size_t required_order)
        : std::runtime_error(message), required_order_(required_order) {}
    size_t required_order() const { return required_order_; }

   private:
    size_t required_order_;
};

/// exp(-i t H) by scaling and squaring a truncated Taylor series. The argument
/// is halved until its norm bound t*sum|coeff| is at most 1/2, and the series
/// is cut once the tail bound drops below 1e-17 per factor.
UnitaryMatrix exact_hamiltonian_unitary(
    const Hamiltonian &h, double t, size_t max_qubits = kDefaultMaxQubits, size_t max_order = 40);

/// exact_distance(exp(-i t H), evaluate(trotter_circuit)).
double trotter_error(const Hamiltonian &h, const TrotterPlan &plan, size_t max_qubits = kDefaultMaxQubits);

}  // namespace pexp

#endif
