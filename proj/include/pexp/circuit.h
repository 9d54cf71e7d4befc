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

#ifndef PEXP_CIRCUIT_H
#define PEXP_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

#include "pexp/gate.h"
#include "pexp/linalg.h"

namespace pexp {

/// Ordered gate list over `num_qubits` wires. Index 0 acts first in time, so
/// the evaluated unitary is e^{i phase} * G_last * ... * G_0.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(size_t num_qubits, double global_phase = 0);
    Circuit(size_t num_qubits, std::vector<Gate> gates, double global_phase = 0);

    size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    double global_phase() const { return global_phase_; }

    /// Throws std::out_of_range if the gate does not fit.
    void append(Gate g);
    void append(const Circuit &other);
    void add_global_phase(double phase) { global_phase_ += phase; }

    /// Copy widened to `num_qubits` wires (must not shrink).
    Circuit widened(size_t num_qubits) const;

    bool empty() const { return gates_.empty(); }
    size_t size() const { return gates_.size(); }

    bool operator==(const Circuit &other) const = default;

   private:
    size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
    double global_phase_ = 0;
};

/// Dense unitary of the circuit.
UnitaryMatrix evaluate(const Circuit &c, size_t max_qubits = kDefaultMaxQubits);

/// Returns [left] ++ c.gates ++ [right]; the result keeps c's width and phase.
Circuit reverse_conjugate_extend(const Circuit &c, const Gate &left, const Gate &right);

/// Line-oriented text: `qubits <n>`, optional `phase <radians>`, then one gate
/// per line (see Gate::str). Blank lines and `#` comments are ignored on input.
std::string serialize(const Circuit &c);
/// Throws ParseError carrying the 1-based line number.
Circuit parse_circuit(std::string_view text);

}  // namespace pexp

#endif
