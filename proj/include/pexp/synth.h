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

#ifndef PEXP_SYNTH_H
#define PEXP_SYNTH_H

#include <cstdint>
#include <string>
#include <string_view>

#include "pexp/circuit.h"
#include "pexp/count.h"
#include "pexp/pauli.h"

namespace pexp {

enum class Algorithm : uint8_t { kStaircase, kInverted, kFermionic };

std::string to_string(Algorithm algo);
/// Accepts "staircase", "inverted" and "fermionic".
Algorithm parse_algorithm(std::string_view text);

struct SynthOptions {
    /// Fermionic only: collapse entangler runs into MERGED gates.
    bool merge = false;
    /// Bridge identity letters with explicit SWAP pairs that walk the rotation
    /// carrier across them, instead of spanning entanglers over the gap.
    bool expand_identities = false;
};

/// All three builders return a circuit whose unitary is exactly exp(-i a P),
/// with no global-phase correction. An all-identity string yields an empty
/// circuit with global phase -a.
///
/// Staircase: CNOT(control above, target below) chain over the support, central
/// rz(2a) on the last support qubit; X qubits clad with h, Y qubits with
/// rz(-pi/2),h before and h,rz(pi/2) after.
Circuit synth_staircase(const PauliString &p, double a, const SynthOptions &options = {});

/// Inverted staircase: CNOT(control below, target above) chain, central rx(2a);
/// Z qubits clad with h, Y qubits with rz(-pi/2) before and rz(pi/2) after.
Circuit synth_inverted(const PauliString &p, double a, const SynthOptions &options = {});

/// Inverted staircase in which every Z after the first support qubit is
/// realized by an FSWAP between the rotation carrier and that qubit (the
/// carrier then moves there) instead of an h-clad CNOT.
Circuit synth_fermionic(const PauliString &p, double a, const SynthOptions &options = {});

Circuit synthesize_circuit(Algorithm algo, const PauliString &p, double a, const SynthOptions &options = {});

struct SynthReport {
    Circuit circuit;
    GateCounts counts;
    bool verified = false;
    double distance = 0;
    /// The string was all identities; the circuit is a bare global phase.
    bool phase_only = false;
};

/// Synthesizes, evaluates against the analytic oracle, and counts.
SynthReport synthesize(
    Algorithm algo,
    const PauliString &p,
    double a,
    const SynthOptions &options = {},
    CostModel model = CostModel::kPrimitive,
    double tolerance = kEquivalenceTol,
    size_t max_qubits = kDefaultMaxQubits);

}  // namespace pexp

#endif
