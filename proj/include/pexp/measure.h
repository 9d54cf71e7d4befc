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

#ifndef PEXP_MEASURE_H
#define PEXP_MEASURE_H

#include <array>
#include <vector>

#include "pexp/circuit.h"
#include "pexp/linalg.h"

namespace pexp {

/// Gate-by-gate application, including the circuit's global phase.
StateVector apply_circuit(const StateVector &s, const Circuit &c);

/// Born-rule probability that `qubit` reads `outcome` (0 or 1).
double marginal_prob(const StateVector &s, size_t qubit, int outcome);

/// |amplitude|^2 for every basis outcome, indexed like the state.
std::vector<double> outcome_distribution(const StateVector &s);

/// Exact probabilities, no sampling.
struct MeasurementReport {
    size_t num_qubits = 0;
    /// marginals[q][bit]
    std::vector<std::array<double, 2>> marginals;
    std::vector<double> distribution;

    double prob(size_t qubit, int outcome) const { return marginals.at(qubit).at(outcome); }
};

MeasurementReport measure(const StateVector &s);

struct InterferenceDemo {
    StateVector swap_state;
    StateVector fswap_state;
    MeasurementReport swap_report;
    MeasurementReport fswap_report;
};

/// Bell state (|00> + |11>)/sqrt2 pushed through SWAP then H(x)H, and through
/// FSWAP then H(x)H. The FSWAP sign on |11> flips which outcomes interfere.
InterferenceDemo interference_demo();

}  // namespace pexp

#endif
