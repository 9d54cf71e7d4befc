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

#include "pexp/measure.h"

#include <numbers>
#include <stdexcept>

namespace pexp {

StateVector apply_circuit(const StateVector &s, const Circuit &c) {
    if (s.num_qubits() != c.num_qubits()) {
        throw DimensionError(
            "state has " + std::to_string(s.num_qubits()) + " qubits but the circuit has " +
            std::to_string(c.num_qubits()));
    }
    StateVector out = s;
    for (const Gate &g : c.gates()) {
        apply_gate(g, out.amplitudes(), c.num_qubits());
    }
    if (c.global_phase() != 0) {
        Complex phase = std::polar(1.0, c.global_phase());
        for (auto &a : out.amplitudes()) {
            a *= phase;
        }
    }
    return out;
}

double marginal_prob(const StateVector &s, size_t qubit, int outcome) {
    size_t n = s.num_qubits();
    if (qubit >= n) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("measurement outcome must be 0 or 1");
    }
    size_t bit = size_t{1} << (n - 1 - qubit);
    double total = 0;
    for (size_t idx = 0; idx < s.dim(); idx++) {
        if (bool(idx & bit) == bool(outcome)) {
            total += std::norm(s[idx]);
        }
    }
    return total;
}

std::vector<double> outcome_distribution(const StateVector &s) {
    std::vector<double> probs(s.dim());
    for (size_t idx = 0; idx < s.dim(); idx++) {
        probs[idx] = std::norm(s[idx]);
    }
    return probs;
}

MeasurementReport measure(const StateVector &s) {
    MeasurementReport report;
    report.num_qubits = s.num_qubits();
    for (size_t q = 0; q < report.num_qubits; q++) {
        report.marginals.push_back({marginal_prob(s, q, 0), marginal_prob(s, q, 1)});
    }
    report.distribution = outcome_distribution(s);
    return report;
}

InterferenceDemo interference_demo() {
    double r = 1 / std::numbers::sqrt2;
    StateVector bell({r, 0, 0, r});
    Circuit via_swap(2, {Gate::swap(0, 1), Gate::h(0), Gate::h(1)});
    Circuit via_fswap(2, {Gate::fswap(0, 1), Gate::h(0), Gate::h(1)});
    StateVector swapped = apply_circuit(bell, via_swap);
    StateVector fswapped = apply_circuit(bell, via_fswap);
    return InterferenceDemo{
        .swap_state = swapped,
        .fswap_state = fswapped,
        .swap_report = measure(swapped),
        .fswap_report = measure(fswapped),
    };
}

}  // namespace pexp
