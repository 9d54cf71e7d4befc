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

#include "pexp/trotter.h"

#include <cmath>

#include "json.hpp"

namespace pexp {

Hamiltonian::Hamiltonian(size_t num_qubits, std::vector<HamiltonianTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("Hamiltonian needs at least one term");
    }
    for (const auto &term : terms_) {
        if (term.pauli.num_qubits() != num_qubits_) {
            throw std::invalid_argument(
                "term " + term.pauli.str() + " has length " + std::to_string(term.pauli.num_qubits()) +
                ", expected " + std::to_string(num_qubits_));
        }
        if (!std::isfinite(term.coeff)) {
            throw std::invalid_argument("term coefficient must be finite");
        }
    }
}

Hamiltonian parse_hamiltonian_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &ex) {
        throw std::invalid_argument(std::string("Hamiltonian JSON: ") + ex.what());
    }
    try {
        auto n = doc.at("qubits").get<size_t>();
        std::vector<HamiltonianTerm> terms;
        for (const auto &entry : doc.at("terms")) {
            terms.push_back({entry.at("coeff").get<double>(), parse_pauli(entry.at("pauli").get<std::string>())});
        }
        return Hamiltonian(n, std::move(terms));
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("Hamiltonian JSON: ") + ex.what());
    }
}

Algorithm auto_algorithm(const PauliString &p) {
    SupportInfo s = support_info(p);
    return s.num_z > s.num_x + s.num_y ? Algorithm::kStaircase : Algorithm::kInverted;
}

Circuit trotter_circuit(const Hamiltonian &h, const TrotterPlan &plan) {
    if (plan.steps == 0) {
        throw std::invalid_argument("Trotter plan needs at least one step");
    }
    double dt = plan.t / static_cast<double>(plan.steps);
    Circuit step(h.num_qubits());
    for (const auto &term : h.terms()) {
        Algorithm algo = plan.per_term.value_or(auto_algorithm(term.pauli));
        step.append(synthesize_circuit(algo, term.pauli, term.coeff * dt, plan.options));
    }
    Circuit total(h.num_qubits());
    for (size_t k = 0; k < plan.steps; k++) {
        total.append(step);
    }
    return total;
}

UnitaryMatrix exact_hamiltonian_unitary(const Hamiltonian &h, double t, size_t max_qubits, size_t max_order) {
    check_qubit_limit(h.num_qubits(), max_qubits);
    size_t dim = size_t{1} << h.num_qubits();
    UnitaryMatrix generator(dim);
    double norm_bound = 0;
    for (const auto &term : h.terms()) {
        generator = generator + pauli_matrix(term.pauli, max_qubits).scaled(Complex{0, -t * term.coeff});
        norm_bound += std::abs(t * term.coeff);
    }
    if (!std::isfinite(norm_bound)) {
        throw SeriesError("Hamiltonian norm is not finite", 0);
    }

    int squarings = 0;
    double x = norm_bound;
    while (x > 0.5) {
        x /= 2;
        squarings++;
    }
    // Smallest order K whose Lagrange tail x^(K+1)/(K+1)! * e^x is below 1e-17.
    size_t order = 0;
    double tail = x * std::exp(x);
    while (tail >= 1e-17) {
        order++;
        tail *= x / static_cast<double>(order + 1);
        if (x == 0) {
            break;
        }
    }
    if (order > max_order) {
        throw SeriesError(
            "Taylor series needs order " + std::to_string(order) + " but the limit is " + std::to_string(max_order),
            order);
    }

    UnitaryMatrix scaled = generator.scaled(std::ldexp(1.0, -squarings));
    UnitaryMatrix result = UnitaryMatrix::identity(dim);
    UnitaryMatrix power = UnitaryMatrix::identity(dim);
    for (size_t k = 1; k <= order; k++) {
        power = matmul(power, scaled).scaled(1.0 / static_cast<double>(k));
        result = result + power;
    }
    for (int s = 0; s < squarings; s++) {
        result = matmul(result, result);
    }
    return result;
}

double trotter_error(const Hamiltonian &h, const TrotterPlan &plan, size_t max_qubits) {
    return exact_distance(
        exact_hamiltonian_unitary(h, plan.t, max_qubits), evaluate(trotter_circuit(h, plan), max_qubits));
}

}  // namespace pexp
