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

#include "pexp/pauli.h"

#include <cmath>

namespace pexp {

char to_char(PauliLetter letter) {
    return "IXYZ"[static_cast<int>(letter)];
}

UnitaryMatrix letter_matrix(PauliLetter letter) {
    const Complex i{0, 1};
    switch (letter) {
        case PauliLetter::I:
            return {{1, 0}, {0, 1}};
        case PauliLetter::X:
            return {{0, 1}, {1, 0}};
        case PauliLetter::Y:
            return {{0, -i}, {i, 0}};
        case PauliLetter::Z:
            return {{1, 0}, {0, -1}};
    }
    throw std::logic_error("unknown Pauli letter");
}

PauliString::PauliString(std::vector<PauliLetter> letters, double coefficient)
    : letters_(std::move(letters)), coefficient_(coefficient) {
    if (letters_.empty()) {
        throw std::invalid_argument("Pauli string must act on at least one qubit");
    }
    if (!std::isfinite(coefficient_)) {
        throw std::invalid_argument("Pauli coefficient must be finite");
    }
}

PauliString PauliString::with_coefficient(double coefficient) const {
    return PauliString(letters_, coefficient);
}

bool PauliString::is_identity() const {
    for (auto l : letters_) {
        if (l != PauliLetter::I) {
            return false;
        }
    }
    return true;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto l : letters_) {
        out.push_back(to_char(l));
    }
    return out;
}

PauliString parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty Pauli string", 0);
    }
    std::vector<PauliLetter> letters;
    letters.reserve(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case 'i':
            case '1':
                letters.push_back(PauliLetter::I);
                break;
            case 'X':
            case 'x':
                letters.push_back(PauliLetter::X);
                break;
            case 'Y':
            case 'y':
                letters.push_back(PauliLetter::Y);
                break;
            case 'Z':
            case 'z':
                letters.push_back(PauliLetter::Z);
                break;
            default:
                throw ParseError(
                    "invalid Pauli character '" + std::string(1, text[k]) + "' at position " + std::to_string(k), k);
        }
    }
    return PauliString(std::move(letters));
}

UnitaryMatrix pauli_matrix(const PauliString &p, size_t max_qubits) {
    check_qubit_limit(p.num_qubits(), max_qubits);
    // Each column of a Pauli tensor has exactly one nonzero entry, so build it
    // directly instead of chaining kron calls.
    size_t n = p.num_qubits();
    size_t dim = size_t{1} << n;
    UnitaryMatrix m(dim);
    const Complex i{0, 1};
    for (size_t col = 0; col < dim; col++) {
        size_t row = col;
        Complex value = 1;
        for (size_t q = 0; q < n; q++) {
            size_t bit = size_t{1} << (n - 1 - q);
            bool one = (col & bit) != 0;
            switch (p[q]) {
                case PauliLetter::I:
                    break;
                case PauliLetter::X:
                    row ^= bit;
                    break;
                case PauliLetter::Y:
                    row ^= bit;
                    value *= one ? -i : i;
                    break;
                case PauliLetter::Z:
                    if (one) {
                        value = -value;
                    }
                    break;
            }
        }
        m(row, col) = value;
    }
    return m;
}

UnitaryMatrix pauli_exponential_oracle(const PauliString &p, double a, size_t max_qubits) {
    UnitaryMatrix m = pauli_matrix(p, max_qubits);
    Complex off = Complex{0, -std::sin(a)};
    double c = std::cos(a);
    for (auto &e : m.entries()) {
        e *= off;
    }
    for (size_t k = 0; k < m.dim(); k++) {
        m(k, k) += c;
    }
    return m;
}

SupportInfo support_info(const PauliString &p) {
    SupportInfo info;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        switch (p[q]) {
            case PauliLetter::I:
                continue;
            case PauliLetter::X:
                info.num_x++;
                break;
            case PauliLetter::Y:
                info.num_y++;
                break;
            case PauliLetter::Z:
                info.num_z++;
                break;
        }
        info.positions.push_back(q);
    }
    return info;
}

}  // namespace pexp
