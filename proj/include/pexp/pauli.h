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

#ifndef PEXP_PAULI_H
#define PEXP_PAULI_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pexp/linalg.h"

namespace pexp {

enum class PauliLetter : uint8_t { I, X, Y, Z };

char to_char(PauliLetter letter);
/// The 2x2 matrix of a single letter.
UnitaryMatrix letter_matrix(PauliLetter letter);

/// Raised by text parsers. `position()` is a 0-based character offset for
/// Pauli strings and a 1-based line number for circuit text.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t position)
        : std::invalid_argument(message), position_(position) {}
    size_t position() const { return position_; }

   private:
    size_t position_;
};

/// Tensor product of Pauli letters with a real coefficient `a`, representing
/// the operator a * P_0 (x) P_1 (x) ... (x) P_{n-1}. The coefficient is kept
/// apart from the letters so the same string can be synthesized at any angle.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<PauliLetter> letters, double coefficient = 1.0);

    size_t num_qubits() const { return letters_.size(); }
    const std::vector<PauliLetter> &letters() const { return letters_; }
    PauliLetter operator[](size_t k) const { return letters_[k]; }
    double coefficient() const { return coefficient_; }
    PauliString with_coefficient(double coefficient) const;

    bool is_identity() const;
    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<PauliLetter> letters_;
    double coefficient_ = 1.0;
};

/// Parses letters from {I, 1, X, Y, Z} (any case); '1' is read as I.
PauliString parse_pauli(std::string_view text);

/// Dense 2^n x 2^n matrix of the letters (coefficient ignored).
UnitaryMatrix pauli_matrix(const PauliString &p, size_t max_qubits = kDefaultMaxQubits);

/// exp(-i a P) = cos(a) I - i sin(a) P, using P^2 = I. The string's own
/// coefficient is ignored; `a` is the full angle.
UnitaryMatrix pauli_exponential_oracle(const PauliString &p, double a, size_t max_qubits = kDefaultMaxQubits);

struct SupportInfo {
    std::vector<size_t> positions;
    size_t num_x = 0;
    size_t num_y = 0;
    size_t num_z = 0;

    size_t weight() const { return positions.size(); }
    bool operator==(const SupportInfo &other) const = default;
};

SupportInfo support_info(const PauliString &p);

}  // namespace pexp

#endif
