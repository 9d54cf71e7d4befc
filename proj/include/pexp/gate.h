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

#ifndef PEXP_GATE_H
#define PEXP_GATE_H

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "pexp/linalg.h"

namespace pexp {

enum class GateKind : uint8_t { H, RX, RY, RZ, CNOT, SWAP, FSWAP, CZ, MERGED };

/// Accounting tag: the central rotation of a synthesized exponential is
/// `kCore`; basis-change cladding is `kAuxiliary`. Does not affect the matrix.
enum class GateRole : uint8_t { kAuxiliary, kCore };

/// Local action of a MERGED gate on its span: basis state |c> goes to
/// sign[c] * |image[c]>, with span-local indices read most significant first.
struct SignedPermutation {
    std::vector<uint32_t> image;
    std::vector<int8_t> sign;

    bool operator==(const SignedPermutation &other) const = default;
};

/// Signs of the entries a merged gate moves between the upper and lower half
/// of its span (upper-right block of the local matrix, in row order).
struct SignPattern {
    std::vector<int8_t> signs;

    std::string str() const;
    static SignPattern parse(std::string_view text);
    SignPattern flipped() const;
    bool operator==(const SignPattern &other) const = default;
};

class Gate;

/// Widest span whose signed permutation may be tabulated.
inline constexpr size_t kMaxMergedSpan = 24;

struct MergedData {
    size_t lo;
    size_t hi;
    std::vector<Gate> chain;

    /// Span-local table, built from `chain` on first use. Throws SizeError
    /// when the span is wider than kMaxMergedSpan.
    const SignedPermutation &permutation() const;

   private:
    mutable std::once_flag once_;
    mutable SignedPermutation permutation_;
};

class Gate {
   public:
    static Gate h(size_t q);
    static Gate rx(size_t q, double theta, GateRole role = GateRole::kCore);
    static Gate ry(size_t q, double theta, GateRole role = GateRole::kCore);
    static Gate rz(size_t q, double theta, GateRole role = GateRole::kCore);
    /// rz(+-pi/2) used as basis-change cladding.
    static Gate phase(size_t q, double theta);
    static Gate cnot(size_t control, size_t target);
    static Gate swap(size_t a, size_t b);
    static Gate fswap(size_t a, size_t b);
    static Gate cz(size_t a, size_t b);

    GateKind kind() const { return kind_; }
    GateRole role() const { return role_; }
    Gate with_role(GateRole role) const;

    /// Touched qubits: one for single-qubit gates, (control, target) for CNOT,
    /// (lo, hi) span for MERGED.
    std::span<const size_t> qubits() const { return {qubits_.data(), arity_}; }
    double angle() const { return angle_; }

    bool is_one_qubit() const { return arity_ == 1; }
    bool is_rotation() const;
    bool is_entangling() const { return arity_ == 2; }

    /// Valid for MERGED only.
    const MergedData &merged() const;

    size_t min_qubit() const;
    size_t max_qubit() const;

    /// Structural equality; ignores the accounting role.
    bool operator==(const Gate &other) const;

    /// One line of circuit text, e.g. `cx q[0],q[1]`.
    std::string str() const;

   private:
    friend Gate compose_merged(std::span<const Gate> chain);
    Gate(GateKind kind, size_t arity, std::array<size_t, 2> qubits, double angle, GateRole role);

    GateKind kind_;
    size_t arity_;
    std::array<size_t, 2> qubits_;
    double angle_ = 0;
    GateRole role_ = GateRole::kAuxiliary;
    std::shared_ptr<const MergedData> merged_;
};

/// Shortest decimal text that parses back to the same double.
std::string format_angle(double angle);

/// Throws std::out_of_range if the gate touches a qubit >= num_qubits.
void validate_gate(const Gate &g, size_t num_qubits);

/// The 2x2 / 4x4 matrix of a primitive gate, or the span-local matrix of a
/// MERGED gate. Two-qubit local order follows `qubits()`.
UnitaryMatrix local_matrix(const Gate &g);

/// Applies the gate in place to an n-qubit amplitude vector.
void apply_gate(const Gate &g, std::span<Complex> amplitudes, size_t num_qubits);

/// The gate embedded into 2^n dimensions. Rotations follow
/// R_a(theta) = exp(-i theta sigma_a / 2).
UnitaryMatrix gate_matrix(const Gate &g, size_t num_qubits, size_t max_qubits = kDefaultMaxQubits);

bool is_self_inverse(const Gate &g);

/// Collapses a chain of SWAP/FSWAP/CZ/CNOT/MERGED gates, given in time order
/// (chain[0] acts first), into one MERGED gate with the same action. The
/// result spans (min, max) of the touched qubits.
Gate compose_merged(std::span<const Gate> chain);
inline Gate compose_merged(std::initializer_list<Gate> chain) {
    return compose_merged(std::span<const Gate>(chain.begin(), chain.size()));
}

/// Throws std::invalid_argument for non-MERGED or diagonal-only gates.
SignPattern sign_pattern_of(const Gate &g);

}  // namespace pexp

#endif
