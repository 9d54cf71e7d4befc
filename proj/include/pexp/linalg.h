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

#ifndef PEXP_LINALG_H
#define PEXP_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pexp {

using Complex = std::complex<double>;

/// Acceptance tolerance for circuit-vs-oracle equivalence.
inline constexpr double kEquivalenceTol = 1e-9;
/// Tolerance for algebraic identities between integer-entried matrices.
inline constexpr double kIdentityTol = 1e-12;
/// Largest qubit count for which dense matrices are built (side 4096).
inline constexpr size_t kDefaultMaxQubits = 12;

/// Raised when a dense object would exceed the configured qubit limit.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Raised on mismatched operand dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_power_of_two(size_t x);
/// log2 of a power of two.
size_t qubit_count_of_dim(size_t dim);
/// Throws SizeError if `num_qubits > max_qubits`.
void check_qubit_limit(size_t num_qubits, size_t max_qubits);

/// Dense square complex matrix of power-of-two side, row-major.
///
/// Qubit 0 is the most significant tensor factor, so basis index bits read
/// |q0 q1 ... q(n-1)> from left to right. Unitarity is not enforced on
/// construction; call `is_unitary` when it matters.
class UnitaryMatrix {
   public:
    UnitaryMatrix() = default;
    /// Zero matrix.
    explicit UnitaryMatrix(size_t dim);
    UnitaryMatrix(size_t dim, std::vector<Complex> entries);
    UnitaryMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static UnitaryMatrix identity(size_t dim);
    static UnitaryMatrix diagonal(std::span<const Complex> diag);

    size_t dim() const { return dim_; }
    size_t num_qubits() const { return qubit_count_of_dim(dim_); }

    Complex &operator()(size_t row, size_t col) { return entries_[row * dim_ + col]; }
    const Complex &operator()(size_t row, size_t col) const { return entries_[row * dim_ + col]; }

    std::span<const Complex> entries() const { return entries_; }
    std::span<Complex> entries() { return entries_; }

    UnitaryMatrix adjoint() const;
    Complex trace() const;
    UnitaryMatrix scaled(Complex factor) const;

    bool is_unitary(double tol = kEquivalenceTol) const;
    bool is_hermitian(double tol = kIdentityTol) const;

    bool operator==(const UnitaryMatrix &other) const = default;

    std::string str() const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> entries_;
};

UnitaryMatrix operator+(const UnitaryMatrix &a, const UnitaryMatrix &b);
UnitaryMatrix operator-(const UnitaryMatrix &a, const UnitaryMatrix &b);
UnitaryMatrix operator*(Complex factor, const UnitaryMatrix &m);

/// Kronecker product; `a` is the more significant factor.
UnitaryMatrix kron(const UnitaryMatrix &a, const UnitaryMatrix &b, size_t max_qubits = kDefaultMaxQubits);

/// Standard matrix product a*b. When a circuit is evaluated, the gate acting
/// first in time is the rightmost factor.
UnitaryMatrix matmul(const UnitaryMatrix &a, const UnitaryMatrix &b);

/// max_ij |u_ij - v_ij|.
double exact_distance(const UnitaryMatrix &u, const UnitaryMatrix &v);

/// sqrt(max(0, 1 - |tr(U^dag V)| / dim)); zero iff U equals V up to a global phase.
double phase_invariant_distance(const UnitaryMatrix &u, const UnitaryMatrix &v);

/// arg tr(U^dag V), the phase phi minimizing |U - e^{i phi} V| for equivalent pairs.
double relative_phase(const UnitaryMatrix &u, const UnitaryMatrix &v);

/// Amplitude vector of power-of-two length.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(std::vector<Complex> amplitudes);

    /// |0...0> on `num_qubits` qubits.
    static StateVector zero_state(size_t num_qubits, size_t max_qubits = kDefaultMaxQubits);
    /// Computational basis state |index>.
    static StateVector basis_state(size_t num_qubits, size_t index, size_t max_qubits = kDefaultMaxQubits);

    size_t dim() const { return amplitudes_.size(); }
    size_t num_qubits() const { return qubit_count_of_dim(amplitudes_.size()); }

    Complex &operator[](size_t k) { return amplitudes_[k]; }
    const Complex &operator[](size_t k) const { return amplitudes_[k]; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }

    double norm_squared() const;
    bool is_normalized(double tol = kEquivalenceTol) const;

    bool operator==(const StateVector &other) const = default;

   private:
    std::vector<Complex> amplitudes_;
};

/// <a|b>.
Complex inner_product(const StateVector &a, const StateVector &b);
/// max_k |a_k - b_k|.
double exact_distance(const StateVector &a, const StateVector &b);
StateVector apply(const UnitaryMatrix &u, const StateVector &s);

}  // namespace pexp

#endif
