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

#include "pexp/linalg.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace pexp {

bool is_power_of_two(size_t x) {
    return std::has_single_bit(x);
}

size_t qubit_count_of_dim(size_t dim) {
    if (!is_power_of_two(dim)) {
        throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(dim));
}

void check_qubit_limit(size_t num_qubits, size_t max_qubits) {
    if (num_qubits > max_qubits) {
        throw SizeError(
            "dense object on " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
            std::to_string(max_qubits));
    }
}

UnitaryMatrix::UnitaryMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
    qubit_count_of_dim(dim);
}

UnitaryMatrix::UnitaryMatrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    qubit_count_of_dim(dim);
    if (entries_.size() != dim * dim) {
        throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(entries_.size()));
    }
}

UnitaryMatrix::UnitaryMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    qubit_count_of_dim(dim_);
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("matrix literal is not square");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

UnitaryMatrix UnitaryMatrix::identity(size_t dim) {
    UnitaryMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

UnitaryMatrix UnitaryMatrix::diagonal(std::span<const Complex> diag) {
    UnitaryMatrix m(diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    UnitaryMatrix m(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Complex UnitaryMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

UnitaryMatrix UnitaryMatrix::scaled(Complex factor) const {
    UnitaryMatrix m = *this;
    for (auto &e : m.entries_) {
        e *= factor;
    }
    return m;
}

bool UnitaryMatrix::is_unitary(double tol) const {
    return exact_distance(matmul(adjoint(), *this), identity(dim_)) < tol;
}

bool UnitaryMatrix::is_hermitian(double tol) const {
    return exact_distance(adjoint(), *this) < tol;
}

std::string UnitaryMatrix::str() const {
    std::ostringstream out;
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            const Complex &e = (*this)(r, c);
            out << (c ? " " : "") << e.real();
            if (e.imag() != 0) {
                out << (e.imag() < 0 ? "-" : "+") << std::abs(e.imag()) << "i";
            }
        }
        out << '\n';
    }
    return out.str();
}

static void check_same_dim(size_t a, size_t b) {
    if (a != b) {
        throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

UnitaryMatrix operator+(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    check_same_dim(a.dim(), b.dim());
    UnitaryMatrix m = a;
    auto out = m.entries();
    auto rhs = b.entries();
    for (size_t k = 0; k < out.size(); k++) {
        out[k] += rhs[k];
    }
    return m;
}

UnitaryMatrix operator-(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    return a + b.scaled(-1);
}

UnitaryMatrix operator*(Complex factor, const UnitaryMatrix &m) {
    return m.scaled(factor);
}

UnitaryMatrix kron(const UnitaryMatrix &a, const UnitaryMatrix &b, size_t max_qubits) {
    check_qubit_limit(a.num_qubits() + b.num_qubits(), max_qubits);
    size_t da = a.dim();
    size_t db = b.dim();
    UnitaryMatrix m(da * db);
    for (size_t ra = 0; ra < da; ra++) {
        for (size_t ca = 0; ca < da; ca++) {
            Complex f = a(ra, ca);
            if (f == Complex{0}) {
                continue;
            }
            for (size_t rb = 0; rb < db; rb++) {
                for (size_t cb = 0; cb < db; cb++) {
                    m(ra * db + rb, ca * db + cb) = f * b(rb, cb);
                }
            }
        }
    }
    return m;
}

UnitaryMatrix matmul(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    check_same_dim(a.dim(), b.dim());
    size_t d = a.dim();
    UnitaryMatrix m(d);
    for (size_t r = 0; r < d; r++) {
        for (size_t k = 0; k < d; k++) {
            Complex f = a(r, k);
            if (f == Complex{0}) {
                continue;
            }
            for (size_t c = 0; c < d; c++) {
                m(r, c) += f * b(k, c);
            }
        }
    }
    return m;
}

double exact_distance(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    check_same_dim(u.dim(), v.dim());
    double worst = 0;
    auto eu = u.entries();
    auto ev = v.entries();
    for (size_t k = 0; k < eu.size(); k++) {
        worst = std::max(worst, std::abs(eu[k] - ev[k]));
    }
    return worst;
}

// tr(U^dag V) without forming the product.
static Complex overlap_trace(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    check_same_dim(u.dim(), v.dim());
    Complex t = 0;
    auto eu = u.entries();
    auto ev = v.entries();
    for (size_t k = 0; k < eu.size(); k++) {
        t += std::conj(eu[k]) * ev[k];
    }
    return t;
}

double phase_invariant_distance(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    double fidelity = std::abs(overlap_trace(u, v)) / static_cast<double>(u.dim());
    return std::sqrt(std::max(0.0, 1.0 - fidelity));
}

double relative_phase(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    return std::arg(overlap_trace(u, v));
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubit_count_of_dim(amplitudes_.size());
}

StateVector StateVector::zero_state(size_t num_qubits, size_t max_qubits) {
    return basis_state(num_qubits, 0, max_qubits);
}

StateVector StateVector::basis_state(size_t num_qubits, size_t index, size_t max_qubits) {
    check_qubit_limit(num_qubits, max_qubits);
    size_t dim = size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1;
    return StateVector(std::move(amps));
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) < tol;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    check_same_dim(a.dim(), b.dim());
    Complex t = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        t += std::conj(a[k]) * b[k];
    }
    return t;
}

double exact_distance(const StateVector &a, const StateVector &b) {
    check_same_dim(a.dim(), b.dim());
    double worst = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

StateVector apply(const UnitaryMatrix &u, const StateVector &s) {
    check_same_dim(u.dim(), s.dim());
    std::vector<Complex> out(s.dim());
    for (size_t r = 0; r < u.dim(); r++) {
        Complex acc = 0;
        for (size_t c = 0; c < u.dim(); c++) {
            acc += u(r, c) * s[c];
        }
        out[r] = acc;
    }
    return StateVector(std::move(out));
}

}  // namespace pexp
