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

#include "pexp/gate.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pexp {

namespace {

// Bit of qubit q inside a register of `width` qubits whose first qubit is `offset`.
size_t bit_of(size_t q, size_t width, size_t offset) {
    return size_t{1} << (width - 1 - (q - offset));
}

// Image of a basis state under a signed-permutation gate.
std::pair<size_t, int> map_basis(const Gate &g, size_t idx, size_t width, size_t offset) {
    auto qs = g.qubits();
    switch (g.kind()) {
        case GateKind::CNOT: {
            size_t c = bit_of(qs[0], width, offset);
            size_t t = bit_of(qs[1], width, offset);
            return {(idx & c) ? idx ^ t : idx, 1};
        }
        case GateKind::SWAP:
        case GateKind::FSWAP:
        case GateKind::CZ: {
            size_t a = bit_of(qs[0], width, offset);
            size_t b = bit_of(qs[1], width, offset);
            bool both = (idx & a) && (idx & b);
            int sign = (both && g.kind() != GateKind::SWAP) ? -1 : 1;
            if (g.kind() == GateKind::CZ || bool(idx & a) == bool(idx & b)) {
                return {idx, sign};
            }
            return {idx ^ a ^ b, sign};
        }
        case GateKind::MERGED: {
            int sign = 1;
            for (const Gate &inner : g.merged().chain) {
                auto [next, s] = map_basis(inner, idx, width, offset);
                idx = next;
                sign *= s;
            }
            return {idx, sign};
        }
        default:
            throw std::invalid_argument("gate '" + g.str() + "' is not a signed permutation");
    }
}

bool is_permutation_kind(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::SWAP:
        case GateKind::FSWAP:
        case GateKind::CZ:
        case GateKind::MERGED:
            return true;
        default:
            return false;
    }
}

UnitaryMatrix one_qubit_matrix(const Gate &g) {
    const Complex i{0, 1};
    double half = g.angle() / 2;
    double c = std::cos(half);
    double s = std::sin(half);
    switch (g.kind()) {
        case GateKind::H: {
            double r = 1 / std::numbers::sqrt2;
            return {{r, r}, {r, -r}};
        }
        case GateKind::RX:
            return {{c, -i * s}, {-i * s, c}};
        case GateKind::RY:
            return {{c, -s}, {s, c}};
        case GateKind::RZ:
            return {{std::polar(1.0, -half), 0}, {0, std::polar(1.0, half)}};
        default:
            throw std::logic_error("not a one-qubit gate");
    }
}

const char *kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::RX:
            return "rx";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::CNOT:
            return "cx";
        case GateKind::SWAP:
            return "swap";
        case GateKind::FSWAP:
            return "fswap";
        case GateKind::CZ:
            return "cz";
        case GateKind::MERGED:
            return "merged";
    }
    return "?";
}

std::string qubit_ref(size_t q) {
    return "q[" + std::to_string(q) + "]";
}

}  // namespace

std::string SignPattern::str() const {
    std::string out;
    for (auto s : signs) {
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

SignPattern SignPattern::parse(std::string_view text) {
    SignPattern p;
    for (char c : text) {
        if (c == '+') {
            p.signs.push_back(1);
        } else if (c == '-') {
            p.signs.push_back(-1);
        } else {
            throw std::invalid_argument("sign pattern may only contain '+' and '-'");
        }
    }
    return p;
}

SignPattern SignPattern::flipped() const {
    SignPattern p = *this;
    for (auto &s : p.signs) {
        s = static_cast<int8_t>(-s);
    }
    return p;
}

Gate::Gate(GateKind kind, size_t arity, std::array<size_t, 2> qubits, double angle, GateRole role)
    : kind_(kind), arity_(arity), qubits_(qubits), angle_(angle), role_(role) {
    if (arity == 2 && qubits[0] == qubits[1]) {
        throw std::invalid_argument(std::string(kind_name(kind)) + " gate needs two distinct qubits");
    }
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
}

Gate Gate::h(size_t q) {
    return Gate(GateKind::H, 1, {q, 0}, 0, GateRole::kAuxiliary);
}
Gate Gate::rx(size_t q, double theta, GateRole role) {
    return Gate(GateKind::RX, 1, {q, 0}, theta, role);
}
Gate Gate::ry(size_t q, double theta, GateRole role) {
    return Gate(GateKind::RY, 1, {q, 0}, theta, role);
}
Gate Gate::rz(size_t q, double theta, GateRole role) {
    return Gate(GateKind::RZ, 1, {q, 0}, theta, role);
}
Gate Gate::phase(size_t q, double theta) {
    return rz(q, theta, GateRole::kAuxiliary);
}
Gate Gate::cnot(size_t control, size_t target) {
    return Gate(GateKind::CNOT, 2, {control, target}, 0, GateRole::kAuxiliary);
}
Gate Gate::swap(size_t a, size_t b) {
    return Gate(GateKind::SWAP, 2, {a, b}, 0, GateRole::kAuxiliary);
}
Gate Gate::fswap(size_t a, size_t b) {
    return Gate(GateKind::FSWAP, 2, {a, b}, 0, GateRole::kAuxiliary);
}
Gate Gate::cz(size_t a, size_t b) {
    return Gate(GateKind::CZ, 2, {a, b}, 0, GateRole::kAuxiliary);
}

Gate Gate::with_role(GateRole role) const {
    Gate g = *this;
    g.role_ = role;
    return g;
}

bool Gate::is_rotation() const {
    return kind_ == GateKind::RX || kind_ == GateKind::RY || kind_ == GateKind::RZ;
}

const MergedData &Gate::merged() const {
    if (kind_ != GateKind::MERGED) {
        throw std::invalid_argument("gate '" + str() + "' is not a merged gate");
    }
    return *merged_;
}

size_t Gate::min_qubit() const {
    return arity_ == 1 ? qubits_[0] : std::min(qubits_[0], qubits_[1]);
}

size_t Gate::max_qubit() const {
    return arity_ == 1 ? qubits_[0] : std::max(qubits_[0], qubits_[1]);
}

bool Gate::operator==(const Gate &other) const {
    if (kind_ != other.kind_ || arity_ != other.arity_ || angle_ != other.angle_) {
        return false;
    }
    if (!std::equal(qubits().begin(), qubits().end(), other.qubits().begin())) {
        return false;
    }
    if (kind_ == GateKind::MERGED) {
        return merged_->chain == other.merged_->chain;
    }
    return true;
}

std::string Gate::str() const {
    std::string out = kind_name(kind_);
    if (is_rotation()) {
        out += "(" + format_angle(angle_) + ")";
    }
    if (kind_ == GateKind::MERGED) {
        std::string label;
        try {
            label = sign_pattern_of(*this).str();
        } catch (const std::invalid_argument &) {
        }
        out += "[" + label + "]";
    }
    out += " " + qubit_ref(qubits_[0]);
    if (arity_ == 2) {
        out += "," + qubit_ref(qubits_[1]);
    }
    if (kind_ == GateKind::MERGED) {
        out += " :";
        const auto &chain = merged_->chain;
        for (size_t k = 0; k < chain.size(); k++) {
            out += (k ? "; " : " ") + chain[k].str();
        }
    }
    return out;
}

std::string format_angle(double angle) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), angle);
    return std::string(buf, result.ptr);
}

void validate_gate(const Gate &g, size_t num_qubits) {
    if (g.max_qubit() >= num_qubits) {
        throw std::out_of_range(
            "gate '" + g.str() + "' touches qubit " + std::to_string(g.max_qubit()) + " but the circuit has " +
            std::to_string(num_qubits) + " qubits");
    }
}

UnitaryMatrix local_matrix(const Gate &g) {
    if (g.is_one_qubit()) {
        return one_qubit_matrix(g);
    }
    size_t width = g.kind() == GateKind::MERGED ? g.merged().hi - g.merged().lo + 1 : 2;
    size_t dim = size_t{1} << width;
    UnitaryMatrix m(dim);
    if (g.kind() == GateKind::MERGED) {
        const auto &perm = g.merged().permutation();
        for (size_t c = 0; c < dim; c++) {
            m(perm.image[c], c) = perm.sign[c];
        }
        return m;
    }
    // Relabel so qubits()[0] is the most significant local bit.
    Gate relabeled = g;
    switch (g.kind()) {
        case GateKind::CNOT:
            relabeled = Gate::cnot(0, 1);
            break;
        case GateKind::SWAP:
            relabeled = Gate::swap(0, 1);
            break;
        case GateKind::FSWAP:
            relabeled = Gate::fswap(0, 1);
            break;
        case GateKind::CZ:
            relabeled = Gate::cz(0, 1);
            break;
        default:
            throw std::logic_error("unexpected two-qubit gate kind");
    }
    for (size_t c = 0; c < dim; c++) {
        auto [r, s] = map_basis(relabeled, c, 2, 0);
        m(r, c) = s;
    }
    return m;
}

void apply_gate(const Gate &g, std::span<Complex> amplitudes, size_t num_qubits) {
    validate_gate(g, num_qubits);
    if (amplitudes.size() != (size_t{1} << num_qubits)) {
        throw DimensionError("amplitude vector does not match qubit count");
    }
    if (g.is_one_qubit()) {
        UnitaryMatrix u = one_qubit_matrix(g);
        size_t bit = bit_of(g.qubits()[0], num_qubits, 0);
        for (size_t idx = 0; idx < amplitudes.size(); idx++) {
            if (idx & bit) {
                continue;
            }
            Complex a0 = amplitudes[idx];
            Complex a1 = amplitudes[idx | bit];
            amplitudes[idx] = u(0, 0) * a0 + u(0, 1) * a1;
            amplitudes[idx | bit] = u(1, 0) * a0 + u(1, 1) * a1;
        }
        return;
    }
    std::vector<Complex> out(amplitudes.size());
    for (size_t idx = 0; idx < amplitudes.size(); idx++) {
        auto [dst, sign] = map_basis(g, idx, num_qubits, 0);
        out[dst] = sign > 0 ? amplitudes[idx] : -amplitudes[idx];
    }
    std::copy(out.begin(), out.end(), amplitudes.begin());
}

UnitaryMatrix gate_matrix(const Gate &g, size_t num_qubits, size_t max_qubits) {
    check_qubit_limit(num_qubits, max_qubits);
    validate_gate(g, num_qubits);
    size_t dim = size_t{1} << num_qubits;
    UnitaryMatrix m(dim);
    std::vector<Complex> column(dim);
    for (size_t c = 0; c < dim; c++) {
        std::fill(column.begin(), column.end(), Complex{0});
        column[c] = 1;
        apply_gate(g, column, num_qubits);
        for (size_t r = 0; r < dim; r++) {
            m(r, c) = column[r];
        }
    }
    return m;
}

bool is_self_inverse(const Gate &g) {
    if (g.kind() == GateKind::MERGED) {
        const auto &perm = g.merged().permutation();
        for (size_t c = 0; c < perm.image.size(); c++) {
            size_t r = perm.image[c];
            if (perm.image[r] != c || perm.sign[c] * perm.sign[r] != 1) {
                return false;
            }
        }
        return true;
    }
    UnitaryMatrix m = local_matrix(g);
    return exact_distance(matmul(m, m), UnitaryMatrix::identity(m.dim())) < kIdentityTol;
}

Gate compose_merged(std::span<const Gate> chain) {
    if (chain.empty()) {
        throw std::invalid_argument("cannot merge an empty gate chain");
    }
    size_t lo = chain[0].min_qubit();
    size_t hi = chain[0].max_qubit();
    for (const Gate &g : chain) {
        if (!is_permutation_kind(g.kind())) {
            throw std::invalid_argument("cannot merge '" + g.str() + "': only SWAP, FSWAP, CZ, CNOT and merged gates");
        }
        lo = std::min(lo, g.min_qubit());
        hi = std::max(hi, g.max_qubit());
    }
    // Nested merged gates are flattened so the recorded chain holds primitives only.
    std::vector<Gate> flat;
    for (const Gate &g : chain) {
        if (g.kind() == GateKind::MERGED) {
            const auto &inner = g.merged().chain;
            flat.insert(flat.end(), inner.begin(), inner.end());
        } else {
            flat.push_back(g);
        }
    }
    Gate merged(GateKind::MERGED, 2, {lo, hi}, 0, GateRole::kAuxiliary);
    auto data = std::make_shared<MergedData>();
    data->lo = lo;
    data->hi = hi;
    data->chain = std::move(flat);
    merged.merged_ = std::move(data);
    return merged;
}

const SignedPermutation &MergedData::permutation() const {
    std::call_once(once_, [this] {
        size_t width = hi - lo + 1;
        if (width > kMaxMergedSpan) {
            throw SizeError("merged span of " + std::to_string(width) + " qubits is too wide to tabulate");
        }
        size_t dim = size_t{1} << width;
        permutation_.image.resize(dim);
        permutation_.sign.resize(dim);
        for (size_t c = 0; c < dim; c++) {
            size_t idx = c;
            int sign = 1;
            for (const Gate &g : chain) {
                auto [next, s] = map_basis(g, idx, width, lo);
                idx = next;
                sign *= s;
            }
            permutation_.image[c] = static_cast<uint32_t>(idx);
            permutation_.sign[c] = static_cast<int8_t>(sign);
        }
    });
    return permutation_;
}

SignPattern sign_pattern_of(const Gate &g) {
    const MergedData &m = g.merged();
    size_t dim = m.permutation().image.size();
    size_t half = dim / 2;
    std::vector<size_t> source(dim);
    for (size_t c = 0; c < dim; c++) {
        source[m.permutation().image[c]] = c;
    }
    SignPattern pattern;
    for (size_t r = 0; r < half; r++) {
        size_t c = source[r];
        if (c >= half) {
            pattern.signs.push_back(m.permutation().sign[c]);
        }
    }
    if (pattern.signs.empty()) {
        throw std::invalid_argument("merged gate has no off-diagonal block");
    }
    return pattern;
}

}  // namespace pexp
