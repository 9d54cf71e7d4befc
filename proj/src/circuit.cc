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

#include "pexp/circuit.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "pexp/pauli.h"

namespace pexp {

Circuit::Circuit(size_t num_qubits, double global_phase) : num_qubits_(num_qubits), global_phase_(global_phase) {
    if (num_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit::Circuit(size_t num_qubits, std::vector<Gate> gates, double global_phase)
    : Circuit(num_qubits, global_phase) {
    for (auto &g : gates) {
        append(std::move(g));
    }
}

void Circuit::append(Gate g) {
    validate_gate(g, num_qubits_);
    gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::out_of_range("appended circuit is wider than the target");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    global_phase_ += other.global_phase_;
}

Circuit Circuit::widened(size_t num_qubits) const {
    if (num_qubits < num_qubits_) {
        throw std::invalid_argument("cannot shrink a circuit");
    }
    Circuit c = *this;
    c.num_qubits_ = num_qubits;
    return c;
}

UnitaryMatrix evaluate(const Circuit &c, size_t max_qubits) {
    check_qubit_limit(c.num_qubits(), max_qubits);
    size_t n = c.num_qubits();
    size_t dim = size_t{1} << n;
    // Push every basis column through the gate list, then transpose into place.
    std::vector<Complex> columns(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        columns[k * dim + k] = 1;
    }
    for (const Gate &g : c.gates()) {
        for (size_t k = 0; k < dim; k++) {
            apply_gate(g, std::span<Complex>(columns.data() + k * dim, dim), n);
        }
    }
    Complex phase = std::polar(1.0, c.global_phase());
    UnitaryMatrix u(dim);
    for (size_t col = 0; col < dim; col++) {
        for (size_t row = 0; row < dim; row++) {
            u(row, col) = phase * columns[col * dim + row];
        }
    }
    return u;
}

Circuit reverse_conjugate_extend(const Circuit &c, const Gate &left, const Gate &right) {
    Circuit out(c.num_qubits(), c.global_phase());
    out.append(left);
    for (const Gate &g : c.gates()) {
        out.append(g);
    }
    out.append(right);
    return out;
}

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits() << '\n';
    if (c.global_phase() != 0) {
        out << "phase " << format_angle(c.global_phase()) << '\n';
    }
    for (const Gate &g : c.gates()) {
        out << g.str() << '\n';
    }
    return out.str();
}

namespace {

class LineScanner {
   public:
    LineScanner(std::string_view text, size_t line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError("line " + std::to_string(line_) + ": " + what, line_);
    }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
            pos_++;
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    bool try_consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string_view word() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected a name");
        }
        return text_.substr(start, pos_ - start);
    }

    double number() {
        skip_space();
        double value = 0;
        auto begin = text_.data() + pos_;
        auto end = text_.data() + text_.size();
        if (begin != end && *begin == '+') {
            begin++;
        }
        auto result = std::from_chars(begin, end, value);
        if (result.ec != std::errc() || !std::isfinite(value)) {
            fail("expected a number");
        }
        pos_ = static_cast<size_t>(result.ptr - text_.data());
        return value;
    }

    size_t integer() {
        skip_space();
        size_t value = 0;
        auto result = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (result.ec != std::errc()) {
            fail("expected a non-negative integer");
        }
        pos_ = static_cast<size_t>(result.ptr - text_.data());
        return value;
    }

    size_t qubit() {
        skip_space();
        if (word() != "q") {
            fail("expected a qubit reference q[k]");
        }
        expect('[');
        size_t q = integer();
        expect(']');
        return q;
    }

    std::string_view until(char stop) {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != stop) {
            pos_++;
        }
        return text_.substr(start, pos_ - start);
    }

    Gate gate(bool allow_merged) {
        std::string_view name = word();
        if (name == "h") {
            return Gate::h(qubit());
        }
        if (name == "rx" || name == "ry" || name == "rz") {
            expect('(');
            double theta = number();
            expect(')');
            size_t q = qubit();
            if (name == "rx") {
                return Gate::rx(q, theta);
            }
            if (name == "ry") {
                return Gate::ry(q, theta);
            }
            // Exact +-pi/2 z-rotations are read back as cladding phases.
            if (std::abs(theta) == std::numbers::pi / 2) {
                return Gate::phase(q, theta);
            }
            return Gate::rz(q, theta);
        }
        if (name == "merged") {
            if (!allow_merged) {
                fail("merged gates cannot be nested");
            }
            expect('[');
            std::string_view label = until(']');
            expect(']');
            size_t lo = qubit();
            expect(',');
            size_t hi = qubit();
            expect(':');
            std::vector<Gate> chain;
            do {
                chain.push_back(gate(false));
            } while (try_consume(';'));
            std::optional<Gate> composed;
            try {
                composed = compose_merged(chain);
            } catch (const std::invalid_argument &ex) {
                fail(ex.what());
            }
            Gate merged = *std::move(composed);
            if (merged.qubits()[0] != lo || merged.qubits()[1] != hi) {
                fail("merged span does not match its composition");
            }
            std::string expected;
            try {
                expected = sign_pattern_of(merged).str();
            } catch (const std::invalid_argument &) {
            }
            if (expected != label) {
                fail("merged sign label [" + std::string(label) + "] does not match its composition [" + expected +
                     "]");
            }
            return merged;
        }
        if (name == "cx" || name == "swap" || name == "fswap" || name == "cz") {
            size_t a = qubit();
            expect(',');
            size_t b = qubit();
            if (a == b) {
                fail("two-qubit gate on a single qubit");
            }
            if (name == "cx") {
                return Gate::cnot(a, b);
            }
            if (name == "swap") {
                return Gate::swap(a, b);
            }
            if (name == "fswap") {
                return Gate::fswap(a, b);
            }
            return Gate::cz(a, b);
        }
        fail("unknown gate '" + std::string(name) + "'");
    }

   private:
    std::string_view text_;
    size_t line_;
    size_t pos_ = 0;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_number = 0;
    while (!text.empty()) {
        size_t newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        line_number++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        LineScanner scan(line, line_number);
        if (scan.at_end()) {
            continue;
        }
        if (!circuit) {
            if (scan.word() != "qubits") {
                scan.fail("expected header 'qubits <n>'");
            }
            size_t n = scan.integer();
            if (n == 0) {
                scan.fail("circuit needs at least one qubit");
            }
            circuit.emplace(n);
        } else {
            LineScanner probe = scan;
            if (probe.word() == "phase") {
                circuit->add_global_phase(probe.number());
                scan = probe;
            } else {
                Gate g = scan.gate(true);
                if (g.max_qubit() >= circuit->num_qubits()) {
                    scan.fail("qubit index " + std::to_string(g.max_qubit()) + " out of range for " +
                              std::to_string(circuit->num_qubits()) + " qubits");
                }
                circuit->append(std::move(g));
            }
        }
        if (!scan.at_end()) {
            scan.fail("unexpected trailing text");
        }
    }
    if (!circuit) {
        throw ParseError("empty circuit text: missing 'qubits <n>' header", line_number == 0 ? 1 : line_number);
    }
    return *std::move(circuit);
}

}  // namespace pexp
