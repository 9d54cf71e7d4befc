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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace pexp;

namespace {

constexpr double kPi = std::numbers::pi;
const double kR = 1 / std::numbers::sqrt2;

const UnitaryMatrix kH{{kR, kR}, {kR, -kR}};
const UnitaryMatrix kCnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
const UnitaryMatrix kSwap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
const UnitaryMatrix kFswap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}};
const UnitaryMatrix kCz{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};

UnitaryMatrix rotation_oracle(PauliLetter axis, double theta) {
    return test::series_expm(letter_matrix(axis).scaled(Complex{0, -theta / 2}), 40);
}

UnitaryMatrix chain_product(std::initializer_list<Gate> chain, size_t n) {
    UnitaryMatrix m = UnitaryMatrix::identity(size_t{1} << n);
    for (const auto &g : chain) {
        m = matmul(gate_matrix(g, n), m);
    }
    return m;
}

std::vector<Gate> sample_gates() {
    return {
        Gate::h(0),
        Gate::rx(1, 0.7),
        Gate::ry(2, -1.3),
        Gate::rz(0, 2.1),
        Gate::phase(1, kPi / 2),
        Gate::cnot(0, 2),
        Gate::cnot(2, 0),
        Gate::swap(0, 1),
        Gate::fswap(1, 2),
        Gate::cz(0, 2),
        compose_merged({Gate::fswap(0, 1), Gate::fswap(1, 2), Gate::fswap(0, 1)}),
    };
}

}  // namespace

TEST(gate, fswap_matrix) {
    EXPECT_EQ(gate_matrix(Gate::fswap(0, 1), 2), kFswap);
}

TEST(gate, swap_matrix) {
    EXPECT_EQ(gate_matrix(Gate::swap(0, 1), 2), kSwap);
}

TEST(gate, rz_zero_is_identity) {
    for (size_t q = 0; q < 3; q++) {
        EXPECT_EQ(gate_matrix(Gate::rz(q, 0), 3), UnitaryMatrix::identity(8));
    }
}

TEST(gate, one_qubit_matrices_match_series) {
    EXPECT_LT(exact_distance(gate_matrix(Gate::h(0), 1), kH), 1e-15);
    for (double theta : {0.0, 0.3, -1.1, kPi, 2.5}) {
        EXPECT_LT(exact_distance(gate_matrix(Gate::rx(0, theta), 1), rotation_oracle(PauliLetter::X, theta)), 1e-12);
        EXPECT_LT(exact_distance(gate_matrix(Gate::ry(0, theta), 1), rotation_oracle(PauliLetter::Y, theta)), 1e-12);
        EXPECT_LT(exact_distance(gate_matrix(Gate::rz(0, theta), 1), rotation_oracle(PauliLetter::Z, theta)), 1e-12);
    }
}

TEST(gate, embedding_matches_kron_and_projector_oracles) {
    size_t n = 4;
    for (size_t q = 0; q < n; q++) {
        EXPECT_LT(exact_distance(gate_matrix(Gate::h(q), n), test::embed_one_qubit(kH, q, n)), 1e-15);
        EXPECT_LT(
            exact_distance(gate_matrix(Gate::rx(q, 0.4), n), test::embed_one_qubit(rotation_oracle(PauliLetter::X, 0.4), q, n)),
            1e-12);
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            if (a == b) {
                continue;
            }
            EXPECT_EQ(gate_matrix(Gate::cnot(a, b), n), test::embed_two_qubit(kCnot, a, b, n));
            EXPECT_EQ(gate_matrix(Gate::swap(a, b), n), test::embed_two_qubit(kSwap, a, b, n));
            EXPECT_EQ(gate_matrix(Gate::fswap(a, b), n), test::embed_two_qubit(kFswap, a, b, n));
            EXPECT_EQ(gate_matrix(Gate::cz(a, b), n), test::embed_two_qubit(kCz, a, b, n));
        }
    }
}

TEST(gate, every_gate_matrix_is_unitary) {
    for (const auto &g : sample_gates()) {
        UnitaryMatrix m = gate_matrix(g, 3);
        EXPECT_LT(exact_distance(matmul(m.adjoint(), m), UnitaryMatrix::identity(8)), 1e-12) << g.str();
    }
}

TEST(gate, fswap_is_swap_times_cz) {
    size_t n = 4;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            EXPECT_EQ(gate_matrix(Gate::fswap(a, b), n), matmul(gate_matrix(Gate::swap(a, b), n), gate_matrix(Gate::cz(a, b), n)));
        }
    }
}

TEST(gate, cnot_inversion_through_hadamards) {
    size_t n = 3;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i == j) {
                continue;
            }
            UnitaryMatrix clad = matmul(gate_matrix(Gate::h(i), n), gate_matrix(Gate::h(j), n));
            UnitaryMatrix inverted = matmul(clad, matmul(gate_matrix(Gate::cnot(i, j), n), clad));
            EXPECT_LT(exact_distance(gate_matrix(Gate::cnot(j, i), n), inverted), 1e-12);
        }
    }
}

TEST(gate, validation) {
    EXPECT_THROW(gate_matrix(Gate::h(3), 3), std::out_of_range);
    EXPECT_THROW(Gate::cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(Gate::swap(2, 2), std::invalid_argument);
}

TEST(gate, self_inverse) {
    EXPECT_TRUE(is_self_inverse(Gate::fswap(0, 1)));
    EXPECT_TRUE(is_self_inverse(Gate::h(0)));
    EXPECT_TRUE(is_self_inverse(Gate::cnot(0, 1)));
    EXPECT_TRUE(is_self_inverse(Gate::cz(0, 1)));
    EXPECT_TRUE(is_self_inverse(Gate::swap(0, 1)));
    EXPECT_FALSE(is_self_inverse(Gate::rx(0, 0.7)));
    EXPECT_FALSE(is_self_inverse(Gate::rz(0, kPi / 2)));
    for (const auto &g : sample_gates()) {
        UnitaryMatrix m = gate_matrix(g, 3);
        bool squares_to_identity = exact_distance(matmul(m, m), UnitaryMatrix::identity(8)) < 1e-12;
        EXPECT_EQ(is_self_inverse(g), squares_to_identity) << g.str();
    }
}

TEST(gate, compose_merged_matches_chain_product) {
    std::initializer_list<Gate> chains[] = {
        {Gate::fswap(0, 1), Gate::fswap(1, 2), Gate::fswap(0, 1)},
        {Gate::swap(0, 1), Gate::cnot(2, 1), Gate::swap(0, 1)},
        {Gate::cnot(0, 3), Gate::cz(1, 2), Gate::fswap(3, 1)},
        {Gate::swap(1, 2), Gate::fswap(2, 3), Gate::cnot(3, 1)},
    };
    for (const auto &chain : chains) {
        Gate merged = compose_merged(chain);
        EXPECT_EQ(gate_matrix(merged, 4), chain_product(chain, 4)) << merged.str();
    }
}

TEST(gate, compose_merged_records_span) {
    Gate merged = compose_merged({Gate::swap(1, 2), Gate::fswap(2, 4), Gate::swap(1, 2)});
    EXPECT_EQ(merged.kind(), GateKind::MERGED);
    EXPECT_EQ(merged.min_qubit(), 1u);
    EXPECT_EQ(merged.max_qubit(), 4u);
    EXPECT_EQ(merged.merged().chain.size(), 3u);
}

TEST(gate, compose_merged_of_swaps_is_long_swap) {
    Gate merged = compose_merged({Gate::swap(0, 1), Gate::swap(1, 2), Gate::swap(0, 1)});
    EXPECT_EQ(gate_matrix(merged, 3), gate_matrix(Gate::swap(0, 2), 3));
}

TEST(gate, compose_merged_errors) {
    EXPECT_THROW(compose_merged(std::span<const Gate>{}), std::invalid_argument);
    EXPECT_THROW(compose_merged({Gate::swap(0, 1), Gate::rz(1, 0.2)}), std::invalid_argument);
    EXPECT_THROW(compose_merged({Gate::h(0)}), std::invalid_argument);
}

TEST(gate, merged_entries_are_signed_permutation) {
    Gate merged = compose_merged({Gate::fswap(0, 1), Gate::cnot(2, 1), Gate::fswap(0, 1)});
    UnitaryMatrix m = gate_matrix(merged, 3);
    for (size_t c = 0; c < 8; c++) {
        int nonzero = 0;
        for (size_t r = 0; r < 8; r++) {
            Complex z = m(r, c);
            if (z != Complex{0}) {
                nonzero++;
                EXPECT_TRUE(z == Complex{1} || z == Complex{-1});
            }
        }
        EXPECT_EQ(nonzero, 1);
    }
}

TEST(gate, fswap_enlarged_by_fswaps) {
    Gate g = compose_merged({Gate::fswap(0, 1), Gate::fswap(1, 2), Gate::fswap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "+-");
    // Base fSWAP: |11>-type diagonal entries of the span are negative.
    UnitaryMatrix m = gate_matrix(g, 3);
    EXPECT_EQ(m(5, 5), Complex{-1});
    EXPECT_EQ(m(7, 7), Complex{-1});
}

TEST(gate, fswap_enlarged_by_swaps) {
    Gate g = compose_merged({Gate::swap(0, 1), Gate::fswap(1, 2), Gate::swap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "++");
    UnitaryMatrix m = gate_matrix(g, 3);
    EXPECT_EQ(m(5, 5), Complex{-1});
    EXPECT_EQ(m(7, 7), Complex{-1});
}

TEST(gate, swap_enlarged_by_swaps) {
    Gate g = compose_merged({Gate::swap(0, 1), Gate::swap(1, 2), Gate::swap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "++");
}

TEST(gate, swap_enlarged_by_fswaps) {
    Gate g = compose_merged({Gate::fswap(0, 1), Gate::swap(1, 2), Gate::fswap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "+-");
}

TEST(gate, cnot_enlarged_by_swaps) {
    Gate g = compose_merged({Gate::swap(0, 1), Gate::cnot(2, 1), Gate::swap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "++");
    EXPECT_EQ(gate_matrix(g, 3), gate_matrix(Gate::cnot(2, 0), 3));
}

TEST(gate, cnot_enlarged_by_fswaps) {
    Gate g = compose_merged({Gate::fswap(0, 1), Gate::cnot(2, 1), Gate::fswap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "+-");
}

TEST(gate, sign_rule_swap_pair_copies_fswap_pair_flips) {
    // A SWAP pair carries the base's signs through unchanged. An fSWAP pair
    // reverses the sign of every dominant entry whose path crosses an occupied
    // enlarging wire; that reversal mask is the SWAP(+,-) pattern itself.
    Gate mask3 = compose_merged({Gate::fswap(0, 1), Gate::swap(1, 2), Gate::fswap(0, 1)});
    for (Gate base : {Gate::swap(1, 2), Gate::fswap(1, 2), Gate::cnot(2, 1)}) {
        Gate via_swap = compose_merged({Gate::swap(0, 1), base, Gate::swap(0, 1)});
        Gate via_fswap = compose_merged({Gate::fswap(0, 1), base, Gate::fswap(0, 1)});
        SignPattern s = sign_pattern_of(via_swap);
        SignPattern f = sign_pattern_of(via_fswap);
        SignPattern m = sign_pattern_of(mask3);
        ASSERT_EQ(s.signs.size(), 2u);
        EXPECT_EQ(s.str(), "++") << base.str();
        for (size_t k = 0; k < s.signs.size(); k++) {
            EXPECT_EQ(f.signs[k], s.signs[k] * m.signs[k]) << base.str();
        }
    }
    // Same rule one wire wider, enlarging an already merged base.
    for (Gate inner : {Gate::swap(2, 3), Gate::fswap(2, 3)}) {
        Gate base = compose_merged({Gate::fswap(1, 2), inner, Gate::fswap(1, 2)});
        Gate mask = compose_merged({Gate::fswap(0, 1), Gate::swap(1, 3), Gate::fswap(0, 1)});
        SignPattern s = sign_pattern_of(compose_merged({Gate::swap(0, 1), base, Gate::swap(0, 1)}));
        SignPattern f = sign_pattern_of(compose_merged({Gate::fswap(0, 1), base, Gate::fswap(0, 1)}));
        SignPattern m = sign_pattern_of(mask);
        ASSERT_EQ(s.signs.size(), 4u);
        for (size_t k = 0; k < s.signs.size(); k++) {
            EXPECT_EQ(f.signs[k], s.signs[k] * m.signs[k]);
        }
    }
}

TEST(gate, fermionic_cnot_signs) {
    Gate g = compose_merged(
        {Gate::fswap(0, 1), Gate::fswap(1, 2), Gate::swap(2, 3), Gate::cnot(4, 3), Gate::swap(2, 3), Gate::fswap(1, 2),
         Gate::fswap(0, 1)});
    EXPECT_EQ(sign_pattern_of(g).str(), "++----++");
}

TEST(gate, sign_pattern_text) {
    SignPattern p = SignPattern::parse("+-+");
    EXPECT_EQ(p.str(), "+-+");
    EXPECT_EQ(p.flipped().str(), "-+-");
    EXPECT_THROW(SignPattern::parse("+x"), std::invalid_argument);
}

TEST(gate, sign_pattern_requires_off_diagonal_block) {
    Gate diag = compose_merged({Gate::cz(0, 2)});
    EXPECT_THROW(sign_pattern_of(diag), std::invalid_argument);
    EXPECT_THROW(sign_pattern_of(Gate::swap(0, 1)), std::invalid_argument);
}

TEST(gate, text_form) {
    EXPECT_EQ(Gate::h(0).str(), "h q[0]");
    EXPECT_EQ(Gate::rx(2, 1.4).str(), "rx(1.4) q[2]");
    EXPECT_EQ(Gate::rz(1, -kPi / 2).str(), "rz(-1.5707963267948966) q[1]");
    EXPECT_EQ(Gate::cnot(3, 1).str(), "cx q[3],q[1]");
    EXPECT_EQ(Gate::swap(0, 2).str(), "swap q[0],q[2]");
    EXPECT_EQ(Gate::fswap(0, 2).str(), "fswap q[0],q[2]");
    EXPECT_EQ(Gate::cz(1, 2).str(), "cz q[1],q[2]");
    Gate merged = compose_merged({Gate::fswap(0, 1), Gate::fswap(1, 2), Gate::fswap(0, 1)});
    EXPECT_EQ(merged.str().rfind("merged[+-] q[0],q[2]", 0), 0u);
}

TEST(gate, apply_gate_matches_matrix) {
    std::mt19937_64 rng(5);
    for (const auto &g : sample_gates()) {
        StateVector s = test::random_state(rng, 3);
        StateVector expected = apply(gate_matrix(g, 3), s);
        apply_gate(g, s.amplitudes(), 3);
        EXPECT_LT(exact_distance(s, expected), 1e-12) << g.str();
    }
}

TEST(gate, wide_merge_defers_table) {
    std::vector<Gate> chain;
    for (size_t q = 0; q < 30; q++) {
        chain.push_back(Gate::fswap(q, q + 1));
    }
    Gate wide = compose_merged(chain);
    EXPECT_EQ(wide.max_qubit(), 30u);
    EXPECT_EQ(wide.merged().chain.size(), 30u);
    EXPECT_THROW(sign_pattern_of(wide), SizeError);
}
