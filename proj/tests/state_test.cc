#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "graphent/error.h"
#include "graphent/state.h"

using namespace graphent;

namespace {

constexpr double kTol = 1e-10;

// Oracle: Tr[rho_S^2] straight from the definition
//   rho_S[i][j] = sum_rest psi(i, rest) conj(psi(j, rest))
// by iterating over full basis indices and comparing the traced-out bits.
double purity_by_definition(const PureState &st, SubsetMask s) {
    const size_t n = st.n();
    uint64_t keep = 0;
    for (size_t q : s.members()) {
        keep |= PureState::qubit_bit(n, q);
    }
    double total = 0;
    for (size_t a = 0; a < st.dim(); a++) {
        for (size_t b = 0; b < st.dim(); b++) {
            // <a_S|rho|b_S> <b_S|rho|a_S> with rest indices drawn from a and b.
            const size_t a2 = (b & keep) | (a & ~keep);
            const size_t b2 = (a & keep) | (b & ~keep);
            total += std::real(st.amp(a) * std::conj(st.amp(a2)) * st.amp(b) * std::conj(st.amp(b2)));
        }
    }
    return total;
}

Graph random_graph(size_t n, std::mt19937_64 &rng) {
    Graph g(n);
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++) {
            if (rng() & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

}  // namespace

TEST(plus_state, amplitudes) {
    PureState one = plus_state(1);
    EXPECT_NEAR(one.amp(0).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(one.amp(1).real(), 1 / std::sqrt(2.0), 1e-15);
    PureState two = plus_state(2);
    for (const Amplitude &a : two.amps()) {
        EXPECT_EQ(a, Amplitude(0.5));
    }
    EXPECT_NEAR(plus_state(10).norm_squared(), 1.0, 1e-12);
    EXPECT_THROW(plus_state(15), Error);
    EXPECT_THROW(plus_state(0), Error);
}

TEST(pure_state, construction_checks) {
    EXPECT_THROW(PureState(2, std::vector<Amplitude>(3, 0.5)), Error);
    EXPECT_THROW(PureState(1, {Amplitude(1), Amplitude(1)}), Error);
    EXPECT_NO_THROW(PureState(1, {Amplitude(1), Amplitude(0)}));
}

TEST(apply_cz, two_qubits) {
    PureState st = apply_cz(plus_state(2), 0, 1);
    EXPECT_EQ(st.amp(0), Amplitude(0.5));
    EXPECT_EQ(st.amp(1), Amplitude(0.5));
    EXPECT_EQ(st.amp(2), Amplitude(0.5));
    EXPECT_EQ(st.amp(3), Amplitude(-0.5));
}

TEST(apply_cz, involution_symmetry_and_commutation) {
    PureState st = random_state(4, 3);
    EXPECT_EQ(apply_cz(apply_cz(st, 0, 2), 0, 2), st);
    EXPECT_EQ(apply_cz(st, 1, 3), apply_cz(st, 3, 1));
    EXPECT_EQ(apply_cz(apply_cz(st, 0, 1), 2, 3), apply_cz(apply_cz(st, 2, 3), 0, 1));
}

TEST(apply_cz, errors) {
    try {
        apply_cz(plus_state(2), 0, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kSelfLoop);
    }
    try {
        apply_cz(plus_state(2), 0, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kVertexOutOfRange);
    }
}

TEST(graph_state, single_edge) {
    PureState st = graph_state(parse_edge_list("2: 1-2"));
    EXPECT_EQ(st, apply_cz(plus_state(2), 0, 1));
}

TEST(graph_state, empty_graph_is_plus_state) {
    EXPECT_EQ(graph_state(Graph(5)), plus_state(5));
}

TEST(graph_state, star_by_hand) {
    // Star centred on label 1: sign (-1)^(x1 (x2 + x3 + x4)) with x1 the most
    // significant bit of the basis index.
    PureState st = graph_state(parse_edge_list("4: 1-2, 1-3, 1-4"));
    for (size_t k = 0; k < 16; k++) {
        const int x1 = (k >> 3) & 1;
        const int leaves = static_cast<int>(((k >> 2) & 1) + ((k >> 1) & 1) + (k & 1));
        const double expected = ((x1 * leaves) % 2 ? -1.0 : 1.0) / 4.0;
        EXPECT_EQ(st.amp(k), Amplitude(expected)) << k;
    }
    EXPECT_EQ(st.amp(0b1111), Amplitude(-0.25));
}

TEST(graph_state, amplitudes_are_exact_signs) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; trial++) {
        const size_t n = 1 + rng() % 10;
        PureState st = graph_state(random_graph(n, rng));
        const double mag = std::pow(2.0, -0.5 * static_cast<double>(n));
        for (const Amplitude &a : st.amps()) {
            ASSERT_EQ(a.imag(), 0.0);
            ASSERT_EQ(std::abs(a.real()), mag);
        }
    }
    EXPECT_THROW(graph_state(Graph(15)), Error);
}

TEST(gstar, printed_amplitudes) {
    PureState printed = gstar_state_as_printed();
    EXPECT_EQ(printed.n(), 6u);
    // |000>|000>: first term of phi_1.
    EXPECT_EQ(printed.amp(0b000000), Amplitude(0.125));
    // |101>|000>: phi_6 opens with |001> - |000>.
    EXPECT_EQ(printed.amp(0b101000), Amplitude(-0.125));
    EXPECT_EQ(printed.amp(0b101001), Amplitude(0.125));
    EXPECT_EQ(printed.amp(0b111111), Amplitude(-0.125));
    for (const Amplitude &a : printed.amps()) {
        EXPECT_EQ(std::abs(a.real()), 0.125);
    }
    EXPECT_EQ(printed.norm_squared(), 1.0);
}

TEST(gstar, printed_table_is_one_sign_from_corrected) {
    PureState printed = gstar_state_as_printed();
    PureState fixed = gstar_state();
    size_t differing = 0;
    for (size_t k = 0; k < 64; k++) {
        if (printed.amp(k) != fixed.amp(k)) {
            differing++;
            EXPECT_EQ(k, kGstarMisprintIndex);
        }
    }
    EXPECT_EQ(differing, 1u);
    EXPECT_EQ(fixed.amp(0b000000), Amplitude(0.125));
    EXPECT_EQ(fixed.amp(0b101000), Amplitude(-0.125));
    EXPECT_EQ(fixed.norm_squared(), 1.0);
}

TEST(gstar, printed_table_is_not_maximally_mixed) {
    // Values obtained from the literal table; 1/2 + 1/512 etc.
    PureState printed = gstar_state_as_printed();
    EXPECT_NEAR(purity(printed, SubsetMask::of({0})), 0.501953125, 1e-12);
    EXPECT_NEAR(purity(printed, SubsetMask::of({0, 1})), 0.255859375, 1e-12);
    EXPECT_NEAR(purity(printed, SubsetMask::of({0, 1, 2})), 0.138671875, 1e-12);
}

TEST(gstar, corrected_purities) {
    PureState st = gstar_state();
    for (size_t m = 1; m <= 3; m++) {
        for_each_subset_of_size(6, m, [&](SubsetMask s) {
            EXPECT_NEAR(purity(st, s), std::ldexp(1.0, -static_cast<int>(m)), 1e-12) << subset_label(s);
        });
    }
    EXPECT_NEAR(purity(st, SubsetMask{full_mask(6)}), 1.0, 1e-12);
}

TEST(purity, matches_definition_oracle) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        const size_t n = 2 + seed % 5;
        PureState st = random_state(n, seed);
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
            ASSERT_NEAR(purity(st, SubsetMask{bits}), purity_by_definition(st, SubsetMask{bits}), kTol);
        }
    }
}

TEST(purity, full_and_empty_subsets) {
    PureState st = random_state(5, 9);
    EXPECT_NEAR(purity(st, SubsetMask{full_mask(5)}), 1.0, kTol);
    EXPECT_NEAR(purity(st, SubsetMask{}), 1.0, kTol);
}

TEST(purity, complement_symmetry_and_bounds) {
    for (uint64_t seed = 100; seed < 140; seed++) {
        const size_t n = 2 + seed % 7;
        PureState st = random_state(n, seed);
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
            SubsetMask s{bits};
            const double p = purity(st, s);
            ASSERT_NEAR(p, purity(st, s.complement(n)), kTol);
            const size_t k = std::min(s.size(), n - s.size());
            ASSERT_GE(p, std::ldexp(1.0, -static_cast<int>(k)) - kTol);
            ASSERT_LE(p, 1.0 + kTol);
        }
    }
}

TEST(purity, relabeling_equivariance) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; trial++) {
        const size_t n = 2 + rng() % 6;
        Graph g = random_graph(n, rng);
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        PureState a = graph_state(g);
        PureState b = graph_state(permute(g, perm));
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
            SubsetMask mapped;
            for (size_t q : SubsetMask{bits}.members()) {
                mapped.bits |= uint64_t{1} << perm[q];
            }
            ASSERT_NEAR(purity(a, SubsetMask{bits}), purity(b, mapped), kTol);
        }
    }
}

TEST(reduced_density, gstar_single_qubit_is_maximally_mixed) {
    DensityMatrix rho = reduced_density(gstar_state(), SubsetMask::of({0}));
    ASSERT_EQ(rho.dim, 2u);
    EXPECT_NEAR(std::abs(rho(0, 0) - 0.5), 0, 1e-12);
    EXPECT_NEAR(std::abs(rho(1, 1) - 0.5), 0, 1e-12);
    EXPECT_NEAR(std::abs(rho(0, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(rho(1, 0)), 0, 1e-12);
}

TEST(reduced_density, plus_state_is_rank_one_projector) {
    PureState st = plus_state(4);
    DensityMatrix rho = reduced_density(st, SubsetMask::of({1, 3}));
    for (const Amplitude &a : rho.data) {
        EXPECT_NEAR(std::abs(a - Amplitude(0.25)), 0, 1e-12);
    }
    EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
}

TEST(reduced_density, trace_hermiticity_and_purity_agreement) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; trial++) {
        const size_t n = 1 + rng() % 7;
        PureState st = random_state(n, rng());
        SubsetMask s{rng() & full_mask(n)};
        DensityMatrix rho = reduced_density(st, s);
        EXPECT_NEAR(std::abs(rho.trace() - Amplitude(1)), 0, kTol);
        for (size_t i = 0; i < rho.dim; i++) {
            for (size_t j = 0; j < rho.dim; j++) {
                ASSERT_NEAR(std::abs(rho(i, j) - std::conj(rho(j, i))), 0, kTol);
            }
        }
        EXPECT_NEAR(rho.purity(), purity(st, s), kTol);
    }
}

TEST(reduced_density, overflow) {
    EXPECT_THROW(reduced_density(plus_state(11), SubsetMask{full_mask(11)}), Error);
}

TEST(local_unitary, identity_is_exact) {
    PureState st = random_state(4, 2);
    EXPECT_EQ(apply_local_unitary(st, 2, LocalUnitary::identity()), st);
}

TEST(local_unitary, pauli_z_flips_signs_where_bit_set) {
    PureState st = graph_state(parse_edge_list("3: 1-2, 2-3"));
    PureState z = apply_local_unitary(st, 1, LocalUnitary::pauli_z());
    for (size_t k = 0; k < 8; k++) {
        const bool set = k & PureState::qubit_bit(3, 1);
        EXPECT_EQ(z.amp(k), set ? -st.amp(k) : st.amp(k));
    }
}

TEST(local_unitary, rejects_non_unitary_and_bad_qubit) {
    LocalUnitary bad{{Amplitude(1), Amplitude(1), Amplitude(0), Amplitude(1)}};
    try {
        apply_local_unitary(plus_state(2), 0, bad);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotUnitary);
    }
    EXPECT_THROW(apply_local_unitary(plus_state(2), 2, LocalUnitary::hadamard()), Error);
}

TEST(local_unitary, preserves_norm_and_every_purity) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; trial++) {
        const size_t n = 2 + rng() % 5;
        PureState st = graph_state(random_graph(n, rng));
        const size_t q = rng() % n;
        PureState rotated = apply_local_unitary(st, q, random_local_unitary(rng()));
        EXPECT_NEAR(rotated.norm_squared(), 1.0, kTol);
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
            ASSERT_NEAR(purity(st, SubsetMask{bits}), purity(rotated, SubsetMask{bits}), 1e-9);
        }
    }
}

TEST(random_state, deterministic_and_normalized) {
    EXPECT_EQ(random_state(6, 42), random_state(6, 42));
    EXPECT_NE(random_state(6, 42), random_state(6, 43));
    for (uint64_t seed = 0; seed < 100; seed++) {
        ASSERT_NEAR(random_state(8, seed).norm_squared(), 1.0, 1e-12);
    }
    EXPECT_THROW(random_state(13, 0), Error);
}

TEST(random_local_unitary, deterministic_and_unitary) {
    EXPECT_EQ(random_local_unitary(5).m, random_local_unitary(5).m);
    for (uint64_t seed = 0; seed < 100; seed++) {
        ASSERT_LT(random_local_unitary(seed).unitarity_error(), 1e-12);
    }
}
