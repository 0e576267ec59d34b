#ifndef GRAPHENT_STATE_H
#define GRAPHENT_STATE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graphent/graph.h"
#include "graphent/subset.h"

namespace graphent {

using Amplitude = std::complex<double>;

constexpr size_t kMaxDenseQubits = 14;
constexpr size_t kMaxReducedQubits = 10;
constexpr double kNormTolerance = 1e-10;

/// Dense n-qubit pure state.
///
/// Basis convention: internal qubit q (label q + 1) is bit n-1-q of the basis
/// index, so label 1 is the most significant bit. For n = 6 the ket
/// |011>|000> is index 0b011000 = 24: labels 2 and 3 are set.
class PureState {
   public:
    /// Throws Overflow unless 1 <= n <= 14 and amps.size() == 2^n, and
    /// NotNormalized if the squared norm misses 1 by more than 1e-10.
    PureState(size_t n, std::vector<Amplitude> amps);

    size_t n() const {
        return n_;
    }
    size_t dim() const {
        return amps_.size();
    }
    const Amplitude &amp(size_t index) const {
        return amps_[index];
    }
    std::span<const Amplitude> amps() const {
        return amps_;
    }
    double norm_squared() const;

    /// Basis-index bit that holds internal qubit q.
    static uint64_t qubit_bit(size_t n, size_t q) {
        return uint64_t{1} << (n - 1 - q);
    }

    bool operator==(const PureState &other) const = default;

   private:
    size_t n_;
    std::vector<Amplitude> amps_;
};

/// Row-major 2x2 matrix [[m0, m1], [m2, m3]].
struct LocalUnitary {
    std::array<Amplitude, 4> m{Amplitude{1}, Amplitude{0}, Amplitude{0}, Amplitude{1}};

    static LocalUnitary identity() {
        return {};
    }
    static LocalUnitary pauli_x() {
        return {{Amplitude{0}, Amplitude{1}, Amplitude{1}, Amplitude{0}}};
    }
    static LocalUnitary pauli_z() {
        return {{Amplitude{1}, Amplitude{0}, Amplitude{0}, Amplitude{-1}}};
    }
    static LocalUnitary hadamard();

    /// max |(U U^dagger - I)_ij|.
    double unitarity_error() const;
};

/// Dense square complex matrix, row-major.
struct DensityMatrix {
    size_t dim = 0;
    std::vector<Amplitude> data;

    const Amplitude &operator()(size_t r, size_t c) const {
        return data[r * dim + c];
    }
    Amplitude trace() const;
    /// Tr(rho^2) for Hermitian rho.
    double purity() const;
};

PureState plus_state(size_t n);
PureState apply_cz(const PureState &st, size_t a, size_t b);
/// CZ on every edge applied to plus_state(n).
PureState graph_state(const Graph &g);

/// The six-qubit state G* with its amplitude table as printed, which contains
/// one sign misprint (see gstar_state).
PureState gstar_state_as_printed();
/// The printed table with the single sign at |011>|000> corrected; the result
/// is exactly a graph state whose marginals are maximally mixed.
PureState gstar_state();
/// Basis index of the corrected misprint.
constexpr size_t kGstarMisprintIndex = 0b011000;

/// Tr[rho_S^2] through the Gram matrix of the S x S' reshaping of the
/// amplitudes, using whichever side is smaller.
double purity(const PureState &st, SubsetMask s);
/// rho_S with row index bits ordered like the basis convention (lowest
/// qubit label most significant). Requires |S| <= 10.
DensityMatrix reduced_density(const PureState &st, SubsetMask s);

PureState apply_local_unitary(const PureState &st, size_t q, const LocalUnitary &u);

/// <a|b>.
Amplitude inner_product(const PureState &a, const PureState &b);

/// Seeded normalized complex-Gaussian state, n <= 12.
PureState random_state(size_t n, uint64_t seed);
/// Seeded Haar-style unitary from two orthonormalized complex-Gaussian columns.
LocalUnitary random_local_unitary(uint64_t seed);

}  // namespace graphent

#endif
