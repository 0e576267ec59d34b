#include "graphent/state.h"

#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <string_view>

#include "graphent/error.h"

namespace graphent {

namespace {

void require_dense_size(size_t n) {
    if (n == 0 || n > kMaxDenseQubits) {
        throw Error(ErrorCode::kOverflow,
                    "dense engine supports 1.." + std::to_string(kMaxDenseQubits) + " qubits, got " + std::to_string(n));
    }
}

void check_qubit(const PureState &st, size_t q) {
    if (q >= st.n()) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "qubit " + std::to_string(q + 1) + " outside 1.." + std::to_string(st.n()));
    }
}

void cz_in_place(std::vector<Amplitude> &amps, size_t n, size_t a, size_t b) {
    const uint64_t both = PureState::qubit_bit(n, a) | PureState::qubit_bit(n, b);
    for (size_t k = 0; k < amps.size(); k++) {
        if ((k & both) == both) {
            amps[k] = -amps[k];
        }
    }
}

/// Splits basis index k into (row, col) where row collects the bits of the
/// qubits in `rows` and col those of the remaining qubits, each with the
/// lowest label most significant.
struct IndexSplit {
    std::vector<uint64_t> row_bits;
    std::vector<uint64_t> col_bits;

    IndexSplit(size_t n, SubsetMask rows) {
        for (size_t q = 0; q < n; q++) {
            (rows.contains(q) ? row_bits : col_bits).push_back(PureState::qubit_bit(n, q));
        }
    }

    static size_t gather(uint64_t k, const std::vector<uint64_t> &bits) {
        size_t out = 0;
        for (uint64_t b : bits) {
            out = (out << 1) | ((k & b) ? 1 : 0);
        }
        return out;
    }
};

/// Returns M with M[r * cols + c] = amp(index), rows over `rows`.
std::vector<Amplitude> reshape(const PureState &st, SubsetMask rows, size_t &row_dim, size_t &col_dim) {
    IndexSplit split(st.n(), rows);
    row_dim = size_t{1} << split.row_bits.size();
    col_dim = size_t{1} << split.col_bits.size();
    std::vector<Amplitude> m(st.dim());
    for (size_t k = 0; k < st.dim(); k++) {
        size_t r = IndexSplit::gather(k, split.row_bits);
        size_t c = IndexSplit::gather(k, split.col_bits);
        m[r * col_dim + c] = st.amp(k);
    }
    return m;
}

std::vector<Amplitude> gram(const std::vector<Amplitude> &m, size_t row_dim, size_t col_dim) {
    std::vector<Amplitude> out(row_dim * row_dim);
    for (size_t i = 0; i < row_dim; i++) {
        for (size_t j = i; j < row_dim; j++) {
            Amplitude acc = 0;
            for (size_t c = 0; c < col_dim; c++) {
                acc += m[i * col_dim + c] * std::conj(m[j * col_dim + c]);
            }
            out[i * row_dim + j] = acc;
            out[j * row_dim + i] = std::conj(acc);
        }
    }
    return out;
}

// Amplitude table of G* exactly as printed: eight blocks phi_1..phi_8 for the
// leading kets |000>..|111>, each listing signed trailing kets. Every term
// carries weight 1/8.
constexpr std::string_view kGstarPrintedBlocks[8] = {
    "+000 +001 +010 -011 +100 -101 -110 -111",
    "+000 +001 +010 -011 -100 +101 +110 +111",
    "+000 +001 -010 +011 +100 -101 +110 +111",
    "+000 -001 +010 -011 +100 -101 +110 +111",
    "+000 -001 +010 +011 +100 +101 -110 +111",
    "+001 -000 -010 -011 +100 +101 -110 +111",
    "+001 -000 +010 +011 -100 -101 -110 +111",
    "+001 -000 +010 +011 +100 +101 +110 -111",
};

}  // namespace

PureState::PureState(size_t n, std::vector<Amplitude> amps) : n_(n), amps_(std::move(amps)) {
    require_dense_size(n);
    if (amps_.size() != (size_t{1} << n)) {
        throw Error(ErrorCode::kOverflow, "amplitude count " + std::to_string(amps_.size()) + " is not 2^" +
                                              std::to_string(n));
    }
    double norm2 = norm_squared();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << "squared norm " << norm2 << " differs from 1";
        throw Error(ErrorCode::kNotNormalized, msg.str());
    }
}

double PureState::norm_squared() const {
    double total = 0;
    for (const Amplitude &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

LocalUnitary LocalUnitary::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return {{Amplitude{h}, Amplitude{h}, Amplitude{h}, Amplitude{-h}}};
}

double LocalUnitary::unitarity_error() const {
    double worst = 0;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            Amplitude e = m[2 * i] * std::conj(m[2 * j]) + m[2 * i + 1] * std::conj(m[2 * j + 1]);
            worst = std::max(worst, std::abs(e - Amplitude{i == j ? 1.0 : 0.0}));
        }
    }
    return worst;
}

Amplitude DensityMatrix::trace() const {
    Amplitude t = 0;
    for (size_t i = 0; i < dim; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double DensityMatrix::purity() const {
    double total = 0;
    for (const Amplitude &a : data) {
        total += std::norm(a);
    }
    return total;
}

PureState plus_state(size_t n) {
    require_dense_size(n);
    const size_t dim = size_t{1} << n;
    return PureState(n, std::vector<Amplitude>(dim, Amplitude{std::pow(2.0, -0.5 * static_cast<double>(n))}));
}

PureState apply_cz(const PureState &st, size_t a, size_t b) {
    check_qubit(st, a);
    check_qubit(st, b);
    if (a == b) {
        throw Error(ErrorCode::kSelfLoop, "CZ on a single qubit " + std::to_string(a + 1));
    }
    std::vector<Amplitude> amps(st.amps().begin(), st.amps().end());
    cz_in_place(amps, st.n(), a, b);
    return PureState(st.n(), std::move(amps));
}

PureState graph_state(const Graph &g) {
    require_dense_size(g.n());
    PureState plus = plus_state(g.n());
    std::vector<Amplitude> amps(plus.amps().begin(), plus.amps().end());
    for (const auto &[a, b] : g.edges()) {
        cz_in_place(amps, g.n(), a, b);
    }
    return PureState(g.n(), std::move(amps));
}

PureState gstar_state_as_printed() {
    std::vector<Amplitude> amps(64, Amplitude{0});
    for (size_t lead = 0; lead < 8; lead++) {
        std::string_view block = kGstarPrintedBlocks[lead];
        for (size_t pos = 0; pos < block.size(); pos += 5) {
            double sign = block[pos] == '-' ? -1.0 : 1.0;
            size_t tail = static_cast<size_t>((block[pos + 1] - '0') * 4 + (block[pos + 2] - '0') * 2 +
                                              (block[pos + 3] - '0'));
            amps[lead * 8 + tail] += Amplitude{sign / 8.0};
        }
    }
    return PureState(6, std::move(amps));
}

PureState gstar_state() {
    PureState printed = gstar_state_as_printed();
    std::vector<Amplitude> amps(printed.amps().begin(), printed.amps().end());
    amps[kGstarMisprintIndex] = -amps[kGstarMisprintIndex];
    return PureState(6, std::move(amps));
}

double purity(const PureState &st, SubsetMask s) {
    if (!s.within(st.n())) {
        throw Error(ErrorCode::kVertexOutOfRange, "subset exceeds qubit range");
    }
    // Tr[rho_S^2] = Tr[rho_S'^2] for a pure state; reshape so the Gram side is small.
    SubsetMask rows = s.size() <= st.n() - s.size() ? s : s.complement(st.n());
    size_t row_dim = 0;
    size_t col_dim = 0;
    std::vector<Amplitude> m = reshape(st, rows, row_dim, col_dim);
    double total = 0;
    for (size_t i = 0; i < row_dim; i++) {
        for (size_t j = 0; j < row_dim; j++) {
            Amplitude acc = 0;
            for (size_t c = 0; c < col_dim; c++) {
                acc += m[i * col_dim + c] * std::conj(m[j * col_dim + c]);
            }
            total += std::norm(acc);
        }
    }
    return total;
}

DensityMatrix reduced_density(const PureState &st, SubsetMask s) {
    if (!s.within(st.n())) {
        throw Error(ErrorCode::kVertexOutOfRange, "subset exceeds qubit range");
    }
    if (s.size() > kMaxReducedQubits) {
        throw Error(ErrorCode::kOverflow, "reduced_density supports at most " + std::to_string(kMaxReducedQubits) +
                                              " kept qubits");
    }
    size_t row_dim = 0;
    size_t col_dim = 0;
    std::vector<Amplitude> m = reshape(st, s, row_dim, col_dim);
    return DensityMatrix{row_dim, gram(m, row_dim, col_dim)};
}

PureState apply_local_unitary(const PureState &st, size_t q, const LocalUnitary &u) {
    check_qubit(st, q);
    if (u.unitarity_error() > kNormTolerance) {
        throw Error(ErrorCode::kNotUnitary, "matrix is not unitary within 1e-10");
    }
    const uint64_t bit = PureState::qubit_bit(st.n(), q);
    std::vector<Amplitude> amps(st.amps().begin(), st.amps().end());
    for (size_t k = 0; k < amps.size(); k++) {
        if (k & bit) {
            continue;
        }
        const Amplitude a0 = st.amp(k);
        const Amplitude a1 = st.amp(k | bit);
        amps[k] = u.m[0] * a0 + u.m[1] * a1;
        amps[k | bit] = u.m[2] * a0 + u.m[3] * a1;
    }
    return PureState(st.n(), std::move(amps));
}

Amplitude inner_product(const PureState &a, const PureState &b) {
    if (a.n() != b.n()) {
        throw Error(ErrorCode::kVertexOutOfRange, "inner product of states with different qubit counts");
    }
    Amplitude acc = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        acc += std::conj(a.amp(k)) * b.amp(k);
    }
    return acc;
}

PureState random_state(size_t n, uint64_t seed) {
    if (n == 0 || n > 12) {
        throw Error(ErrorCode::kOverflow, "random_state supports 1..12 qubits");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> amps(size_t{1} << n);
    double norm2 = 0;
    for (Amplitude &a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = Amplitude{re, im};
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (Amplitude &a : amps) {
        a *= scale;
    }
    return PureState(n, std::move(amps));
}

LocalUnitary random_local_unitary(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&] {
        double re = gauss(rng);
        double im = gauss(rng);
        return Amplitude{re, im};
    };
    // Columns u = (u0, u1), v = (v0, v1); Gram-Schmidt v against u.
    Amplitude u0 = draw(), u1 = draw(), v0 = draw(), v1 = draw();
    double nu = std::sqrt(std::norm(u0) + std::norm(u1));
    u0 /= nu;
    u1 /= nu;
    Amplitude proj = std::conj(u0) * v0 + std::conj(u1) * v1;
    v0 -= proj * u0;
    v1 -= proj * u1;
    double nv = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nv;
    v1 /= nv;
    return LocalUnitary{{u0, v0, u1, v1}};
}

}  // namespace graphent
