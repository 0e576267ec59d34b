#include "graphent/stabilizer.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "graphent/error.h"

namespace graphent {

namespace {

template <typename Word>
size_t gf2_rank_in_place(std::vector<Word> &rows) {
    size_t rank = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        // Pivot on the lowest set bit of the first remaining nonzero row.
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [](Word w) { return w != 0; });
        if (it == rows.end()) {
            break;
        }
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
        const Word pivot_row = rows[rank];
        const Word pivot = pivot_row & (~pivot_row + 1);
        for (size_t j = rank + 1; j < rows.size(); j++) {
            if (rows[j] & pivot) {
                rows[j] ^= pivot_row;
            }
        }
        rank++;
    }
    return rank;
}

int parity(uint64_t x) {
    return std::popcount(x) & 1;
}

}  // namespace

bool StabilizerRep::generators_commute() const {
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (parity((rows[i].x & rows[j].z) ^ (rows[i].z & rows[j].x))) {
                return false;
            }
        }
    }
    return true;
}

size_t StabilizerRep::rank() const {
    std::vector<unsigned __int128> wide;
    wide.reserve(rows.size());
    for (const PauliRow &r : rows) {
        wide.push_back((static_cast<unsigned __int128>(r.z) << 64) | r.x);
    }
    return gf2_rank_in_place(wide);
}

std::vector<std::string> StabilizerRep::to_strings() const {
    std::vector<std::string> out;
    for (const PauliRow &r : rows) {
        std::string s;
        for (size_t q = 0; q < n; q++) {
            bool x = (r.x >> q) & 1;
            bool z = (r.z >> q) & 1;
            s.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
        }
        out.push_back(std::move(s));
    }
    return out;
}

StabilizerRep graph_stabilizers(const Graph &g) {
    StabilizerRep rep;
    rep.n = g.n();
    for (size_t a = 0; a < g.n(); a++) {
        rep.rows.push_back(PauliRow{uint64_t{1} << a, g.row(a)});
    }
    return rep;
}

size_t gf2_rank(std::span<const uint64_t> rows) {
    std::vector<uint64_t> work(rows.begin(), rows.end());
    return gf2_rank_in_place(work);
}

size_t cut_rank(const Graph &g, SubsetMask s) {
    return gf2_rank(cut_submatrix(g, s).rows);
}

DyadicPurity purity_exact(const Graph &g, SubsetMask s) {
    return DyadicPurity{static_cast<unsigned>(cut_rank(g, s))};
}

bool is_ame(const Graph &g) {
    if (g.n() > kMaxAmeCheckVertices) {
        throw Error(ErrorCode::kOverflow, "is_ame supports at most " + std::to_string(kMaxAmeCheckVertices) +
                                              " vertices");
    }
    bool ok = true;
    for (size_t m = 1; m <= g.n() / 2 && ok; m++) {
        for_each_subset_of_size(g.n(), m, [&](SubsetMask s) {
            if (ok && cut_rank(g, s) != m) {
                ok = false;
            }
        });
    }
    return ok;
}

std::vector<Graph> find_ame_graphs(size_t n) {
    if (n == 0 || n > kMaxAmeSearchVertices) {
        throw Error(ErrorCode::kOverflow, "find_ame_graphs supports 1.." + std::to_string(kMaxAmeSearchVertices) +
                                              " vertices");
    }
    std::vector<Graph> out;
    for (Graph &g : enumerate_graphs(n, false, true)) {
        if (is_ame(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::optional<GstarMatch> match_gstar(std::span<const Graph> candidates, const PureState &target) {
    const size_t n = target.n();
    if (n > 8) {
        throw Error(ErrorCode::kOverflow, "match_gstar supports at most 8 qubits");
    }
    const size_t dim = target.dim();
    const double magnitude = std::pow(2.0, -0.5 * static_cast<double>(n));

    // A graph state up to Z signs has real amplitudes of equal magnitude.
    std::vector<uint8_t> target_sign(dim);
    for (size_t k = 0; k < dim; k++) {
        const Amplitude a = target.amp(k);
        if (std::abs(a.imag()) > kNormTolerance || std::abs(std::abs(a.real()) - magnitude) > kNormTolerance) {
            return std::nullopt;
        }
        target_sign[k] = a.real() < 0 ? 1 : 0;
    }

    // z_pattern[z][k]: sign contributed by Z on the qubits of z at basis k.
    std::vector<std::vector<uint8_t>> z_pattern(dim, std::vector<uint8_t>(dim));
    for (uint64_t z = 0; z < dim; z++) {
        uint64_t index_bits = 0;
        for (size_t q = 0; q < n; q++) {
            if ((z >> q) & 1) {
                index_bits |= PureState::qubit_bit(n, q);
            }
        }
        for (size_t k = 0; k < dim; k++) {
            z_pattern[z][k] = static_cast<uint8_t>(parity(k & index_bits));
        }
    }

    std::vector<uint8_t> diff(dim);
    for (const Graph &candidate : candidates) {
        if (candidate.n() != n) {
            continue;
        }
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const Graph relabeled = permute(candidate, perm);
            std::vector<uint64_t> edge_bits;
            for (const auto &[a, b] : relabeled.edges()) {
                edge_bits.push_back(PureState::qubit_bit(n, a) | PureState::qubit_bit(n, b));
            }
            for (size_t k = 0; k < dim; k++) {
                int sign = 0;
                for (uint64_t e : edge_bits) {
                    sign ^= (k & e) == e;
                }
                diff[k] = static_cast<uint8_t>(sign ^ target_sign[k]);
            }
            for (uint64_t z = 0; z < dim; z++) {
                if (diff != z_pattern[z]) {
                    continue;
                }
                PureState candidate_state = graph_state(relabeled);
                for (size_t q = 0; q < n; q++) {
                    if ((z >> q) & 1) {
                        candidate_state = apply_local_unitary(candidate_state, q, LocalUnitary::pauli_z());
                    }
                }
                return GstarMatch{candidate, perm, relabeled, z, std::abs(inner_product(target, candidate_state))};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

std::optional<GstarMatch> match_gstar(std::span<const Graph> candidates) {
    return match_gstar(candidates, gstar_state());
}

}  // namespace graphent
