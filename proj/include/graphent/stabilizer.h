#ifndef GRAPHENT_STABILIZER_H
#define GRAPHENT_STABILIZER_H

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphent/graph.h"
#include "graphent/state.h"
#include "graphent/subset.h"

namespace graphent {

/// One Pauli generator in binary symplectic form, phase omitted.
struct PauliRow {
    uint64_t x = 0;
    uint64_t z = 0;

    bool operator==(const PauliRow &) const = default;
};

/// n generators of an n-qubit stabilizer group. Phases are not tracked: the
/// purities computed here depend only on the (x|z) support, and graph-state
/// generators are phase-positive.
struct StabilizerRep {
    size_t n = 0;
    std::vector<PauliRow> rows;

    /// Symplectic form x_i.z_j + z_i.x_j = 0 mod 2 for every pair.
    bool generators_commute() const;
    /// GF(2) rank of the n x 2n matrix (x|z).
    size_t rank() const;
    /// "XZI..." per row.
    std::vector<std::string> to_strings() const;
};

/// Generator a is X_a times Z on every neighbour of a.
StabilizerRep graph_stabilizers(const Graph &g);

/// Rank over GF(2) of the given rows (each row a bitmask).
size_t gf2_rank(std::span<const uint64_t> rows);

/// GF(2) rank of the adjacency block between s and its complement.
size_t cut_rank(const Graph &g, SubsetMask s);

/// Purity 2^-exponent, kept exact.
struct DyadicPurity {
    unsigned exponent = 0;

    double value() const {
        return std::ldexp(1.0, -static_cast<int>(exponent));
    }
    /// "1/2^k".
    std::string to_string() const {
        return "1/2^" + std::to_string(exponent);
    }
    bool operator==(const DyadicPurity &) const = default;
};

/// Tr[rho_S^2] of the graph state of g, equal to 2^-cut_rank(g, s).
DyadicPurity purity_exact(const Graph &g, SubsetMask s);

constexpr size_t kMaxAmeCheckVertices = 12;
constexpr size_t kMaxAmeSearchVertices = 7;

/// Every subset of at most floor(n/2) vertices has full cut rank.
bool is_ame(const Graph &g);

/// Canonical representatives of all isomorphism classes on n vertices whose
/// graph state is absolutely maximally entangled, in canonical-code order.
std::vector<Graph> find_ame_graphs(size_t n);

struct GstarMatch {
    Graph candidate;            // entry of the candidate list that matched
    std::vector<size_t> perm;   // candidate vertex v is relabeled perm[v]
    Graph graph;                // permute(candidate, perm)
    uint64_t z_mask = 0;        // bit q set: Z applied on qubit q
    double fidelity = 0;        // |<target | Z^z_mask graph_state(graph)>|
};

/// Finds the first candidate, relabeling (lexicographic), and Z pattern
/// (ascending) whose graph state equals `target` amplitude by amplitude.
/// Candidates with a vertex count other than target.n() are skipped; the
/// target must have at most 8 qubits.
std::optional<GstarMatch> match_gstar(std::span<const Graph> candidates, const PureState &target);
/// Same, against gstar_state().
std::optional<GstarMatch> match_gstar(std::span<const Graph> candidates);

}  // namespace graphent

#endif
