#ifndef GRAPHENT_GRAPH_H
#define GRAPHENT_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphent/subset.h"

namespace graphent {

/// Simple undirected graph on vertices 0..n-1 stored as symmetric adjacency
/// rows. Row v has bit w set iff {v,w} is an edge.
///
/// Text formats use 1-based vertex labels; everything in memory is 0-based.
class Graph {
   public:
    /// Edgeless graph on n vertices, 1 <= n <= 63.
    explicit Graph(size_t n);

    /// Checked construction from adjacency rows. Throws SelfLoop on a diagonal
    /// bit, VertexOutOfRange on bits >= n, Syntax on an asymmetric matrix.
    static Graph from_rows(std::span<const uint64_t> rows);
    /// 0-based edge pairs; duplicates collapse.
    static Graph from_edges(size_t n, std::span<const std::pair<size_t, size_t>> edges);

    size_t n() const {
        return rows_.size();
    }
    uint64_t row(size_t v) const {
        return rows_[v];
    }
    std::span<const uint64_t> rows() const {
        return rows_;
    }
    uint64_t vertex_mask() const {
        return full_mask(n());
    }

    bool has_edge(size_t a, size_t b) const;
    void add_edge(size_t a, size_t b);
    void toggle_edge(size_t a, size_t b);

    size_t degree(size_t v) const;
    size_t edge_count() const;
    std::vector<size_t> degree_sequence() const;
    /// Ascending (a, b) with a < b.
    std::vector<std::pair<size_t, size_t>> edges() const;

    bool operator==(const Graph &other) const = default;

   private:
    void check_pair(size_t a, size_t b) const;

    std::vector<uint64_t> rows_;
};

/// Relabels vertex v as perm[v].
Graph permute(const Graph &g, std::span<const size_t> perm);

bool is_connected(const Graph &g);

/// Toggles every edge between two neighbours of v.
Graph local_complement(const Graph &g, size_t v);

/// Dense GF(2) matrix: bit c of rows[r] is entry (r, c).
struct BitMatrix {
    size_t cols = 0;
    std::vector<uint64_t> rows;

    bool get(size_t r, size_t c) const {
        return (rows[r] >> c) & 1;
    }
};

/// Adjacency block between s (rows, ascending vertex) and its complement
/// (columns, ascending vertex).
BitMatrix cut_submatrix(const Graph &g, SubsetMask s);

// ---- text formats -------------------------------------------------------

/// Parses "n: a-b, c-d, ..." with 1-based labels.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph &g);

/// Standard graph6 (n <= 62). A leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

// ---- enumeration / isomorphism ------------------------------------------

constexpr size_t kMaxEnumerationVertices = 8;

/// Number of vertex pairs n(n-1)/2.
constexpr size_t pair_count(size_t n) {
    return n * (n - 1) / 2;
}

/// Labeled edge code: bit k is the k-th vertex pair in graph6 order
/// (0,1), (0,2), (1,2), (0,3), ... Requires n <= 11.
uint64_t edge_code(const Graph &g);
Graph graph_from_edge_code(size_t n, uint64_t code);

/// Canonical code: the same pair sequence read most-significant-first, so
/// integer order agrees with lexicographic order of the graph6 bit string.
uint64_t canonical_code(const Graph &g);

/// Relabeling of g with the lexicographically smallest graph6 bit string over
/// all n! relabelings. Requires n <= 8.
Graph canonical_form(const Graph &g);

/// Labeled graphs in ascending edge_code order, or one canonical
/// representative per isomorphism class in ascending canonical_code order.
std::vector<Graph> enumerate_graphs(size_t n, bool connected_only, bool up_to_iso);

}  // namespace graphent

#endif
