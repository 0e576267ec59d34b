#include "graphent/graph.h"

#include <bit>

#include "graphent/error.h"

namespace graphent {

Graph::Graph(size_t n) {
    if (n == 0 || n > kMaxVertices) {
        throw Error(ErrorCode::kOverflow,
                    "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
    }
    rows_.assign(n, 0);
}

Graph Graph::from_rows(std::span<const uint64_t> rows) {
    Graph g(rows.size());
    const uint64_t mask = g.vertex_mask();
    for (size_t v = 0; v < rows.size(); v++) {
        if (rows[v] & ~mask) {
            throw Error(ErrorCode::kVertexOutOfRange, "adjacency row " + std::to_string(v + 1) + " has bits beyond n");
        }
        if ((rows[v] >> v) & 1) {
            throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(v + 1) + " is adjacent to itself");
        }
    }
    for (size_t v = 0; v < rows.size(); v++) {
        for (uint64_t b = rows[v]; b; b &= b - 1) {
            size_t w = static_cast<size_t>(std::countr_zero(b));
            if (!((rows[w] >> v) & 1)) {
                throw Error(ErrorCode::kSyntax, "adjacency is not symmetric at " + std::to_string(v + 1) + "-" +
                                                    std::to_string(w + 1));
            }
        }
    }
    g.rows_.assign(rows.begin(), rows.end());
    return g;
}

Graph Graph::from_edges(size_t n, std::span<const std::pair<size_t, size_t>> edges) {
    Graph g(n);
    for (const auto &[a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

void Graph::check_pair(size_t a, size_t b) const {
    if (a >= n() || b >= n()) {
        throw Error(ErrorCode::kVertexOutOfRange, "vertex index outside graph of " + std::to_string(n()) + " vertices");
    }
    if (a == b) {
        throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(a + 1) + "-" + std::to_string(a + 1));
    }
}

bool Graph::has_edge(size_t a, size_t b) const {
    if (a >= n() || b >= n()) {
        return false;
    }
    return (rows_[a] >> b) & 1;
}

void Graph::add_edge(size_t a, size_t b) {
    check_pair(a, b);
    rows_[a] |= uint64_t{1} << b;
    rows_[b] |= uint64_t{1} << a;
}

void Graph::toggle_edge(size_t a, size_t b) {
    check_pair(a, b);
    rows_[a] ^= uint64_t{1} << b;
    rows_[b] ^= uint64_t{1} << a;
}

size_t Graph::degree(size_t v) const {
    return static_cast<size_t>(std::popcount(rows_[v]));
}

size_t Graph::edge_count() const {
    size_t total = 0;
    for (uint64_t r : rows_) {
        total += static_cast<size_t>(std::popcount(r));
    }
    return total / 2;
}

std::vector<size_t> Graph::degree_sequence() const {
    std::vector<size_t> out;
    out.reserve(n());
    for (size_t v = 0; v < n(); v++) {
        out.push_back(degree(v));
    }
    return out;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = 0; a < n(); a++) {
        for (uint64_t b = rows_[a] & ~full_mask(a + 1); b; b &= b - 1) {
            out.emplace_back(a, static_cast<size_t>(std::countr_zero(b)));
        }
    }
    return out;
}

Graph permute(const Graph &g, std::span<const size_t> perm) {
    if (perm.size() != g.n()) {
        throw Error(ErrorCode::kVertexOutOfRange, "permutation size does not match vertex count");
    }
    uint64_t seen = 0;
    for (size_t p : perm) {
        if (p >= g.n() || ((seen >> p) & 1)) {
            throw Error(ErrorCode::kVertexOutOfRange, "not a permutation of the vertex set");
        }
        seen |= uint64_t{1} << p;
    }
    Graph out(g.n());
    for (const auto &[a, b] : g.edges()) {
        out.add_edge(perm[a], perm[b]);
    }
    return out;
}

bool is_connected(const Graph &g) {
    uint64_t reached = 1;
    uint64_t frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        for (uint64_t b = frontier; b; b &= b - 1) {
            next |= g.row(static_cast<size_t>(std::countr_zero(b)));
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == g.vertex_mask();
}

Graph local_complement(const Graph &g, size_t v) {
    if (v >= g.n()) {
        throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v + 1) + " not in graph");
    }
    const uint64_t nbhd = g.row(v);
    std::vector<uint64_t> rows(g.rows().begin(), g.rows().end());
    for (uint64_t b = nbhd; b; b &= b - 1) {
        size_t u = static_cast<size_t>(std::countr_zero(b));
        rows[u] ^= nbhd & ~(uint64_t{1} << u);
    }
    return Graph::from_rows(rows);
}

BitMatrix cut_submatrix(const Graph &g, SubsetMask s) {
    if (!s.within(g.n())) {
        throw Error(ErrorCode::kVertexOutOfRange, "subset exceeds vertex range");
    }
    const std::vector<size_t> cols = s.complement(g.n()).members();
    BitMatrix m;
    m.cols = cols.size();
    for (size_t v : s.members()) {
        uint64_t packed = 0;
        for (size_t c = 0; c < cols.size(); c++) {
            packed |= ((g.row(v) >> cols[c]) & 1) << c;
        }
        m.rows.push_back(packed);
    }
    return m;
}

}  // namespace graphent
