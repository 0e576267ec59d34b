#include <algorithm>
#include <array>
#include <set>

#include "graphent/error.h"
#include "graphent/graph.h"

namespace graphent {

namespace {

constexpr size_t kMaxCodeVertices = 11;

size_t pair_index(size_t i, size_t j) {
    return j * (j - 1) / 2 + i;
}

void require_code_size(size_t n) {
    if (n > kMaxCodeVertices) {
        throw Error(ErrorCode::kOverflow, "edge codes support at most " + std::to_string(kMaxCodeVertices) + " vertices");
    }
}

/// Branch-and-bound search for the relabeling with the smallest canonical
/// code. Positions are filled in order 0, 1, ...; placing position j fixes
/// exactly the pairs (i, j), i < j, which form the next block of the
/// most-significant-first code. Siblings are therefore only explored when
/// their new block is minimal, and branches whose prefix already exceeds the
/// best complete code are cut.
class CanonicalSearch {
   public:
    explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.n()), total_bits_(pair_count(g.n())) {
    }

    /// order[pos] = original vertex placed at pos.
    std::array<size_t, kMaxCodeVertices> run() {
        dfs(0, 0, 0);
        return best_order_;
    }

    uint64_t best_code() const {
        return best_;
    }

   private:
    void dfs(size_t pos, uint64_t prefix, uint64_t used) {
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        std::array<uint64_t, kMaxCodeVertices> cols{};
        uint64_t min_col = ~uint64_t{0};
        for (size_t v = 0; v < n_; v++) {
            if ((used >> v) & 1) {
                continue;
            }
            uint64_t col = 0;
            for (size_t i = 0; i < pos; i++) {
                col = (col << 1) | ((g_.row(order_[i]) >> v) & 1);
            }
            cols[v] = col;
            min_col = std::min(min_col, col);
        }
        const uint64_t next_prefix = (prefix << pos) | min_col;
        if (have_best_) {
            const size_t fixed_bits = pair_count(pos + 1);
            if (next_prefix > (best_ >> (total_bits_ - fixed_bits))) {
                return;
            }
        }
        for (size_t v = 0; v < n_; v++) {
            if (!((used >> v) & 1) && cols[v] == min_col) {
                order_[pos] = v;
                dfs(pos + 1, next_prefix, used | (uint64_t{1} << v));
            }
        }
    }

    const Graph &g_;
    size_t n_;
    size_t total_bits_;
    std::array<size_t, kMaxCodeVertices> order_{};
    std::array<size_t, kMaxCodeVertices> best_order_{};
    uint64_t best_ = 0;
    bool have_best_ = false;
};

Graph graph_from_canonical_code(size_t n, uint64_t code) {
    const size_t total = pair_count(n);
    Graph g(n);
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++) {
            if ((code >> (total - 1 - pair_index(i, j))) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

uint64_t min_canonical_code(const Graph &g) {
    CanonicalSearch search(g);
    search.run();
    return search.best_code();
}

}  // namespace

uint64_t edge_code(const Graph &g) {
    require_code_size(g.n());
    uint64_t code = 0;
    for (const auto &[a, b] : g.edges()) {
        code |= uint64_t{1} << pair_index(a, b);
    }
    return code;
}

Graph graph_from_edge_code(size_t n, uint64_t code) {
    require_code_size(n);
    Graph g(n);
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++) {
            if ((code >> pair_index(i, j)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

uint64_t canonical_code(const Graph &g) {
    require_code_size(g.n());
    const size_t total = pair_count(g.n());
    uint64_t code = 0;
    for (const auto &[a, b] : g.edges()) {
        code |= uint64_t{1} << (total - 1 - pair_index(a, b));
    }
    return code;
}

Graph canonical_form(const Graph &g) {
    if (g.n() > kMaxEnumerationVertices) {
        throw Error(ErrorCode::kOverflow, "canonical_form supports at most " +
                                              std::to_string(kMaxEnumerationVertices) + " vertices");
    }
    return graph_from_canonical_code(g.n(), min_canonical_code(g));
}

std::vector<Graph> enumerate_graphs(size_t n, bool connected_only, bool up_to_iso) {
    if (n == 0 || n > kMaxEnumerationVertices) {
        throw Error(ErrorCode::kOverflow, "enumeration supports 1.." + std::to_string(kMaxEnumerationVertices) +
                                              " vertices, got " + std::to_string(n));
    }
    std::vector<Graph> out;
    if (!up_to_iso) {
        const uint64_t count = uint64_t{1} << pair_count(n);
        for (uint64_t code = 0; code < count; code++) {
            Graph g = graph_from_edge_code(n, code);
            if (!connected_only || is_connected(g)) {
                out.push_back(std::move(g));
            }
        }
        return out;
    }

    // Every graph on k vertices is some graph on k-1 vertices plus one vertex
    // with an arbitrary neighbourhood, so extending each class representative
    // in all 2^(k-1) ways reaches every class on k vertices.
    std::set<uint64_t> classes{0};
    for (size_t k = 2; k <= n; k++) {
        std::set<uint64_t> next;
        for (uint64_t code : classes) {
            const Graph base = graph_from_canonical_code(k - 1, code);
            std::vector<uint64_t> rows(base.rows().begin(), base.rows().end());
            rows.push_back(0);
            for (uint64_t nbhd = 0; nbhd < (uint64_t{1} << (k - 1)); nbhd++) {
                std::vector<uint64_t> ext = rows;
                ext[k - 1] = nbhd;
                for (size_t v = 0; v + 1 < k; v++) {
                    if ((nbhd >> v) & 1) {
                        ext[v] |= uint64_t{1} << (k - 1);
                    }
                }
                next.insert(min_canonical_code(Graph::from_rows(ext)));
            }
        }
        classes = std::move(next);
    }
    for (uint64_t code : classes) {
        Graph g = graph_from_canonical_code(n, code);
        if (!connected_only || is_connected(g)) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace graphent
