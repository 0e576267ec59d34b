#include <cctype>
#include <charconv>

#include "graphent/error.h"
#include "graphent/graph.h"

namespace graphent {

namespace {

class Scanner {
   public:
    explicit Scanner(std::string_view text) : text_(text) {
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    /// Unsigned decimal; values too large for size_t saturate so range checks
    /// downstream report them as out of range rather than as syntax.
    size_t number() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
        if (start == pos_) {
            fail("expected a vertex label");
        }
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        (void)ptr;
        if (ec == std::errc::result_out_of_range) {
            return SIZE_MAX;
        }
        return value;
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::kSyntax, what + " at column " + std::to_string(pos_ + 1) + " of \"" +
                                            std::string(text_) + "\"");
    }

   private:
    std::string_view text_;
    size_t pos_ = 0;
};

constexpr int kGraph6Offset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    Scanner in(text);
    size_t n = in.number();
    if (n == 0) {
        throw Error(ErrorCode::kSyntax, "graph must have at least one vertex");
    }
    if (n > kMaxVertices) {
        throw Error(ErrorCode::kOverflow, "vertex count " + std::to_string(n) + " exceeds " +
                                              std::to_string(kMaxVertices));
    }
    in.expect(':');
    Graph g(n);
    if (in.done()) {
        return g;
    }
    do {
        size_t a = in.number();
        in.expect('-');
        size_t b = in.number();
        for (size_t label : {a, b}) {
            if (label < 1 || label > n) {
                throw Error(ErrorCode::kVertexOutOfRange,
                            "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
            }
        }
        if (a == b) {
            throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(a) + "-" + std::to_string(b));
        }
        g.add_edge(a - 1, b - 1);
    } while (in.accept(','));
    if (!in.done()) {
        in.fail("unexpected trailing input");
    }
    return g;
}

std::string to_edge_list(const Graph &g) {
    std::string out = std::to_string(g.n()) + ":";
    bool first = true;
    for (const auto &[a, b] : g.edges()) {
        out += first ? " " : ", ";
        first = false;
        out += std::to_string(a + 1) + "-" + std::to_string(b + 1);
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(kGraph6Header.size());
    }
    if (text.empty()) {
        throw Error(ErrorCode::kSyntax, "empty graph6 string");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw Error(ErrorCode::kSyntax, "graph6 byte " + std::to_string(static_cast<int>(c)) + " outside 63..126");
        }
    }
    size_t n;
    size_t pos;
    if (text[0] == 126) {
        // Long forms encode n >= 63, which a single word cannot index.
        if (text.size() < 4) {
            throw Error(ErrorCode::kSyntax, "truncated graph6 size field");
        }
        n = 63;
        if (text[1] != 126) {
            n = (static_cast<size_t>(text[1] - kGraph6Offset) << 12) |
                (static_cast<size_t>(text[2] - kGraph6Offset) << 6) | static_cast<size_t>(text[3] - kGraph6Offset);
        }
        throw Error(ErrorCode::kOverflow, "graph6 vertex count " + std::to_string(n) + " exceeds 62");
    }
    n = static_cast<size_t>(text[0] - kGraph6Offset);
    pos = 1;
    if (n == 0) {
        throw Error(ErrorCode::kSyntax, "graph must have at least one vertex");
    }
    const size_t bits = pair_count(n);
    const size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected) {
        throw Error(ErrorCode::kSyntax, "graph6 length " + std::to_string(text.size()) + ", expected " +
                                            std::to_string(expected) + " for n=" + std::to_string(n));
    }
    Graph g(n);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            int byte = text[pos + k / 6] - kGraph6Offset;
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    for (; k % 6 != 0; k++) {
        int byte = text[pos + k / 6] - kGraph6Offset;
        if ((byte >> (5 - k % 6)) & 1) {
            throw Error(ErrorCode::kSyntax, "nonzero graph6 padding bit");
        }
    }
    return g;
}

std::string to_graph6(const Graph &g) {
    const size_t n = g.n();
    if (n > 62) {
        throw Error(ErrorCode::kOverflow, "graph6 output supports at most 62 vertices");
    }
    std::string out(1, static_cast<char>(n + kGraph6Offset));
    int byte = 0;
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            byte = (byte << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(byte + kGraph6Offset));
                byte = 0;
            }
        }
    }
    if (k % 6 != 0) {
        byte <<= 6 - k % 6;
        out.push_back(static_cast<char>(byte + kGraph6Offset));
    }
    return out;
}

}  // namespace graphent
