#include <gtest/gtest.h>

#include "graphent/error.h"
#include "graphent/graph.h"

using namespace graphent;

namespace {

// Independent graph6 encoder written straight from the format description:
// size byte n+63, then the upper triangle column by column, six bits per byte,
// zero padded, each byte offset by 63.
std::string reference_graph6(const Graph &g) {
    std::string bits;
    for (size_t j = 1; j < g.n(); j++) {
        for (size_t i = 0; i < j; i++) {
            bits.push_back(g.has_edge(i, j) ? '1' : '0');
        }
    }
    while (bits.size() % 6 != 0) {
        bits.push_back('0');
    }
    std::string out(1, static_cast<char>(g.n() + 63));
    for (size_t k = 0; k < bits.size(); k += 6) {
        out.push_back(static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63));
    }
    return out;
}

ErrorCode code_of(const std::string &text) {
    try {
        parse_graph6(text);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error for " << text;
    return ErrorCode::kSyntax;
}

}  // namespace

TEST(graph6, complete_k4) {
    Graph k4 = parse_edge_list("4: 1-2, 1-3, 1-4, 2-3, 2-4, 3-4");
    EXPECT_EQ(reference_graph6(k4), "C~");
    EXPECT_EQ(parse_graph6("C~"), k4);
    EXPECT_EQ(to_graph6(k4), "C~");
}

TEST(graph6, single_edge) {
    Graph e = parse_edge_list("2: 1-2");
    EXPECT_EQ(reference_graph6(e), "A_");
    EXPECT_EQ(parse_graph6("A_"), e);
    EXPECT_EQ(to_graph6(e), "A_");
}

TEST(graph6, single_vertex) {
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(parse_graph6("@"), Graph(1));
}

TEST(graph6, header_and_newline_tolerated) {
    EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), parse_graph6("C~"));
    EXPECT_EQ(parse_graph6("C~\r\n"), parse_graph6("C~"));
}

TEST(graph6, errors) {
    EXPECT_EQ(code_of(""), ErrorCode::kSyntax);
    EXPECT_EQ(code_of("C"), ErrorCode::kSyntax);        // missing body
    EXPECT_EQ(code_of("C~~"), ErrorCode::kSyntax);      // too long
    EXPECT_EQ(code_of("C !"), ErrorCode::kSyntax);      // byte below 63
    EXPECT_EQ(code_of("B`"), ErrorCode::kSyntax);       // nonzero padding bit
    EXPECT_EQ(code_of("?"), ErrorCode::kSyntax);        // zero vertices
    EXPECT_EQ(code_of("~?@?"), ErrorCode::kOverflow);   // n = 64
    EXPECT_EQ(code_of("}" + std::string(310, '?')), ErrorCode::kSyntax);
    EXPECT_THROW(to_graph6(Graph(63)), Error);
}

TEST(graph6, matches_reference_and_round_trips_for_all_small_graphs) {
    for (size_t n = 1; n <= 6; n++) {
        for (const Graph &g : enumerate_graphs(n, false, false)) {
            const std::string s = to_graph6(g);
            ASSERT_EQ(s, reference_graph6(g));
            ASSERT_EQ(parse_graph6(s), g);
            ASSERT_EQ(to_graph6(parse_graph6(s)), s);
        }
    }
}

TEST(graph6, large_graph_round_trip) {
    Graph g(62);
    for (size_t v = 0; v + 1 < 62; v++) {
        g.add_edge(v, v + 1);
    }
    g.add_edge(0, 61);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    EXPECT_EQ(to_graph6(g), reference_graph6(g));
}
