#include "signedfj/graph.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace signedfj;

namespace {

SignedGraph triangle(int s01, int s02, int s12) {
    return SignedGraph{3, {{0, 1, s01}, {0, 2, s02}, {1, 2, s12}}};
}

// A returned witness must be a real edge that contradicts the returned sides.
void check_witness(const SignedGraph& g, const BalanceResult& result) {
    REQUIRE(result.conflict.has_value());
    const SignedEdge e = *result.conflict;
    CHECK(std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end());
    const bool same_side = result.side[static_cast<std::size_t>(e.u)] ==
                           result.side[static_cast<std::size_t>(e.v)];
    CHECK((e.sign > 0) != same_side);
}

}  // namespace

TEST_CASE("from_sign_matrix extracts upper-triangle edges and drops zeros") {
    SignMatrix w(3, 3);
    w <<  1, -1,  0,
         -1,  1,  1,
          0,  1,  1;
    const SignedGraph g = from_sign_matrix(w);
    CHECK(g.node_count == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0] == SignedEdge{0, 1, -1});
    CHECK(g.edges[1] == SignedEdge{1, 2, 1});
}

TEST_CASE("a purely diagonal pattern has no edges") {
    const SignedGraph g = from_sign_matrix(SignMatrix::Identity(4, 4));
    CHECK(g.node_count == 4);
    CHECK(g.edges.empty());
    CHECK(is_structurally_balanced(g).balanced);
}

TEST_CASE("from_sign_matrix rejects malformed input") {
    CHECK_THROWS_AS(from_sign_matrix(SignMatrix::Ones(2, 3)), ValidationError);

    SignMatrix asym(2, 2);
    asym << 1, 1,
            -1, 1;
    try {
        from_sign_matrix(asym);
        FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.issue() == ValidationIssue::AsymmetricInput);
    }
}

TEST_CASE("all-positive triangle is balanced on a single side") {
    const BalanceResult result = is_structurally_balanced(triangle(1, 1, 1));
    CHECK(result.balanced);
    CHECK_FALSE(result.conflict.has_value());
    CHECK(result.side == std::vector<Side>{Side::A, Side::A, Side::A});
}

TEST_CASE("triangle with one negative edge is unbalanced with a witness") {
    const SignedGraph g = triangle(1, 1, -1);
    const BalanceResult result = is_structurally_balanced(g);
    CHECK_FALSE(result.balanced);
    check_witness(g, result);
}

TEST_CASE("triangle with two negative edges splits into two camps") {
    const BalanceResult result = is_structurally_balanced(triangle(1, -1, -1));
    CHECK(result.balanced);
    CHECK(result.side == std::vector<Side>{Side::A, Side::A, Side::B});
}

TEST_CASE("all-negative triangle is unbalanced") {
    const SignedGraph g = triangle(-1, -1, -1);
    const BalanceResult result = is_structurally_balanced(g);
    CHECK_FALSE(result.balanced);
    check_witness(g, result);
}

TEST_CASE("rank-one sign patterns are always balanced along the sign split") {
    Eigen::VectorXi v(5);
    v << 1, -1, -1, 1, -1;
    const SignMatrix w = (v * v.transpose()).eval();
    const BalanceResult result = is_structurally_balanced(from_sign_matrix(w));
    CHECK(result.balanced);
    for (int i = 0; i < 5; ++i) {
        CHECK((result.side[static_cast<std::size_t>(i)] == Side::A) == (v(i) == v(0)));
    }
}

TEST_CASE("components are colored independently, each seeded at its lowest node") {
    // Nodes 0-2: balanced two-camp triangle. Nodes 3-4: positive edge.
    SignedGraph g{5, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}, {3, 4, 1}}};
    const BalanceResult result = is_structurally_balanced(g);
    CHECK(result.balanced);
    CHECK(result.side[0] == Side::A);
    CHECK(result.side[3] == Side::A);
    CHECK(result.side[4] == Side::A);

    // An unbalanced component spoils the whole graph.
    SignedGraph g2{6, {{0, 1, 1}, {0, 2, -1}, {1, 2, -1}, {3, 4, 1}, {3, 5, 1}, {4, 5, -1}}};
    const BalanceResult bad = is_structurally_balanced(g2);
    CHECK_FALSE(bad.balanced);
    check_witness(g2, bad);
    CHECK(bad.conflict->u >= 3);
}

TEST_CASE("isolated nodes and empty graphs are balanced") {
    CHECK(is_structurally_balanced(SignedGraph{0, {}}).balanced);
    CHECK(is_structurally_balanced(SignedGraph{4, {}}).balanced);
}

TEST_CASE("decision is deterministic") {
    std::mt19937 rng(5150);
    const SignedGraph g = testing::random_signed_graph(rng, 8);
    const BalanceResult a = is_structurally_balanced(g);
    const BalanceResult b = is_structurally_balanced(g);
    CHECK(a.balanced == b.balanced);
    CHECK(a.side == b.side);
    CHECK(a.conflict == b.conflict);
}

TEST_CASE("verdict matches brute-force bipartition search on random graphs") {
    std::mt19937 rng(8080);
    int unbalanced_seen = 0;
    for (int k = 0; k < 120; ++k) {
        const SignedGraph g = testing::random_signed_graph(rng, 7);
        const BalanceResult result = is_structurally_balanced(g);
        CHECK(result.balanced == testing::brute_force_balanced(g));
        if (!result.balanced) {
            ++unbalanced_seen;
            check_witness(g, result);
        }
    }
    // The sample must exercise both verdicts.
    CHECK(unbalanced_seen > 10);
    CHECK(unbalanced_seen < 110);
}
