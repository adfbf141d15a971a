#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zccs/gbf.hpp"

using namespace zccs;

namespace {

// y1*y2 + y0 over q=2, m=3: the running example seed
Gbf example_seed() { return Gbf(2, 3, {{{1, 2}, 1}}, {{0, 1}}, 0); }

Gbf random_gbf(std::mt19937& rng, long q, int m) {
    std::uniform_int_distribution<long> coeff(0, q - 1);
    std::uniform_int_distribution<int> pick(0, 3);
    std::map<std::pair<int, int>, long> quad;
    std::map<int, long> lin;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            if (pick(rng) == 0) quad[{i, j}] = coeff(rng);
        if (pick(rng) == 0) lin[i] = coeff(rng);
    }
    return Gbf(q, m, std::move(quad), std::move(lin), coeff(rng));
}

std::vector<int> bits(long r, int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = (r >> i) & 1;
    return p;
}

}  // namespace

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Gbf(3, 2), std::invalid_argument);  // odd q
    CHECK_THROWS_AS(Gbf(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 2, {{{0, 0}, 1}}), std::invalid_argument);   // square term
    CHECK_THROWS_AS(Gbf(2, 2, {{{0, 2}, 1}}), std::invalid_argument);   // index out of range
    CHECK_THROWS_AS(Gbf(2, 2, {}, {{2, 1}}), std::invalid_argument);

    // coefficients are normalized mod q, zero terms dropped
    Gbf g(4, 2, {{{1, 0}, 5}}, {{0, 4}}, -1);
    CHECK(g.quad().at({0, 1}) == 1);
    CHECK(g.lin().empty());
    CHECK(g.constant() == 3);
}

TEST_CASE("evaluation") {
    const Gbf g = example_seed();
    CHECK(g.eval({0, 0, 0}) == 0);
    CHECK(g.eval({1, 0, 0}) == 1);
    CHECK(g.eval({0, 1, 1}) == 1);
    CHECK(g.eval({1, 1, 1}) == 0);
    CHECK_THROWS_AS(g.eval({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(g.eval({0, 1, 2}), std::invalid_argument);

    const Gbf h(4, 2, {{{0, 1}, 2}}, {{1, 3}}, 1);
    CHECK(h.eval({0, 0}) == 1);
    CHECK(h.eval({1, 1}) == (2 + 3 + 1) % 4);
}

TEST_CASE("reversal: frozen expansion") {
    // reversing y1*y2 + y0 over q=2 gives y1*y2 + y0 + y1 + y2 (constants cancel)
    const Gbf r = example_seed().reversed();
    CHECK(r.quad().at({1, 2}) == 1);
    CHECK(r.lin().at(0) == 1);
    CHECK(r.lin().at(1) == 1);
    CHECK(r.lin().at(2) == 1);
    CHECK(r.constant() == 0);
}

TEST_CASE("reversal: pointwise identity and involution") {
    std::mt19937 rng(7);
    for (long q : {2L, 4L, 8L}) {
        for (int m = 1; m <= 5; ++m) {
            for (int trial = 0; trial < 8; ++trial) {
                const Gbf g = random_gbf(rng, q, m);
                const Gbf r = g.reversed();
                CHECK(r.reversed() == g);
                for (long pt = 0; pt < (1L << m); ++pt) {
                    std::vector<int> p = bits(pt, m), flipped = p;
                    for (int& b : flipped) b ^= 1;
                    CHECK(r.eval(p) == g.eval(flipped));
                }
            }
        }
    }
}

TEST_CASE("restriction: frozen example") {
    // fix y1 = 1 in y1*y2 + y0: survivors renumber to (y0, y2->y1), giving y1 + y0
    const auto res = example_seed().restricted(1, 1);
    CHECK(res.g.m() == 2);
    CHECK(res.g.quad().empty());
    CHECK(res.g.lin().at(0) == 1);
    CHECK(res.g.lin().at(1) == 1);
    CHECK(res.source_index == std::vector<int>{0, 2});

    // fix y1 = 0: the quadratic term dies entirely
    const auto res0 = example_seed().restricted(1, 0);
    CHECK(res0.g.quad().empty());
    CHECK(res0.g.lin().at(0) == 1);
    CHECK(res0.g.lin().count(1) == 0);
}

TEST_CASE("restriction: agrees with evaluation") {
    std::mt19937 rng(11);
    for (int m = 2; m <= 5; ++m) {
        const Gbf g = random_gbf(rng, 4, m);
        for (int var = 0; var < m; ++var) {
            for (int value = 0; value <= 1; ++value) {
                const auto res = g.restricted(var, value);
                for (long pt = 0; pt < (1L << (m - 1)); ++pt) {
                    const std::vector<int> sub = bits(pt, m - 1);
                    std::vector<int> full(static_cast<std::size_t>(m), value);
                    for (int i = 0; i < m - 1; ++i)
                        full[static_cast<std::size_t>(res.source_index[static_cast<std::size_t>(i)])] =
                            sub[static_cast<std::size_t>(i)];
                    CHECK(res.g.eval(sub) == g.eval(full));
                }
            }
        }
    }
    CHECK_THROWS_AS(Gbf(2, 1).restricted(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 2).restricted(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 2).restricted(0, 2), std::invalid_argument);
}

TEST_CASE("quadratic graph") {
    const GbfGraph gr = example_seed().quadratic_graph();
    CHECK(gr.vertex_count == 3);
    REQUIRE(gr.edges.size() == 1);
    CHECK(gr.edges[0].a == 1);
    CHECK(gr.edges[0].b == 2);
    CHECK(gr.edges[0].weight == 1);

    // linear-only function has an edgeless graph
    CHECK(Gbf(2, 4, {}, {{0, 1}, {3, 1}}).quadratic_graph().edges.empty());
}

TEST_CASE("path reduction: the running example") {
    const Gbf g = example_seed();
    const PathReport ok = check_path_reduction(g, {0});
    CHECK(ok.ok);
    CHECK(ok.failure == PathFailure::None);
    CHECK(ok.remaining_path == std::vector<int>{1, 2});
    CHECK(ok.end_vertices == std::vector<int>{1, 2});

    // deleting a path-interior vertex disconnects the rest
    const PathReport bad = check_path_reduction(g, {1});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure == PathFailure::Disconnected);

    // gamma must be an end
    CHECK(check_path_reduction(g, {0}, 1).ok);
    CHECK(check_path_reduction(g, {0}, 2).ok);
}

TEST_CASE("path reduction: failure taxonomy") {
    // weight 1 != q/2 = 2 for q=4
    const Gbf wrong_w(4, 2, {{{0, 1}, 1}});
    CHECK(check_path_reduction(wrong_w, {}).failure == PathFailure::WrongEdgeWeight);

    // triangle is connected but not a path
    const Gbf tri(2, 3, {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}});
    CHECK(check_path_reduction(tri, {}).failure == PathFailure::NotAPath);
    CHECK(check_path_reduction(tri, {0}).ok);  // deleting one corner leaves an edge

    // star with a degree-3 hub
    const Gbf star(2, 4, {{{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}});
    CHECK(check_path_reduction(star, {}).failure == PathFailure::NotAPath);

    // gamma in the middle of a 3-path
    const Gbf p3(2, 3, {{{0, 1}, 1}, {{1, 2}, 1}});
    const PathReport mid = check_path_reduction(p3, {}, 1);
    CHECK_FALSE(mid.ok);
    CHECK(mid.failure == PathFailure::GammaNotEnd);
    CHECK(check_path_reduction(p3, {}, 0).ok);
    CHECK(check_path_reduction(p3, {}, 2).ok);

    // errors, not failures
    CHECK_THROWS_AS(check_path_reduction(p3, {3}), std::out_of_range);
    CHECK_THROWS_AS(check_path_reduction(p3, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(check_path_reduction(p3, {0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_path_reduction(p3, {0}, 5), std::out_of_range);
}

TEST_CASE("path reduction: trivial single-vertex path") {
    const Gbf g(2, 1, {}, {{0, 1}});
    const PathReport rep = check_path_reduction(g, {});
    CHECK(rep.ok);
    CHECK(rep.remaining_path == std::vector<int>{0});
    CHECK(rep.end_vertices == std::vector<int>{0});
    CHECK(check_path_reduction(g, {}, 0).ok);
}

TEST_CASE("path reduction: edges at deleted vertices are unconstrained") {
    // the 0-2 edge has weight 1 != q/2 = 2, but vertex 0 is deleted
    const Gbf g(4, 3, {{{0, 2}, 1}, {{1, 2}, 2}});
    CHECK(check_path_reduction(g, {0}).ok);
    CHECK(check_path_reduction(g, {}).failure == PathFailure::WrongEdgeWeight);
}

TEST_CASE("find_deletion_set") {
    CHECK(find_deletion_set(example_seed(), 1) == std::vector<int>{0});
    CHECK(find_deletion_set(example_seed(), 0) == std::nullopt);  // {1,2} path plus isolated 0

    const Gbf p2(2, 2, {{{0, 1}, 1}});
    CHECK(find_deletion_set(p2, 0) == std::vector<int>{});

    // every edge has a bad weight: no deletion set of size 1 can fix a q=4 triangle
    const Gbf tri(4, 3, {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}});
    CHECK(find_deletion_set(tri, 1) == std::nullopt);

    // lexicographically smallest set wins: both {0} and {1} work here
    const Gbf two_comp(2, 3, {{{1, 2}, 1}, {{0, 2}, 1}});
    CHECK(find_deletion_set(two_comp, 1) == std::vector<int>{0});

    CHECK_THROWS_AS(find_deletion_set(p2, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_deletion_set(p2, -1), std::invalid_argument);
}

TEST_CASE("restriction preserves the reduced path") {
    // fixing any deleted variable to any value must leave the same surviving path
    const Gbf g = example_seed();
    for (int value = 0; value <= 1; ++value) {
        const auto res = g.restricted(0, value);
        const PathReport rep = check_path_reduction(res.g, {});
        CHECK(rep.ok);
        REQUIRE(rep.remaining_path.size() == 2);
        // map back to original labels
        CHECK(res.source_index[static_cast<std::size_t>(rep.remaining_path[0])] == 1);
        CHECK(res.source_index[static_cast<std::size_t>(rep.remaining_path[1])] == 2);
    }
}
