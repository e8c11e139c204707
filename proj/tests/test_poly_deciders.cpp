#include "fuzz.hpp"

#include "dartcover/errors.hpp"

#include <doctest.h>

using namespace dartcover;

TEST_CASE("one-vertex targets")
{
    CHECK(decide_one_vertex(cycle(7), 0, 1).answer);
    CHECK(decide_one_vertex(petersen(), 1, 1).answer);
    CHECK_FALSE(decide_one_vertex(cycle(5), 2, 0).answer);
    CHECK(decide_one_vertex(cycle(6), 2, 0).answer);
    CHECK(decide_one_vertex(complete(4), 1, 1).method == DeciderMethod::Matching);
    CHECK(decide_one_vertex(complete(5), 0, 2).answer);
    CHECK_THROWS_AS(decide_one_vertex(petersen(), 3, 0), UnsupportedFamily);
    CHECK_THROWS_AS(decide_one_vertex(cycle(4), 2, 1), UnsupportedFamily);
    const auto v = decide_one_vertex(cycle(5), 1, 1);
    CHECK_FALSE(v.answer);
    CHECK_FALSE(v.reason.empty());
}

TEST_CASE("bipartite bar targets")
{
    CHECK(decide_bipartite_bars(complete_bipartite(3, 3), 3).answer);
    CHECK(decide_bipartite_bars(cycle(6), 2).answer);
    CHECK_FALSE(decide_bipartite_bars(complete(4), 3).answer);
    CHECK_FALSE(decide_bipartite_bars(cycle(5), 2).answer);
    CHECK_THROWS_AS(decide_bipartite_bars(cycle(4), 0), std::invalid_argument);
}

TEST_CASE("two-vertex examples")
{
    const Graph w = build_W(0, 0, 2, 0, 0);
    CHECK(decide_two_vertex_regular_2sat(cycle(6), w).answer);
    CHECK_FALSE(decide_two_vertex_regular_2sat(cycle(5), w).answer);
    CHECK(decide_two_vertex_regular_2sat(cycle(2), w).answer);

    // loop and bar against a bar-only vertex: vertices told apart by degree
    const Graph h = build_W(0, 1, 1, 0, 0);
    const auto v = decide_two_vertex_nonregular(build_W(0, 1, 1, 0, 0), h);
    CHECK(v.answer);
    CHECK(v.method == DeciderMethod::Partition);
    GraphBuilder b;
    auto x = b.add_vertex();
    b.add_loop(x);
    b.add_loop(x);
    CHECK_FALSE(decide_two_vertex_nonregular(b.build(), h).answer);

    CHECK_THROWS_AS(decide_two_vertex_nonregular(cycle(4), build_W(2, 2, 2, 1, 1)), UnsupportedFamily);
    CHECK_THROWS_AS(decide_two_vertex_regular_2sat(complete(4), build_W(0, 1, 1, 1, 0)), UnsupportedFamily);
}

TEST_CASE("deciders agree with the exact search")
{
    unsigned seed = 1;
    for (const auto& f : fuzz::families()) {
        CAPTURE(f.name);
        const auto o = fuzz::run(f, 200, 16, seed++);
        CHECK(o.mismatches == 0);
        CHECK(o.bad_witnesses == 0);
        if (!o.first_failure.empty())
            MESSAGE(o.first_failure);
        CHECK(o.yes > 0);
        CHECK(o.yes < o.cases);
    }
}
