#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rainbow/cycle.hpp"

using namespace rainbow;

namespace {

// 1-based helpers so tests read like the external format.
VertexSet make_set(int t, std::vector<int> labels) {
    for (int& v : labels) --v;
    return VertexSet(CycleContext(t), std::move(labels));
}

bool adjacent1(int t, int u, int v) {
    return CycleContext(t).adjacent(u - 1, v - 1);
}

}  // namespace

TEST_SUITE("cycle") {

TEST_CASE("context rejects orders below 3") {
    CHECK_THROWS_AS(CycleContext(2), Error);
    CHECK_THROWS_AS(CycleContext(0), Error);
    CHECK_NOTHROW(CycleContext(3));
}

TEST_CASE("reduce handles negatives") {
    CycleContext ctx(5);
    CHECK(ctx.reduce(-1) == 4);
    CHECK(ctx.reduce(-6) == 4);
    CHECK(ctx.reduce(7) == 2);
    CHECK(ctx.reduce(0) == 0);
}

TEST_CASE("adjacency on C_5") {
    CHECK(adjacent1(5, 1, 2));
    CHECK(adjacent1(5, 5, 1));  // wrap-around edge
    CHECK_FALSE(adjacent1(5, 1, 3));
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    for (int t : {3, 5, 8, 13}) {
        CycleContext ctx(t);
        for (int u = 0; u < t; ++u) {
            CHECK_FALSE(ctx.adjacent(u, u));
            for (int v = 0; v < t; ++v) {
                CHECK(ctx.adjacent(u, v) == ctx.adjacent(v, u));
            }
        }
    }
}

TEST_CASE("independence predicate") {
    CHECK(make_set(5, {1, 3}).is_independent());
    CHECK_FALSE(make_set(5, {5, 1}).is_independent());
    CHECK(make_set(7, {1, 3, 5}).is_independent());
    CHECK(make_set(5, {2}).is_independent());
}

TEST_CASE("independence is monotone under subsets") {
    std::mt19937 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        const int t = 3 + static_cast<int>(rng() % 20);
        CycleContext ctx(t);
        std::vector<int> all(t);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        const int size = 1 + static_cast<int>(rng() % t);
        std::vector<int> members(all.begin(), all.begin() + size);
        VertexSet set(ctx, members);
        if (!set.is_independent()) continue;
        // every subset stays independent
        std::vector<int> subset;
        for (int v : members) {
            if (rng() % 2) subset.push_back(v);
        }
        CHECK(VertexSet(ctx, subset).is_independent());
    }
}

TEST_CASE("vertex set validation") {
    CycleContext ctx(5);
    CHECK_THROWS_AS(VertexSet(ctx, {0, 0}), Error);
    CHECK_THROWS_AS(VertexSet(ctx, {5}), Error);
    CHECK_THROWS_AS(VertexSet(ctx, {-1}), Error);
    CHECK(VertexSet(ctx, {3, 0, 2}).members() == std::vector<int>{0, 2, 3});
}

TEST_CASE("arc members") {
    // 1-based starts 4 and 5 in C_5, start 6 in C_7
    CHECK(arc_members(CycleContext(5), Arc{3, 2}) == make_set(5, {4, 5}));
    CHECK(arc_members(CycleContext(5), Arc{4, 2}) == make_set(5, {5, 1}));
    CHECK(arc_members(CycleContext(7), Arc{5, 3}) == make_set(7, {6, 7, 1}));
}

TEST_CASE("arc member count equals length for every start") {
    std::mt19937 rng(7);
    for (int round = 0; round < 300; ++round) {
        const int t = 3 + static_cast<int>(rng() % 40);
        const int length = 1 + static_cast<int>(rng() % (t - 1));
        const int start = static_cast<int>(rng() % t);
        CHECK(arc_members(CycleContext(t), Arc{start, length}).size() == length);
    }
}

TEST_CASE("arc rejects full-cycle and bad lengths") {
    CycleContext ctx(5);
    CHECK_THROWS_AS(arc_members(ctx, Arc{0, 5}), Error);
    CHECK_THROWS_AS(arc_members(ctx, Arc{0, 0}), Error);
    CHECK_THROWS_AS(arc_members(ctx, Arc{5, 1}), Error);
}

TEST_CASE("arc_covering recovers arcs and rejects split sets") {
    CycleContext ctx(7);
    for (int start = 0; start < 7; ++start) {
        for (int length = 1; length < 7; ++length) {
            const Arc arc{start, length};
            const auto covered = arc_covering(arc_members(ctx, arc));
            REQUIRE(covered.has_value());
            CHECK(*covered == arc);
        }
    }
    CHECK_FALSE(arc_covering(make_set(7, {1, 3})).has_value());
    CHECK_FALSE(arc_covering(make_set(7, {1, 2, 4, 5})).has_value());
    CHECK_FALSE(arc_covering(make_set(5, {1, 2, 3, 4, 5})).has_value());
}

}  // TEST_SUITE
