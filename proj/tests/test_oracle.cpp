#include <doctest.h>

#include <random>

#include "rainbow/oracle.hpp"
#include "rainbow/transform.hpp"

using namespace rainbow;

namespace {

std::vector<std::vector<int>> members_1based(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& set : sets) {
        std::vector<int> labels;
        for (int v : set.members()) labels.push_back(v + 1);
        out.push_back(std::move(labels));
    }
    return out;
}

std::vector<VertexSet> make_family(int t, std::vector<std::vector<int>> sets_1based) {
    CycleContext ctx(t);
    std::vector<VertexSet> family;
    for (auto& labels : sets_1based) {
        for (int& v : labels) --v;
        family.emplace_back(ctx, std::move(labels));
    }
    return family;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumerate independent 2-sets of C_5") {
    const auto sets = enumerate_independent_sets(CycleContext(5), 2);
    CHECK(members_1based(sets) ==
          std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
}

TEST_CASE("enumerate singletons and the C_7 triples") {
    CHECK(enumerate_independent_sets(CycleContext(5), 1).size() == 5);
    CHECK(enumerate_independent_sets(CycleContext(7), 3).size() == 7);
}

TEST_CASE("enumeration counts used by the scans") {
    CHECK(enumerate_independent_sets(CycleContext(7), 2).size() == 14);
    CHECK(enumerate_independent_sets(CycleContext(9), 2).size() == 27);
    CHECK(enumerate_independent_sets(CycleContext(9), 3).size() == 30);
    CHECK(enumerate_independent_sets(CycleContext(9), 4).size() == 9);
    CHECK(enumerate_independent_sets(CycleContext(11), 3).size() == 77);
    CHECK(enumerate_independent_sets(CycleContext(11), 4).size() == 55);
    CHECK(enumerate_independent_sets(CycleContext(11), 5).size() == 11);
}

TEST_CASE("enumeration parameter validation") {
    CHECK_THROWS_AS(enumerate_independent_sets(CycleContext(5), 0), Error);
    CHECK_THROWS_AS(enumerate_independent_sets(CycleContext(5), 5), Error);
}

TEST_CASE("enumeration output is sorted, distinct and independent") {
    for (int t : {5, 8, 11}) {
        for (int m = 1; m < t / 2 + 1; ++m) {
            const auto sets = enumerate_independent_sets(CycleContext(t), m);
            for (std::size_t i = 0; i < sets.size(); ++i) {
                CHECK(sets[i].is_independent());
                CHECK(sets[i].size() == m);
                if (i > 0) CHECK(sets[i - 1].members() < sets[i].members());
            }
        }
    }
}

TEST_CASE("brute force on twin sets") {
    const auto family = make_family(5, {{1, 3}, {1, 3}});
    const auto found = brute_force_rainbow(CycleContext(5), family, 2);
    REQUIRE(found.has_value());
    CHECK(*found == std::vector<std::pair<int, int>>{{0, 0}, {1, 2}});
}

TEST_CASE("brute force cannot exceed the family size") {
    const auto family = make_family(5, {{1, 3}});
    CHECK_FALSE(brute_force_rainbow(CycleContext(5), family, 2).has_value());
}

TEST_CASE("brute force on the worked pair") {
    const auto family = make_family(5, {{2, 4}, {3, 5}});
    const auto found = brute_force_rainbow(CycleContext(5), family, 2);
    REQUIRE(found.has_value());
    CHECK(*found == std::vector<std::pair<int, int>>{{0, 1}, {1, 4}});  // 1 -> 2, 2 -> 5
}

TEST_CASE("brute force may skip indices (partial rainbow form)") {
    // index 2 cannot be represented once 3 is taken, so the search must
    // leave it out and still reach the target via index 3
    const auto family = make_family(5, {{3}, {3}, {1}});
    const auto found = brute_force_rainbow(CycleContext(5), family, 2);
    REQUIRE(found.has_value());
    CHECK(*found == std::vector<std::pair<int, int>>{{0, 2}, {2, 0}});
}

TEST_CASE("bitmask and general search agree") {
    std::mt19937 rng(91);
    for (int round = 0; round < 300; ++round) {
        const int t = 5 + static_cast<int>(rng() % 60);
        CycleContext ctx(t);
        const int m = 1 + static_cast<int>(rng() % std::min(4, t / 2));
        const auto pool = enumerate_independent_sets(ctx, m);
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<VertexSet> family;
        for (int i = 0; i < n; ++i) family.push_back(pool[rng() % pool.size()]);
        const int target = 1 + static_cast<int>(rng() % n);
        CHECK(detail::brute_force_rainbow_general(ctx, family, target) ==
              detail::brute_force_rainbow_bitmask(ctx, family, target));
    }
}

TEST_CASE("general path handles t > 64") {
    CycleContext ctx(70);
    const auto family = make_family(70, {{1, 3, 5}, {1, 3, 5}, {1, 3, 5}});
    const auto found = brute_force_rainbow(ctx, family, 3);
    REQUIRE(found.has_value());
    CHECK(*found == std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {2, 4}});
}

TEST_CASE("theorem family decoding") {
    CHECK(theorem_family_count(1) == 1);
    CHECK(theorem_family_count(2) == 5);
    CHECK(theorem_family_count(3) == 49);
    CHECK(theorem_family_count(6) == 371293);

    const Instance first = theorem_family(2, 0);  // starts (1,1)
    CHECK(members_1based(first.family) == std::vector<std::vector<int>>{{1, 3}, {1, 3}});
    const Instance last = theorem_family(2, 4);  // starts (1,5)
    CHECK(members_1based(last.family) ==
          std::vector<std::vector<int>>{{1, 3}, {1, 4}});  // arc start 5 -> f({5,1}) = {4,1}
}

TEST_CASE("exhaustive theorem check at small sizes") {
    for (int s = 1; s <= 4; ++s) {
        const auto report = exhaustive_theorem_check(s, 1);
        CHECK(report.families == theorem_family_count(s));
        CHECK(report.failures.empty());
        CHECK(report.cycle_order == 2 * s + 1);
    }
}

TEST_CASE("worker partitioning does not change scan results") {
    for (int workers : {1, 2, 5}) {
        const auto report = exhaustive_theorem_check(4, workers);
        CHECK(report.families == 729);
        CHECK(report.failures.empty());
    }
}

TEST_CASE("solver and brute force agree on every s <= 3 family") {
    for (int s = 1; s <= 3; ++s) {
        CycleContext ctx(2 * s + 1);
        for (std::uint64_t index = 0; index < theorem_family_count(s); ++index) {
            const Instance instance = theorem_family(s, index);
            const auto certificate = solve(instance);
            CHECK(verify_certificate(instance, certificate));
            const auto brute = brute_force_rainbow(ctx, instance.family, s);
            REQUIRE(brute.has_value());
            CHECK(check_assignment(instance, *brute) == VerifyFailure::none);
        }
    }
}

TEST_CASE("conjecture pool canonical representatives") {
    const auto pool_7_2 = conjecture_pool(7, 2);
    CHECK(pool_7_2.sets.size() == 14);
    CHECK(pool_7_2.canonical.size() == 2);
    CHECK(conjecture_family_count(pool_7_2, 2) == 28);

    const auto pool_9_3 = conjecture_pool(9, 3);
    CHECK(pool_9_3.sets.size() == 30);
    CHECK(pool_9_3.canonical.size() == 4);  // three full orbits plus the period-3 one
    CHECK(conjecture_family_count(pool_9_3, 3) == 3600);

    const auto pool_11_5 = conjecture_pool(11, 5);
    CHECK(pool_11_5.sets.size() == 11);
    CHECK(pool_11_5.canonical.size() == 1);
    CHECK(conjecture_family_count(pool_11_5, 5) == 14641);
}

TEST_CASE("conjecture scan on small parameters") {
    const auto report = conjecture_scan(7, 2, 1);
    CHECK(report.families == 28);
    CHECK(report.failures.empty());

    const auto boundary = conjecture_scan(5, 2, 1);  // t = 2s+1 boundary case
    CHECK(boundary.families == 5);
    CHECK(boundary.failures.empty());
}

TEST_CASE("conjecture scan at t = 2s+1 covers the same space as the theorem scan") {
    for (int s = 2; s <= 3; ++s) {
        const auto conjecture = conjecture_scan(2 * s + 1, s, 1);
        const auto theorem = exhaustive_theorem_check(s, 1);
        CHECK(conjecture.families == theorem.families);
        CHECK(conjecture.failures.empty());
        CHECK(theorem.failures.empty());
    }
}

TEST_CASE("conjecture scan parameter validation") {
    CHECK_THROWS_AS(conjecture_scan(6, 3, 1), Error);  // s >= t/2
    CHECK_THROWS_AS(conjecture_scan(7, 0, 1), Error);
    CHECK_THROWS_AS(conjecture_scan(2, 1, 1), Error);
}

TEST_CASE("rainbow target needs enough sets: absent below the family size") {
    std::mt19937 rng(20250101);
    for (int s = 2; s <= 5; ++s) {
        const int t = 2 * s + 1;
        CycleContext ctx(t);
        const auto pool = enumerate_independent_sets(ctx, s);
        for (int round = 0; round < 50; ++round) {
            std::vector<VertexSet> family;
            for (int i = 0; i < s - 1; ++i) family.push_back(pool[rng() % pool.size()]);
            CHECK_FALSE(brute_force_rainbow(ctx, family, s).has_value());
        }
    }
}

}  // TEST_SUITE
