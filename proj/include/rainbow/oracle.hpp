#ifndef RAINBOW_ORACLE_HPP
#define RAINBOW_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/solver.hpp"

namespace rainbow {

// Streams every independent `size`-subset of C_t in lexicographic order of
// the sorted 0-based member list. Requires 1 <= size < t.
void for_each_independent_set(const CycleContext& context, int size,
                              const std::function<void(const std::vector<int>&)>& emit);

std::vector<VertexSet> enumerate_independent_sets(const CycleContext& context, int size);

// Backtracking distinct-representative search: picks one vertex from each of
// `target` distinct family indices so the chosen vertices are distinct and
// independent. Index subsets are explored, so families larger than `target`
// are fine. Deterministic: family indices in order, candidate vertices
// ascending, assignment tried before skipping an index. Returns pairs of
// (0-based family index, 0-based vertex) or nullopt.
std::optional<std::vector<std::pair<int, int>>> brute_force_rainbow(
    const CycleContext& context, const std::vector<VertexSet>& family, int target);

namespace detail {
// Both search paths, exposed for the equivalence test. The dispatcher picks
// the bitmask path for t <= 64; observable behavior is identical.
std::optional<std::vector<std::pair<int, int>>> brute_force_rainbow_general(
    const CycleContext& context, const std::vector<VertexSet>& family, int target);
std::optional<std::vector<std::pair<int, int>>> brute_force_rainbow_bitmask(
    const CycleContext& context, const std::vector<VertexSet>& family, int target);
}  // namespace detail

struct ScanReport {
    int cycle_order = 0;
    int set_size = 0;
    std::uint64_t families = 0;
    std::vector<Instance> failures;  // expected empty; a non-empty list is the find
    double elapsed_ms = 0.0;
};

// Families of s arcs in C_{2s+1}, rotation-reduced by fixing a_1 = 1 while
// (a_2,...,a_s) ranges over [1, 2s+1]^{s-1}. `index` is the mixed-radix
// encoding of that tuple, most significant digit first.
std::uint64_t theorem_family_count(int s);
Instance theorem_family(int s, std::uint64_t index);

// Runs solve + check_assignment over every rotation-reduced family; any
// family whose certificate fails (or whose solve throws a tripwire) is
// recorded as data, not raised. workers <= 0 means hardware concurrency.
ScanReport exhaustive_theorem_check(int s, int workers = 0);

// Candidate pool for conjecture scanning in C_t: all independent s-sets,
// plus the indices of those that are the lexicographic minimum of their
// rotation orbit (the canonical first-set representatives).
struct ConjecturePool {
    CycleContext context;
    std::vector<VertexSet> sets;
    std::vector<std::size_t> canonical;
};

ConjecturePool conjecture_pool(int t, int s);
std::uint64_t conjecture_family_count(const ConjecturePool& pool, int s);
std::vector<VertexSet> conjecture_family(const ConjecturePool& pool, int s, std::uint64_t index);

// Scans every family (with repetition) of s independent s-sets in C_t whose
// first set is canonical, running brute_force_rainbow with target s on each.
// Requires s < t/2. An empty failure list is evidence for f_{C_t}(s,s) = s
// at these parameters; a non-empty one is a counterexample.
ScanReport conjecture_scan(int t, int s, int workers = 0);

}  // namespace rainbow

#endif
