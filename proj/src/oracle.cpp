#include "rainbow/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>
#include <thread>

#include "rainbow/transform.hpp"

namespace rainbow {

namespace {

void recurse_independent(const CycleContext& context, int size, std::vector<int>& chosen,
                         int next, const std::function<void(const std::vector<int>&)>& emit) {
    const int t = context.order();
    if (static_cast<int>(chosen.size()) == size) {
        emit(chosen);
        return;
    }
    const int remaining = size - static_cast<int>(chosen.size());
    for (int v = next; v <= t - remaining; ++v) {
        // Ascending choice keeps output lexicographic; the wrap edge (0, t-1)
        // is the only adjacency not caught by the v >= prev+2 stride.
        if (!chosen.empty() && v - chosen.back() < 2) continue;
        if (!chosen.empty() && chosen.front() == 0 && v == t - 1) continue;
        chosen.push_back(v);
        recurse_independent(context, size, chosen, v + 1, emit);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_independent_set(const CycleContext& context, int size,
                              const std::function<void(const std::vector<int>&)>& emit) {
    if (size < 1 || size >= context.order()) {
        throw Error(ErrorCode::InvalidParameters, "set size must satisfy 1 <= m < t");
    }
    std::vector<int> chosen;
    chosen.reserve(size);
    recurse_independent(context, size, chosen, 0, emit);
}

std::vector<VertexSet> enumerate_independent_sets(const CycleContext& context, int size) {
    std::vector<VertexSet> sets;
    for_each_independent_set(context, size, [&](const std::vector<int>& members) {
        sets.emplace_back(context, members);
    });
    return sets;
}

namespace detail {

namespace {

struct GeneralSearch {
    const CycleContext& context;
    const std::vector<VertexSet>& family;
    int target;
    std::vector<char> used;
    std::vector<std::pair<int, int>> chosen;

    bool run(int index) {
        if (static_cast<int>(chosen.size()) == target) return true;
        const int n = static_cast<int>(family.size());
        if (index == n || static_cast<int>(chosen.size()) + (n - index) < target) return false;
        for (int v : family[index].members()) {
            if (used[v]) continue;
            bool blocked = false;
            for (const auto& [i, u] : chosen) {
                if (context.adjacent(v, u)) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            used[v] = 1;
            chosen.emplace_back(index, v);
            if (run(index + 1)) return true;
            chosen.pop_back();
            used[v] = 0;
        }
        return run(index + 1);  // leave this index unrepresented
    }
};

struct BitmaskSearch {
    const std::vector<VertexSet>& family;
    int t;
    int target;
    std::uint64_t used = 0;
    std::uint64_t blocked = 0;  // used vertices and their cycle neighbors
    std::vector<std::pair<int, int>> chosen;

    std::uint64_t closed_neighborhood(int v) const {
        const int prev = v == 0 ? t - 1 : v - 1;
        const int next = v == t - 1 ? 0 : v + 1;
        return (1ULL << v) | (1ULL << prev) | (1ULL << next);
    }

    bool run(int index) {
        if (static_cast<int>(chosen.size()) == target) return true;
        const int n = static_cast<int>(family.size());
        if (index == n || static_cast<int>(chosen.size()) + (n - index) < target) return false;
        for (int v : family[index].members()) {
            if ((used >> v) & 1ULL) continue;
            if ((blocked >> v) & 1ULL) continue;
            const std::uint64_t saved_used = used;
            const std::uint64_t saved_blocked = blocked;
            used |= 1ULL << v;
            blocked |= closed_neighborhood(v);
            chosen.emplace_back(index, v);
            if (run(index + 1)) return true;
            chosen.pop_back();
            used = saved_used;
            blocked = saved_blocked;
        }
        return run(index + 1);
    }
};

}  // namespace

std::optional<std::vector<std::pair<int, int>>> brute_force_rainbow_general(
    const CycleContext& context, const std::vector<VertexSet>& family, int target) {
    GeneralSearch search{context, family, target, std::vector<char>(context.order(), 0), {}};
    if (search.run(0)) return search.chosen;
    return std::nullopt;
}

std::optional<std::vector<std::pair<int, int>>> brute_force_rainbow_bitmask(
    const CycleContext& context, const std::vector<VertexSet>& family, int target) {
    BitmaskSearch search{family, context.order(), target, 0, 0, {}};
    if (search.run(0)) return search.chosen;
    return std::nullopt;
}

}  // namespace detail

std::optional<std::vector<std::pair<int, int>>> brute_force_rainbow(
    const CycleContext& context, const std::vector<VertexSet>& family, int target) {
    if (target < 0) {
        throw Error(ErrorCode::InvalidParameters, "rainbow target must be nonnegative");
    }
    if (context.order() <= 64) {
        return detail::brute_force_rainbow_bitmask(context, family, target);
    }
    return detail::brute_force_rainbow_general(context, family, target);
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exponent) {
    std::uint64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw Error(ErrorCode::InvalidParameters, "scan space too large to index");
        }
        result *= base;
    }
    return result;
}

// Runs fn(begin, end, slot) over a contiguous partition of [0, total).
void run_partitioned(std::uint64_t total, int workers,
                     const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& fn) {
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    const auto worker_count = static_cast<std::uint64_t>(workers);
    if (worker_count <= 1 || total <= 1) {
        fn(0, total, 0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < worker_count; ++w) {
        const std::uint64_t begin = total / worker_count * w + std::min(w, total % worker_count);
        const std::uint64_t end =
            total / worker_count * (w + 1) + std::min(w + 1, total % worker_count);
        threads.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<std::size_t>(w)); });
    }
    for (auto& thread : threads) thread.join();
}

int resolved_workers(int workers) {
    if (workers > 0) return workers;
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

}  // namespace

std::uint64_t theorem_family_count(int s) {
    if (s < 1) {
        throw Error(ErrorCode::InvalidParameters, "family size must be positive");
    }
    return checked_pow(static_cast<std::uint64_t>(2 * s + 1), s - 1);
}

Instance theorem_family(int s, std::uint64_t index) {
    const int t = 2 * s + 1;
    const CycleContext context(t);

    // Decode (a_2,...,a_s) from the base-t digits of index, then fix a_1 = 1.
    std::vector<int> starts(s, 1);
    for (int i = s - 1; i >= 1; --i) {
        starts[i] = static_cast<int>(index % t) + 1;
        index /= t;
    }

    Instance instance{context, {}};
    instance.family.reserve(s);
    for (int start : starts) {
        instance.family.push_back(arc_to_independent_set(context, Arc{start - 1, s}));
    }
    return instance;
}

ScanReport exhaustive_theorem_check(int s, int workers) {
    const std::uint64_t total = theorem_family_count(s);
    const int slots = resolved_workers(workers);

    std::vector<std::vector<Instance>> failures(slots);
    const auto started = std::chrono::steady_clock::now();

    run_partitioned(total, slots, [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
        for (std::uint64_t index = begin; index < end; ++index) {
            Instance instance = theorem_family(s, index);
            bool ok = false;
            try {
                ok = verify_certificate(instance, solve(instance));
            } catch (const Error&) {
                ok = false;  // tripwire escapes are scan failures, not crashes
            }
            if (!ok) failures[slot].push_back(std::move(instance));
        }
    });

    ScanReport report;
    report.cycle_order = 2 * s + 1;
    report.set_size = s;
    report.families = total;
    for (auto& slot_failures : failures) {
        for (auto& failure : slot_failures) report.failures.push_back(std::move(failure));
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

ConjecturePool conjecture_pool(int t, int s) {
    const CycleContext context(t);
    ConjecturePool pool{context, enumerate_independent_sets(context, s), {}};

    for (std::size_t i = 0; i < pool.sets.size(); ++i) {
        const auto& members = pool.sets[i].members();
        bool minimal = true;
        std::vector<int> shifted(members.size());
        for (int c = 1; c < t && minimal; ++c) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                shifted[j] = context.reduce(static_cast<long long>(members[j]) + c);
            }
            std::sort(shifted.begin(), shifted.end());
            if (shifted < members) minimal = false;
        }
        if (minimal) pool.canonical.push_back(i);
    }
    return pool;
}

std::uint64_t conjecture_family_count(const ConjecturePool& pool, int s) {
    const std::uint64_t tail = checked_pow(pool.sets.size(), s - 1);
    if (tail != 0 && pool.canonical.size() > std::numeric_limits<std::uint64_t>::max() / tail) {
        throw Error(ErrorCode::InvalidParameters, "scan space too large to index");
    }
    return pool.canonical.size() * tail;
}

std::vector<VertexSet> conjecture_family(const ConjecturePool& pool, int s, std::uint64_t index) {
    const std::uint64_t base = pool.sets.size();
    std::vector<VertexSet> family;
    family.reserve(s);

    std::vector<std::size_t> picks(s);
    for (int i = s - 1; i >= 1; --i) {
        picks[i] = static_cast<std::size_t>(index % base);
        index /= base;
    }
    picks[0] = pool.canonical[static_cast<std::size_t>(index)];

    for (int i = 0; i < s; ++i) family.push_back(pool.sets[picks[i]]);
    return family;
}

ScanReport conjecture_scan(int t, int s, int workers) {
    if (s < 1 || t < 3 || 2 * s >= t) {
        throw Error(ErrorCode::InvalidParameters, "conjecture scan requires 1 <= s < t/2");
    }

    const ConjecturePool pool = conjecture_pool(t, s);
    const std::uint64_t total = conjecture_family_count(pool, s);
    const int slots = resolved_workers(workers);

    std::vector<std::vector<Instance>> failures(slots);
    const auto started = std::chrono::steady_clock::now();

    run_partitioned(total, slots, [&](std::uint64_t begin, std::uint64_t end, std::size_t slot) {
        for (std::uint64_t index = begin; index < end; ++index) {
            std::vector<VertexSet> family = conjecture_family(pool, s, index);
            if (!brute_force_rainbow(pool.context, family, s)) {
                failures[slot].push_back(Instance{pool.context, std::move(family)});
            }
        }
    });

    ScanReport report;
    report.cycle_order = t;
    report.set_size = s;
    report.families = total;
    for (auto& slot_failures : failures) {
        for (auto& failure : slot_failures) report.failures.push_back(std::move(failure));
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

}  // namespace rainbow
