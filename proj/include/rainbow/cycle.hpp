#ifndef RAINBOW_CYCLE_HPP
#define RAINBOW_CYCLE_HPP

#include <optional>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

// The ambient cycle C_t. Vertices are residues 0..t-1 internally; every
// file and CLI format is 1-based, and the shift lives only in the I/O layer.
class CycleContext {
public:
    explicit CycleContext(int order);

    int order() const { return order_; }

    // Canonical residue in [0, t), correct for negative inputs.
    int reduce(long long value) const;

    // Cycle edges join cyclic successors: u ~ v iff u - v = +-1 (mod t).
    bool adjacent(int u, int v) const;

    bool operator==(const CycleContext& other) const = default;

private:
    int order_;
};

// Sorted duplicate-free subset of V(C_t).
class VertexSet {
public:
    VertexSet(CycleContext context, std::vector<int> members);

    const CycleContext& context() const { return context_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int vertex) const;

    // True iff no two members are cyclically adjacent.
    bool is_independent() const;

    bool operator==(const VertexSet& other) const = default;

private:
    CycleContext context_;
    std::vector<int> members_;  // sorted ascending
};

// The consecutive run {start, start+1, ..., start+length-1} mod t.
// A full-cycle arc (length == t) is disallowed.
struct Arc {
    int start = 0;   // 0-based residue
    int length = 0;  // 1 <= length < t

    bool operator==(const Arc& other) const = default;
};

VertexSet arc_members(const CycleContext& context, Arc arc);

// The unique arc whose member set equals `set`, or nullopt when the members
// are not consecutive. Works for any 1 <= |set| < t.
std::optional<Arc> arc_covering(const VertexSet& set);

}  // namespace rainbow

#endif
