#ifndef RAINBOW_TRANSFORM_HPP
#define RAINBOW_TRANSFORM_HPP

#include "rainbow/cycle.hpp"

namespace rainbow {

// The doubling bijection on Z_t for odd t. In 1-based labels it sends
// j -> 2j-1; on internal 0-based residues that is plain doubling, with
// inverse multiplication by (t+1)/2. It carries arcs of s consecutive
// vertices to independent s-sets of C_{2s+1} and back.
class DoublingMap {
public:
    explicit DoublingMap(CycleContext context);

    const CycleContext& context() const { return context_; }

    int apply(int vertex) const;
    int invert(int vertex) const;

private:
    CycleContext context_;
    int half_;  // multiplicative inverse of 2 mod t
};

// Maps an independent s-set of C_{2s+1} to the unique arc of length s whose
// pointwise image under the doubling map is that set.
//
// Throws WrongSize when |set| != s, NotIndependent when the set contains an
// edge, and NotAnArc when the preimage is not consecutive (impossible for a
// genuine independent s-set; kept as a tripwire).
Arc independent_set_to_arc(const VertexSet& set);

// Inverse direction: pointwise doubling-map image of the arc's members.
// Requires odd t and arc length (t-1)/2; the result is an independent s-set.
VertexSet arc_to_independent_set(const CycleContext& context, Arc arc);

}  // namespace rainbow

#endif
