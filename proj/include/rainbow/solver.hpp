#ifndef RAINBOW_SOLVER_HPP
#define RAINBOW_SOLVER_HPP

#include <utility>
#include <vector>

#include "rainbow/cycle.hpp"

namespace rainbow {

// An ordered family of independent sets in one cycle. The constructive
// solver additionally requires t = 2s+1 where s is the family length;
// `solve` validates that on entry.
struct Instance {
    CycleContext context;
    std::vector<VertexSet> family;
};

// Arc starts brought into the proof's canonical form: 1-based values
// a_1..a_s with a_1 = 1 and a_1 <= a_2 <= ... <= a_s. These are plain
// integers, not residues -- every comparison downstream is an integer
// comparison, so the values must stay unreduced.
struct NormalizedArcs {
    std::vector<int> starts;
    int rotation = 0;              // rho <= 0; arc coords were shifted v -> v + rho
    std::vector<int> permutation;  // permutation[p] = original family index at position p
    int cycle_order = 0;
};

enum class CaseTag { case1 = 1, case2 = 2 };

// The pigeonhole selection: k in {0,...,2s} avoiding a_i-1-i and a_i+s-i
// mod 2s+1 for every i, tagged with the case split against a_1+s-1 = s and
// the per-case threshold index r.
struct ShiftChoice {
    int k = 0;
    CaseTag case_tag = CaseTag::case1;
    int r = 0;
};

// One vertex per normalized position, forming s consecutive vertices.
// Values are 1-based labels in normalized arc coordinates.
struct WindowAssignment {
    std::vector<int> vertex_for_position;
    int window_start = 0;
};

struct SolveTrace {
    int rotation = 0;
    std::vector<int> permutation;
    int k = 0;
    CaseTag case_tag = CaseTag::case1;
    int r = 0;
    int window_start = 0;
};

// assignment[i] is the 0-based vertex chosen from family[i].
struct RainbowCertificate {
    std::vector<int> assignment;
    SolveTrace trace;
};

NormalizedArcs normalize(const CycleContext& context, const std::vector<Arc>& arcs);

// Sorted distinct forbidden residues {a_i-1-i mod 2s+1} u {a_i+s-i mod 2s+1};
// at most 2s of them, which is what makes choose_k total.
std::vector<int> forbidden_residues(const NormalizedArcs& norm);

// Smallest valid k plus case tag and r. Throws NoValidK only on an
// implementation bug (pigeonhole guarantees a survivor).
ShiftChoice choose_k(const NormalizedArcs& norm);

// The four monotonicity implications for k against a_i-1-i and a_i+s-i,
// as integer comparisons on the normalized starts.
bool shift_bounds_monotone(const NormalizedArcs& norm, int k);

// Case 1 places k+i (i <= r) and k+i-s (i > r); Case 2 places k+i (i > r)
// and k+s+i (i <= r). Each value lands inside arc V_i and the union is one
// run of s consecutive vertices; violations throw AssignmentOutOfArc.
WindowAssignment construct_assignment(const NormalizedArcs& norm, const ShiftChoice& choice);

// Full pipeline: family -> arcs -> normalize -> choose_k -> window ->
// undo rotation/permutation -> doubling map. Never fails on a valid
// instance. Deterministic: smallest k, stable sort.
RainbowCertificate solve(const Instance& instance);

enum class VerifyFailure {
    none,
    size,
    index,
    membership,
    distinctness,
    independence,
};

const char* to_string(VerifyFailure failure);

// Re-derives certificate validity from scratch; the trace is ignored.
// `assignment` pairs are (0-based family index, 0-based vertex), which may
// be arbitrary integers -- out-of-range values yield a failure code, never
// an exception.
VerifyFailure check_assignment(const Instance& instance,
                               const std::vector<std::pair<int, int>>& assignment);

bool verify_certificate(const Instance& instance, const RainbowCertificate& certificate);

}  // namespace rainbow

#endif
