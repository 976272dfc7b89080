#include "rainbow/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/transform.hpp"

namespace rainbow {

const char* to_string(VerifyFailure failure) {
    switch (failure) {
        case VerifyFailure::none: return "ok";
        case VerifyFailure::size: return "size";
        case VerifyFailure::index: return "index";
        case VerifyFailure::membership: return "membership";
        case VerifyFailure::distinctness: return "distinctness";
        case VerifyFailure::independence: return "independence";
    }
    return "unknown";
}

NormalizedArcs normalize(const CycleContext& context, const std::vector<Arc>& arcs) {
    const int t = context.order();
    const int s = static_cast<int>(arcs.size());

    // 1-based representatives of the arc starts.
    std::vector<int> starts(s);
    for (int i = 0; i < s; ++i) starts[i] = arcs[i].start + 1;

    const int minimum = *std::min_element(starts.begin(), starts.end());
    const int rotation = 1 - minimum;

    std::vector<int> rotated(s);
    for (int i = 0; i < s; ++i) {
        rotated[i] = context.reduce(static_cast<long long>(starts[i]) + rotation - 1) + 1;
    }

    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rotated[a] < rotated[b]; });

    NormalizedArcs norm;
    norm.cycle_order = t;
    norm.rotation = rotation;
    norm.starts.resize(s);
    norm.permutation.resize(s);
    for (int p = 0; p < s; ++p) {
        norm.starts[p] = rotated[order[p]];
        norm.permutation[p] = order[p];
    }
    return norm;
}

std::vector<int> forbidden_residues(const NormalizedArcs& norm) {
    const int t = norm.cycle_order;
    const int s = static_cast<int>(norm.starts.size());
    const CycleContext context(t);

    std::vector<int> residues;
    residues.reserve(2 * s);
    for (int i = 1; i <= s; ++i) {
        const int a = norm.starts[i - 1];
        residues.push_back(context.reduce(static_cast<long long>(a) - 1 - i));
        residues.push_back(context.reduce(static_cast<long long>(a) + s - i));
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    return residues;
}

bool shift_bounds_monotone(const NormalizedArcs& norm, int k) {
    const int s = static_cast<int>(norm.starts.size());
    auto lower = [&](int i) { return norm.starts[i - 1] - 1 - i; };
    auto upper = [&](int i) { return norm.starts[i - 1] + s - i; };

    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= i; ++j) {
            if (k > lower(i) && !(k > lower(j))) return false;
            if (k > upper(i) && !(k > upper(j))) return false;
        }
        for (int j = i; j <= s; ++j) {
            if (k < lower(i) && !(k < lower(j))) return false;
            if (k < upper(i) && !(k < upper(j))) return false;
        }
    }
    return true;
}

ShiftChoice choose_k(const NormalizedArcs& norm) {
    const int t = norm.cycle_order;
    const int s = static_cast<int>(norm.starts.size());

    std::vector<bool> forbidden(t, false);
    for (int residue : forbidden_residues(norm)) forbidden[residue] = true;

    int k = -1;
    for (int candidate = 0; candidate <= 2 * s; ++candidate) {
        if (!forbidden[candidate]) {
            k = candidate;
            break;
        }
    }
    if (k < 0) {
        throw Error(ErrorCode::NoValidK, "all 2s+1 shifts forbidden; pigeonhole violated");
    }
    // a_1 + s - 1 = s is forbidden for i = 1, so equality cannot happen.
    if (k == norm.starts[0] + s - 1) {
        throw Error(ErrorCode::NoValidK, "chosen shift equals the case boundary a_1+s-1");
    }
    if (!shift_bounds_monotone(norm, k)) {
        throw Error(ErrorCode::NoValidK, "monotonicity of forbidden bounds violated for chosen k");
    }

    ShiftChoice choice;
    choice.k = k;
    choice.case_tag = k < norm.starts[0] + s - 1 ? CaseTag::case1 : CaseTag::case2;

    choice.r = 0;
    for (int i = 1; i <= s; ++i) {
        const int bound = choice.case_tag == CaseTag::case1 ? norm.starts[i - 1] - 1 - i
                                                            : norm.starts[i - 1] + s - i;
        if (k > bound) choice.r = i;
    }
    if (choice.r < 1) {
        throw Error(ErrorCode::NoValidK, "no position satisfies the r-threshold; r >= 1 must hold");
    }
    return choice;
}

WindowAssignment construct_assignment(const NormalizedArcs& norm, const ShiftChoice& choice) {
    const int t = norm.cycle_order;
    const int s = static_cast<int>(norm.starts.size());
    const CycleContext context(t);
    const int k = choice.k;
    const int r = choice.r;

    auto label = [&](long long value) { return context.reduce(value - 1) + 1; };

    WindowAssignment window;
    window.vertex_for_position.resize(s);
    if (choice.case_tag == CaseTag::case1) {
        for (int i = 1; i <= r; ++i) window.vertex_for_position[i - 1] = label(k + i);
        for (int i = r + 1; i <= s; ++i) window.vertex_for_position[i - 1] = label(k + i - s);
        window.window_start = label(k + r + 1 - s);
    } else {
        for (int i = r + 1; i <= s; ++i) window.vertex_for_position[i - 1] = label(k + i);
        for (int i = 1; i <= r; ++i) window.vertex_for_position[i - 1] = label(k + s + i);
        window.window_start = label(k + r + 1);
    }

    // Each assigned vertex must land in its arc V_i = {a_i, ..., a_i+s-1}.
    for (int i = 1; i <= s; ++i) {
        const int offset = context.reduce(
            static_cast<long long>(window.vertex_for_position[i - 1]) - norm.starts[i - 1]);
        if (offset >= s) {
            throw Error(ErrorCode::AssignmentOutOfArc,
                        "constructed vertex falls outside arc " + std::to_string(i));
        }
    }

    // The union must be exactly the s consecutive labels from window_start.
    std::vector<int> sorted = window.vertex_for_position;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(s);
    for (int i = 0; i < s; ++i) {
        expected[i] = context.reduce(static_cast<long long>(window.window_start) - 1 + i) + 1;
    }
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) {
        throw Error(ErrorCode::AssignmentOutOfArc, "constructed vertices do not form one arc");
    }
    return window;
}

RainbowCertificate solve(const Instance& instance) {
    const int t = instance.context.order();
    const int s = static_cast<int>(instance.family.size());

    if (s == 0) {
        throw Error(ErrorCode::WrongSize, "family is empty");
    }
    if (t != 2 * s + 1) {
        throw Error(ErrorCode::WrongCycleOrder,
                    "need t = 2s+1 for a family of " + std::to_string(s) + " sets, got t = " +
                        std::to_string(t));
    }
    for (int i = 0; i < s; ++i) {
        if (instance.family[i].size() != s) {
            throw Error(ErrorCode::WrongSize,
                        "set " + std::to_string(i + 1) + " has size " +
                            std::to_string(instance.family[i].size()) + ", expected " +
                            std::to_string(s),
                        i);
        }
        if (!instance.family[i].is_independent()) {
            throw Error(ErrorCode::NotIndependent,
                        "set " + std::to_string(i + 1) + " contains a cycle edge", i);
        }
    }

    std::vector<Arc> arcs;
    arcs.reserve(s);
    for (const auto& member_set : instance.family) {
        arcs.push_back(independent_set_to_arc(member_set));
    }

    const NormalizedArcs norm = normalize(instance.context, arcs);
    const ShiftChoice choice = choose_k(norm);
    const WindowAssignment window = construct_assignment(norm, choice);

    const DoublingMap map(instance.context);
    RainbowCertificate certificate;
    certificate.assignment.resize(s);
    for (int p = 0; p < s; ++p) {
        // Back from normalized arc coordinates to original ones, then through
        // the doubling map into independent-set coordinates.
        const int unrotated = instance.context.reduce(
            static_cast<long long>(window.vertex_for_position[p]) - 1 - norm.rotation);
        certificate.assignment[norm.permutation[p]] = map.apply(unrotated);
    }

    certificate.trace.rotation = norm.rotation;
    certificate.trace.permutation = norm.permutation;
    certificate.trace.k = choice.k;
    certificate.trace.case_tag = choice.case_tag;
    certificate.trace.r = choice.r;
    certificate.trace.window_start = window.window_start;
    return certificate;
}

VerifyFailure check_assignment(const Instance& instance,
                               const std::vector<std::pair<int, int>>& assignment) {
    const int t = instance.context.order();
    const int s = static_cast<int>(instance.family.size());

    if (static_cast<int>(assignment.size()) != s) return VerifyFailure::size;

    std::vector<bool> index_seen(s, false);
    for (const auto& [index, vertex] : assignment) {
        if (index < 0 || index >= s || index_seen[index]) return VerifyFailure::index;
        index_seen[index] = true;
        if (vertex < 0 || vertex >= t) return VerifyFailure::membership;
        if (!instance.family[index].contains(vertex)) return VerifyFailure::membership;
    }

    std::vector<int> vertices;
    vertices.reserve(assignment.size());
    for (const auto& [index, vertex] : assignment) vertices.push_back(vertex);
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        return VerifyFailure::distinctness;
    }

    if (!VertexSet(instance.context, std::move(vertices)).is_independent()) {
        return VerifyFailure::independence;
    }
    return VerifyFailure::none;
}

bool verify_certificate(const Instance& instance, const RainbowCertificate& certificate) {
    std::vector<std::pair<int, int>> assignment;
    assignment.reserve(certificate.assignment.size());
    for (int i = 0; i < static_cast<int>(certificate.assignment.size()); ++i) {
        assignment.emplace_back(i, certificate.assignment[i]);
    }
    return check_assignment(instance, assignment) == VerifyFailure::none;
}

}  // namespace rainbow
