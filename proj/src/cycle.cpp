#include "rainbow/cycle.hpp"

#include <algorithm>

namespace rainbow {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::WrongSize: return "WrongSize";
        case ErrorCode::NotIndependent: return "NotIndependent";
        case ErrorCode::WrongCycleOrder: return "WrongCycleOrder";
        case ErrorCode::NotAnArc: return "NotAnArc";
        case ErrorCode::NoValidK: return "NoValidK";
        case ErrorCode::AssignmentOutOfArc: return "AssignmentOutOfArc";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

CycleContext::CycleContext(int order) : order_(order) {
    if (order < 3) {
        throw Error(ErrorCode::InvalidParameters, "cycle order must be at least 3");
    }
}

int CycleContext::reduce(long long value) const {
    long long r = value % order_;
    if (r < 0) r += order_;
    return static_cast<int>(r);
}

bool CycleContext::adjacent(int u, int v) const {
    int d = reduce(static_cast<long long>(u) - v);
    return d == 1 || d == order_ - 1;
}

VertexSet::VertexSet(CycleContext context, std::vector<int> members)
    : context_(context), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0 || members_[i] >= context_.order()) {
            throw Error(ErrorCode::InvalidParameters, "vertex out of range");
        }
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw Error(ErrorCode::InvalidParameters, "duplicate vertex in set");
        }
    }
}

bool VertexSet::contains(int vertex) const {
    return std::binary_search(members_.begin(), members_.end(), vertex);
}

bool VertexSet::is_independent() const {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (std::size_t j = i + 1; j < members_.size(); ++j) {
            if (context_.adjacent(members_[i], members_[j])) return false;
        }
    }
    return true;
}

VertexSet arc_members(const CycleContext& context, Arc arc) {
    if (arc.length < 1 || arc.length >= context.order()) {
        throw Error(ErrorCode::InvalidParameters, "arc length must be in [1, t-1]");
    }
    if (arc.start < 0 || arc.start >= context.order()) {
        throw Error(ErrorCode::InvalidParameters, "arc start out of range");
    }
    std::vector<int> members(arc.length);
    for (int i = 0; i < arc.length; ++i) {
        members[i] = context.reduce(static_cast<long long>(arc.start) + i);
    }
    return VertexSet(context, std::move(members));
}

std::optional<Arc> arc_covering(const VertexSet& set) {
    const auto& ctx = set.context();
    const auto& members = set.members();
    if (members.empty() || set.size() >= ctx.order()) return std::nullopt;

    // The members split into maximal consecutive blocks; each block start is
    // a member whose cyclic predecessor is absent. Exactly one block <=> arc.
    int start = -1;
    int block_starts = 0;
    for (int v : members) {
        if (!set.contains(ctx.reduce(static_cast<long long>(v) - 1))) {
            ++block_starts;
            start = v;
        }
    }
    if (block_starts != 1) return std::nullopt;
    return Arc{start, set.size()};
}

}  // namespace rainbow
