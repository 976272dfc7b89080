#include "rainbow/transform.hpp"

namespace rainbow {

DoublingMap::DoublingMap(CycleContext context) : context_(context), half_((context.order() + 1) / 2) {
    if (context_.order() % 2 == 0) {
        throw Error(ErrorCode::InvalidParameters, "doubling map requires an odd cycle order");
    }
}

int DoublingMap::apply(int vertex) const {
    return context_.reduce(2LL * vertex);
}

int DoublingMap::invert(int vertex) const {
    return context_.reduce(static_cast<long long>(half_) * vertex);
}

Arc independent_set_to_arc(const VertexSet& set) {
    const DoublingMap map(set.context());
    const int s = (set.context().order() - 1) / 2;
    if (set.size() != s) {
        throw Error(ErrorCode::WrongSize, "expected an s-set with t = 2s+1");
    }
    if (!set.is_independent()) {
        throw Error(ErrorCode::NotIndependent, "set contains a cycle edge");
    }

    std::vector<int> preimage;
    preimage.reserve(set.members().size());
    for (int v : set.members()) preimage.push_back(map.invert(v));

    auto arc = arc_covering(VertexSet(set.context(), std::move(preimage)));
    if (!arc) {
        throw Error(ErrorCode::NotAnArc, "doubling-map preimage is not consecutive");
    }
    return *arc;
}

VertexSet arc_to_independent_set(const CycleContext& context, Arc arc) {
    const DoublingMap map(context);
    const VertexSet arc_set = arc_members(context, arc);
    std::vector<int> image;
    image.reserve(arc.length);
    for (int v : arc_set.members()) image.push_back(map.apply(v));
    return VertexSet(context, std::move(image));
}

}  // namespace rainbow
