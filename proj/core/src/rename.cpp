#include "mdweave/rename.hpp"

namespace mdweave {

std::vector<TypedObject> rename_vertices(const Model& m, const RenameMap& rm) {
    std::vector<TypedObject> out;
    out.reserve(m.vertices().size());
    for (const TypedObject& v : m.vertices()) {
        out.push_back(rm.apply(v));
    }
    normalize_set(out);
    return out;
}

std::vector<ReferenceEdge> rename_edges(const Model& m, const RenameMap& rm) {
    std::vector<ReferenceEdge> out;
    out.reserve(m.edges().size());
    for (const ReferenceEdge& e : m.edges()) {
        out.push_back(rm.apply(e));
    }
    normalize_set(out);
    return out;
}

} // namespace mdweave
