#ifndef mdweave_rename_hpp
#define mdweave_rename_hpp

#include <vector>

#include "mdweave/model.hpp"

namespace mdweave {

// The total function on object labels sending `from` to `to` and fixing
// everything else.
struct RenameMap {
    ObjectLabel from;
    ObjectLabel to;

    const ObjectLabel& apply(const ObjectLabel& x) const {
        return x == from ? to : x;
    }

    TypedObject apply(const TypedObject& v) const {
        return TypedObject{apply(v.object), v.cls};
    }

    ReferenceEdge apply(const ReferenceEdge& e) const {
        return ReferenceEdge{apply(e.source), e.label, apply(e.target)};
    }
};

// Image of the vertex set under the rename. Classes never change; vertices
// whose images coincide collapse (set semantics).
std::vector<TypedObject> rename_vertices(const Model& m, const RenameMap& rm);

// Image of the edge set; reference labels and classes never change.
std::vector<ReferenceEdge> rename_edges(const Model& m, const RenameMap& rm);

} // namespace mdweave

#endif
