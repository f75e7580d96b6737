#ifndef mdweave_model_hpp
#define mdweave_model_hpp

#include <algorithm>
#include <compare>
#include <vector>

#include "mdweave/labels.hpp"

namespace mdweave {

// A vertex: an object label paired with the class it instantiates. One object
// label may appear with several classes; that reuse encodes inheritance.
struct TypedObject {
    ObjectLabel object;
    ClassLabel cls;

    auto operator<=>(const TypedObject&) const = default;
};

struct ReferenceEdge {
    TypedObject source;
    ReferenceLabel label;
    TypedObject target;

    auto operator<=>(const ReferenceEdge&) const = default;
};

/*
 * A finite typed multigraph: vertices MV, reference edges ME, plus the
 * hook/prototype role sets used by the composition operators. Immutable after
 * construction; build through make_model, which enforces:
 *   - every edge endpoint is a vertex
 *   - hooks and prototypes are vertices and are disjoint
 * All four components are kept sorted and duplicate-free, so structural
 * equality is plain equality.
 */
class Model {
public:
    Model() = default;

    const std::vector<TypedObject>& vertices() const { return vertices_; }
    const std::vector<ReferenceEdge>& edges() const { return edges_; }
    const std::vector<TypedObject>& hooks() const { return hooks_; }
    const std::vector<TypedObject>& prototypes() const { return prototypes_; }

    bool has_vertex(const TypedObject& v) const;
    bool has_edge(const ReferenceEdge& e) const;
    bool is_hook(const TypedObject& v) const;
    bool is_prototype(const TypedObject& v) const;

    bool empty() const { return vertices_.empty(); }

    bool operator==(const Model&) const = default;

    friend Model make_model(std::vector<TypedObject> vertices,
                            std::vector<ReferenceEdge> edges,
                            std::vector<TypedObject> hooks,
                            std::vector<TypedObject> prototypes);

private:
    std::vector<TypedObject> vertices_;
    std::vector<ReferenceEdge> edges_;
    std::vector<TypedObject> hooks_;
    std::vector<TypedObject> prototypes_;
};

// Total constructor with validation. Inputs are treated as sets; duplicates
// collapse. Throws DanglingEdge, RoleNotVertex or RoleConflict.
Model make_model(std::vector<TypedObject> vertices,
                 std::vector<ReferenceEdge> edges,
                 std::vector<TypedObject> hooks = {},
                 std::vector<TypedObject> prototypes = {});

// Sort-and-unique helper shared by model construction and the rename ops.
template <typename T>
void normalize_set(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

} // namespace mdweave

#endif
