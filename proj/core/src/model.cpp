#include "mdweave/model.hpp"

#include <algorithm>

#include "mdweave/errors.hpp"

namespace mdweave {

namespace {

bool sorted_contains(const std::vector<TypedObject>& xs, const TypedObject& v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

std::string describe(const TypedObject& v) {
    return "<" + v.object.text() + ":" + v.cls.text() + ">";
}

} // namespace

bool Model::has_vertex(const TypedObject& v) const {
    return sorted_contains(vertices_, v);
}

bool Model::has_edge(const ReferenceEdge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Model::is_hook(const TypedObject& v) const {
    return sorted_contains(hooks_, v);
}

bool Model::is_prototype(const TypedObject& v) const {
    return sorted_contains(prototypes_, v);
}

Model make_model(std::vector<TypedObject> vertices,
                 std::vector<ReferenceEdge> edges,
                 std::vector<TypedObject> hooks,
                 std::vector<TypedObject> prototypes) {
    normalize_set(vertices);
    normalize_set(edges);
    normalize_set(hooks);
    normalize_set(prototypes);

    for (const ReferenceEdge& e : edges) {
        if (!std::binary_search(vertices.begin(), vertices.end(), e.source)) {
            throw DanglingEdge("edge source " + describe(e.source) +
                               " is not a vertex");
        }
        if (!std::binary_search(vertices.begin(), vertices.end(), e.target)) {
            throw DanglingEdge("edge target " + describe(e.target) +
                               " is not a vertex");
        }
    }
    for (const TypedObject& h : hooks) {
        if (!std::binary_search(vertices.begin(), vertices.end(), h)) {
            throw RoleNotVertex("hook " + describe(h) + " is not a vertex");
        }
    }
    for (const TypedObject& p : prototypes) {
        if (!std::binary_search(vertices.begin(), vertices.end(), p)) {
            throw RoleNotVertex("prototype " + describe(p) +
                                " is not a vertex");
        }
        if (std::binary_search(hooks.begin(), hooks.end(), p)) {
            throw RoleConflict("element " + describe(p) +
                               " is both hook and prototype");
        }
    }

    Model m;
    m.vertices_ = std::move(vertices);
    m.edges_ = std::move(edges);
    m.hooks_ = std::move(hooks);
    m.prototypes_ = std::move(prototypes);
    return m;
}

} // namespace mdweave
