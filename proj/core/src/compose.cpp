#include "mdweave/compose.hpp"

#include <algorithm>

#include "mdweave/errors.hpp"

namespace mdweave {

namespace {

bool bind_guard(const TypedObject& o1, const TypedObject& o2, const Model& m1,
                const Model& m2) {
    return m1.is_hook(o1) && m2.is_prototype(o2) && o1.cls == o2.cls;
}

bool label_occurs(const Model& m, const ObjectLabel& o) {
    return std::any_of(m.vertices().begin(), m.vertices().end(),
                       [&](const TypedObject& v) { return v.object == o; });
}

void erase_element(std::vector<TypedObject>& xs, const TypedObject& v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it != xs.end() && *it == v) xs.erase(it);
}

// Roles must stay disjoint in the result; a rename can drive a hook onto a
// prototype, in which case the prototype role wins.
void drop_prototype_overlap(std::vector<TypedObject>& hooks,
                            const std::vector<TypedObject>& prototypes) {
    hooks.erase(std::remove_if(hooks.begin(), hooks.end(),
                               [&](const TypedObject& h) {
                                   return std::binary_search(
                                       prototypes.begin(), prototypes.end(), h);
                               }),
                hooks.end());
}

std::string describe(const TypedObject& v) {
    return "<" + v.object.text() + ":" + v.cls.text() + ">";
}

} // namespace

std::string theorem_name(TheoremId t) {
    switch (t) {
    case TheoremId::ValidBind: return "ValidBind";
    case TheoremId::SubClass: return "SubClass";
    case TheoremId::IsAbstract: return "IsAbstract";
    case TheoremId::Lower: return "Lower";
    case TheoremId::Upper: return "Upper";
    case TheoremId::IsOpposite: return "IsOpposite";
    case TheoremId::AreComposite: return "AreComposite";
    }
    return "?";
}

Model bind(const TypedObject& o1, const TypedObject& o2, const Model& m1,
           const Model& m2) {
    if (!bind_guard(o1, o2, m1, m2)) {
        return m1;
    }
    RenameMap rm{o1.object, o2.object};

    std::vector<TypedObject> hooks;
    hooks.reserve(m1.hooks().size());
    for (const TypedObject& h : m1.hooks()) hooks.push_back(rm.apply(h));
    normalize_set(hooks);
    erase_element(hooks, rm.apply(o1));

    std::vector<TypedObject> prototypes;
    prototypes.reserve(m1.prototypes().size());
    for (const TypedObject& p : m1.prototypes()) {
        prototypes.push_back(rm.apply(p));
    }
    normalize_set(prototypes);
    drop_prototype_overlap(hooks, prototypes);

    return make_model(rename_vertices(m1, rm), rename_edges(m1, rm),
                      std::move(hooks), std::move(prototypes));
}

Model naive_bind(const TypedObject& o1, const TypedObject& o2, const Model& m1,
                 const Model& m2) {
    if (!bind_guard(o1, o2, m1, m2)) {
        return m1;
    }

    std::vector<TypedObject> vertices;
    vertices.reserve(m1.vertices().size());
    for (const TypedObject& v : m1.vertices()) {
        vertices.push_back(v == o1 ? o2 : v);
    }
    std::vector<ReferenceEdge> edges;
    edges.reserve(m1.edges().size());
    for (const ReferenceEdge& e : m1.edges()) {
        edges.push_back(ReferenceEdge{e.source == o1 ? o2 : e.source, e.label,
                                      e.target == o1 ? o2 : e.target});
    }

    std::vector<TypedObject> hooks = m1.hooks();
    erase_element(hooks, o1);
    std::vector<TypedObject> prototypes = m1.prototypes();
    normalize_set(prototypes);
    drop_prototype_overlap(hooks, prototypes);

    return make_model(std::move(vertices), std::move(edges), std::move(hooks),
                      std::move(prototypes));
}

PreconditionReport check_bind_preconditions(const TypedObject& o1,
                                            const TypedObject& o2,
                                            const Model& m1, const Model& m2) {
    PreconditionReport report;
    report.guard_ok = bind_guard(o1, o2, m1, m2);
    report.prototype_fresh = !label_occurs(m1, o2.object);
    // o1 -> o2 is injective on m1's labels iff o2's label is fresh or the
    // map is the identity.
    report.injective = report.prototype_fresh || o1.object == o2.object;
    return report;
}

Model bind_many(const Model& m1, const Model& m2,
                const std::vector<BindPair>& pairs) {
    Model acc = m1;
    for (const BindPair& p : pairs) {
        acc = bind(p.first, p.second, acc, m2);
    }
    return acc;
}

PreconditionReport check_bind_many_preconditions(
    const Model& m1, const Model& m2, const std::vector<BindPair>& pairs) {
    PreconditionReport combined;
    combined.guard_ok = true;
    combined.prototype_fresh = true;
    combined.injective = true;

    Model acc = m1;
    for (const BindPair& p : pairs) {
        PreconditionReport step =
            check_bind_preconditions(p.first, p.second, acc, m2);
        combined.guard_ok = combined.guard_ok && step.guard_ok;
        combined.prototype_fresh =
            combined.prototype_fresh && step.prototype_fresh;
        combined.injective = combined.injective && step.injective;
        acc = bind(p.first, p.second, acc, m2);
    }

    std::vector<TypedObject> protos;
    protos.reserve(pairs.size());
    for (const BindPair& p : pairs) protos.push_back(p.second);
    std::sort(protos.begin(), protos.end());
    combined.prototypes_distinct =
        std::adjacent_find(protos.begin(), protos.end()) == protos.end();
    // A repeated prototype makes the combined rename non-injective.
    combined.injective = combined.injective && combined.prototypes_distinct;
    return combined;
}

Model extend_disjoint(const Model& m1, const Model& m2) {
    for (const TypedObject& v : m1.vertices()) {
        if (m2.has_vertex(v)) {
            throw NotDisjoint("models share vertex " + describe(v));
        }
    }
    return extend_overlapping(m1, m2);
}

Model extend_overlapping(const Model& m1, const Model& m2) {
    auto merged = [](const std::vector<TypedObject>& a,
                     const std::vector<TypedObject>& b) {
        std::vector<TypedObject> out = a;
        out.insert(out.end(), b.begin(), b.end());
        normalize_set(out);
        return out;
    };

    std::vector<ReferenceEdge> edges = m1.edges();
    edges.insert(edges.end(), m2.edges().begin(), m2.edges().end());
    normalize_set(edges);

    std::vector<TypedObject> hooks = merged(m1.hooks(), m2.hooks());
    std::vector<TypedObject> prototypes =
        merged(m1.prototypes(), m2.prototypes());
    drop_prototype_overlap(hooks, prototypes);

    return make_model(merged(m1.vertices(), m2.vertices()), std::move(edges),
                      std::move(hooks), std::move(prototypes));
}

} // namespace mdweave
