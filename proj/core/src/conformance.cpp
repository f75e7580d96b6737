#include "mdweave/conformance.hpp"

#include <algorithm>
#include <tuple>

#include "mdweave/errors.hpp"

namespace mdweave {

namespace {

std::string describe(const TypedObject& v) {
    return "<" + v.object.text() + ":" + v.cls.text() + ">";
}

std::string describe(const ReferenceEdge& e) {
    return "<" + describe(e.source) + ", " + e.label.text() + ", " +
           describe(e.target) + ">";
}

// Edges are sorted by (source, label, target), so the r-successors of a
// vertex form one contiguous run.
std::pair<std::vector<ReferenceEdge>::const_iterator,
          std::vector<ReferenceEdge>::const_iterator>
out_edges(const Model& m, const TypedObject& v, const ReferenceLabel& r) {
    const auto& edges = m.edges();
    auto first = std::lower_bound(
        edges.begin(), edges.end(), std::tie(v, r),
        [](const ReferenceEdge& e, const auto& key) {
            return std::tie(e.source, e.label) < key;
        });
    auto last = first;
    while (last != edges.end() && last->source == v && last->label == r) {
        ++last;
    }
    return {first, last};
}

std::uint64_t target_count(const Model& m, const TypedObject& v,
                           const ReferenceLabel& r) {
    auto [first, last] = out_edges(m, v, r);
    // Distinct by construction: edges are a set sharing source and label.
    return static_cast<std::uint64_t>(last - first);
}

// Distinct owners of v through any reference in rs.
std::vector<TypedObject> owners(const Model& m, const TypedObject& v,
                                const std::vector<ReferenceLabel>& rs) {
    std::vector<TypedObject> srcs;
    for (const ReferenceEdge& e : m.edges()) {
        if (e.target != v) continue;
        if (std::find(rs.begin(), rs.end(), e.label) == rs.end()) continue;
        srcs.push_back(e.source);
    }
    normalize_set(srcs);
    return srcs;
}

bool has_incoming_inh(const Model& m, const TypedObject& v) {
    for (const ReferenceEdge& e : m.edges()) {
        if (e.label == inh_label() && e.target == v &&
            e.source.object == v.object) {
            return true;
        }
    }
    return false;
}

} // namespace

bool instance_of(const Model& m, const MetaModel& mm) {
    for (const TypedObject& v : m.vertices()) {
        if (!mm.has_class(v.cls)) return false;
    }
    for (const ReferenceEdge& e : m.edges()) {
        if (!mm.has_reference({e.source.cls, e.label, e.target.cls})) {
            return false;
        }
    }
    return true;
}

bool sub_class(const ClassLabel& c1, const ClassLabel& c2, const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (v.cls != c2) continue;
        ReferenceEdge wanted{v, inh_label(), TypedObject{v.object, c1}};
        if (!m.has_edge(wanted)) return false;
    }
    return true;
}

bool is_abstract(const ClassLabel& c, const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (v.cls != c) continue;
        if (!has_incoming_inh(m, v)) return false;
    }
    return true;
}

bool lower(const ClassLabel& c, const ReferenceLabel& r, ExtendedNat n,
           const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (v.cls != c) continue;
        if (!count_at_least(target_count(m, v, r), n)) return false;
    }
    return true;
}

bool upper(const ClassLabel& c, const ReferenceLabel& r, ExtendedNat n,
           const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (v.cls != c) continue;
        if (!count_at_most(target_count(m, v, r), n)) return false;
    }
    return true;
}

bool is_opposite(const ReferenceLabel& r1, const ReferenceLabel& r2,
                 const Model& m) {
    for (const ReferenceEdge& e : m.edges()) {
        if (e.label == r1 &&
            !m.has_edge(ReferenceEdge{e.target, r2, e.source})) {
            return false;
        }
        if (e.label == r2 &&
            !m.has_edge(ReferenceEdge{e.target, r1, e.source})) {
            return false;
        }
    }
    return true;
}

bool are_composite(const ClassLabel& c, const std::vector<ReferenceLabel>& rs,
                   const Model& m) {
    if (rs.empty()) {
        throw EmptyReferenceSet("areComposite requires a non-empty reference set");
    }
    for (const TypedObject& v : m.vertices()) {
        if (v.cls != c) continue;
        const TypedObject* seen = nullptr;
        for (const ReferenceEdge& e : m.edges()) {
            if (e.target != v) continue;
            if (std::find(rs.begin(), rs.end(), e.label) == rs.end()) continue;
            if (seen == nullptr) {
                seen = &e.source;
            } else if (*seen != e.source) {
                return false;
            }
        }
    }
    return true;
}

bool check_constraint(const SemanticConstraint& k, const Model& m) {
    struct Dispatch {
        const Model& m;
        bool operator()(const SubClassConstraint& k) const {
            return sub_class(k.parent, k.child, m);
        }
        bool operator()(const IsAbstractConstraint& k) const {
            return is_abstract(k.cls, m);
        }
        bool operator()(const LowerConstraint& k) const {
            return lower(k.cls, k.reference, k.bound, m);
        }
        bool operator()(const UpperConstraint& k) const {
            return upper(k.cls, k.reference, k.bound, m);
        }
        bool operator()(const IsOppositeConstraint& k) const {
            return is_opposite(k.forward, k.backward, m);
        }
        bool operator()(const AreCompositeConstraint& k) const {
            return are_composite(k.cls, k.references, m);
        }
    };
    return std::visit(Dispatch{m}, k);
}

namespace {

// First offending element in sorted label order, for diagnostics. Only
// called on constraints that already evaluated false.
struct WitnessFinder {
    const Model& m;

    Witness operator()(const SubClassConstraint& k) const {
        for (const TypedObject& v : m.vertices()) {
            if (v.cls != k.child) continue;
            ReferenceEdge wanted{v, inh_label(), TypedObject{v.object, k.parent}};
            if (!m.has_edge(wanted)) {
                return {"instance " + describe(v) + " lacks inh edge to " +
                        describe(wanted.target)};
            }
        }
        return {"no witness"};
    }

    Witness operator()(const IsAbstractConstraint& k) const {
        for (const TypedObject& v : m.vertices()) {
            if (v.cls == k.cls && !has_incoming_inh(m, v)) {
                return {"direct instance " + describe(v)};
            }
        }
        return {"no witness"};
    }

    Witness operator()(const LowerConstraint& k) const {
        for (const TypedObject& v : m.vertices()) {
            if (v.cls != k.cls) continue;
            auto count = target_count(m, v, k.reference);
            if (!count_at_least(count, k.bound)) {
                return {"instance " + describe(v) + " has " +
                        std::to_string(count) + " " + k.reference.text() +
                        " targets, needs at least " + k.bound.to_string()};
            }
        }
        return {"no witness"};
    }

    Witness operator()(const UpperConstraint& k) const {
        for (const TypedObject& v : m.vertices()) {
            if (v.cls != k.cls) continue;
            auto count = target_count(m, v, k.reference);
            if (!count_at_most(count, k.bound)) {
                return {"instance " + describe(v) + " has " +
                        std::to_string(count) + " " + k.reference.text() +
                        " targets, allows at most " + k.bound.to_string()};
            }
        }
        return {"no witness"};
    }

    Witness operator()(const IsOppositeConstraint& k) const {
        for (const ReferenceEdge& e : m.edges()) {
            if (e.label == k.forward &&
                !m.has_edge(ReferenceEdge{e.target, k.backward, e.source})) {
                return {"edge " + describe(e) + " has no " +
                        k.backward.text() + " opposite"};
            }
            if (e.label == k.backward &&
                !m.has_edge(ReferenceEdge{e.target, k.forward, e.source})) {
                return {"edge " + describe(e) + " has no " +
                        k.forward.text() + " opposite"};
            }
        }
        return {"no witness"};
    }

    Witness operator()(const AreCompositeConstraint& k) const {
        for (const TypedObject& v : m.vertices()) {
            if (v.cls != k.cls) continue;
            auto srcs = owners(m, v, k.references);
            if (srcs.size() > 1) {
                return {"instance " + describe(v) + " has owners " +
                        describe(srcs[0]) + " and " + describe(srcs[1])};
            }
        }
        return {"no witness"};
    }
};

} // namespace

ConformanceReport conforms_to(const Model& m, const MetaModel& mm) {
    ConformanceReport report;
    report.instance_of_ok = instance_of(m, mm);
    for (const SemanticConstraint& k : mm.constraints()) {
        if (!check_constraint(k, m)) {
            report.violations.emplace_back(k, std::visit(WitnessFinder{m}, k));
        }
    }
    report.conforms = report.instance_of_ok && report.violations.empty();
    return report;
}

} // namespace mdweave
