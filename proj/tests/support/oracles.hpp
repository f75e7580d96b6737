#ifndef tests_support_oracles_hpp
#define tests_support_oracles_hpp

// Independent brute-force implementations of the six semantic predicates,
// written as literal double loops over MV x ME with no shared helpers, used
// to cross-check the library's optimized versions.

#include <set>

#include "mdweave/conformance.hpp"
#include "mdweave/model.hpp"

namespace oracles {

using namespace mdweave;

inline bool instance_of(const Model& m, const MetaModel& mm) {
    for (const TypedObject& v : m.vertices()) {
        bool found = false;
        for (const ClassLabel& c : mm.classes()) {
            if (v.cls == c) found = true;
        }
        if (!found) return false;
    }
    for (const ReferenceEdge& e : m.edges()) {
        bool found = false;
        for (const ClassReference& r : mm.references()) {
            if (r.source == e.source.cls && r.label == e.label &&
                r.target == e.target.cls) {
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

inline bool sub_class(const ClassLabel& c1, const ClassLabel& c2,
                      const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (!(v.cls == c2)) continue;
        bool has_inh = false;
        for (const ReferenceEdge& e : m.edges()) {
            if (e.source == v && e.label == inh_label() &&
                e.target.object == v.object && e.target.cls == c1) {
                has_inh = true;
            }
        }
        if (!has_inh) return false;
    }
    return true;
}

inline bool is_abstract(const ClassLabel& c, const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (!(v.cls == c)) continue;
        bool reached = false;
        for (const ReferenceEdge& e : m.edges()) {
            if (e.label == inh_label() && e.target == v &&
                e.source.object == v.object) {
                reached = true;
            }
        }
        if (!reached) return false;
    }
    return true;
}

inline bool lower(const ClassLabel& c, const ReferenceLabel& r, ExtendedNat n,
                  const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (!(v.cls == c)) continue;
        std::set<TypedObject> targets;
        for (const ReferenceEdge& e : m.edges()) {
            if (e.source == v && e.label == r) targets.insert(e.target);
        }
        if (n.is_top()) return false; // a finite count is never >= Top
        if (targets.size() < n.value()) return false;
    }
    return true;
}

inline bool upper(const ClassLabel& c, const ReferenceLabel& r, ExtendedNat n,
                  const Model& m) {
    if (n.is_top()) return true;
    for (const TypedObject& v : m.vertices()) {
        if (!(v.cls == c)) continue;
        std::set<TypedObject> targets;
        for (const ReferenceEdge& e : m.edges()) {
            if (e.source == v && e.label == r) targets.insert(e.target);
        }
        if (targets.size() > n.value()) return false;
    }
    return true;
}

inline bool is_opposite(const ReferenceLabel& r1, const ReferenceLabel& r2,
                        const Model& m) {
    for (const TypedObject& a : m.vertices()) {
        for (const TypedObject& b : m.vertices()) {
            bool fwd = false, bwd = false;
            for (const ReferenceEdge& e : m.edges()) {
                if (e.source == a && e.label == r1 && e.target == b) fwd = true;
                if (e.source == b && e.label == r2 && e.target == a) bwd = true;
            }
            if (fwd != bwd) return false;
        }
    }
    return true;
}

inline bool are_composite(const ClassLabel& c,
                          const std::vector<ReferenceLabel>& rs,
                          const Model& m) {
    for (const TypedObject& v : m.vertices()) {
        if (!(v.cls == c)) continue;
        std::set<TypedObject> owners;
        for (const ReferenceEdge& e : m.edges()) {
            if (!(e.target == v)) continue;
            for (const ReferenceLabel& r : rs) {
                if (e.label == r) owners.insert(e.source);
            }
        }
        if (owners.size() > 1) return false;
    }
    return true;
}

inline bool check_constraint(const SemanticConstraint& k, const Model& m) {
    struct Eval {
        const Model& m;
        bool operator()(const SubClassConstraint& c) const {
            return oracles::sub_class(c.parent, c.child, m);
        }
        bool operator()(const IsAbstractConstraint& c) const {
            return oracles::is_abstract(c.cls, m);
        }
        bool operator()(const LowerConstraint& c) const {
            return oracles::lower(c.cls, c.reference, c.bound, m);
        }
        bool operator()(const UpperConstraint& c) const {
            return oracles::upper(c.cls, c.reference, c.bound, m);
        }
        bool operator()(const IsOppositeConstraint& c) const {
            return oracles::is_opposite(c.forward, c.backward, m);
        }
        bool operator()(const AreCompositeConstraint& c) const {
            return oracles::are_composite(c.cls, c.references, m);
        }
    };
    return std::visit(Eval{m}, k);
}

} // namespace oracles

#endif
