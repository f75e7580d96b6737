#ifndef mdweave_compose_hpp
#define mdweave_compose_hpp

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mdweave/model.hpp"
#include "mdweave/rename.hpp"

namespace mdweave {

// The preservation theorems checked by the harness and reported on by the
// precondition analyzer.
enum class TheoremId {
    ValidBind,
    SubClass,
    IsAbstract,
    Lower,
    Upper,
    IsOpposite,
    AreComposite,
};

inline constexpr std::array<TheoremId, 7> kAllTheorems = {
    TheoremId::ValidBind,  TheoremId::SubClass, TheoremId::IsAbstract,
    TheoremId::Lower,      TheoremId::Upper,    TheoremId::IsOpposite,
    TheoremId::AreComposite,
};

std::string theorem_name(TheoremId t);

// Multiplicity-style theorems need prototype freshness and injectivity; the
// others hold under the bare guard.
constexpr bool freshness_applies(TheoremId t) {
    return t == TheoremId::Lower || t == TheoremId::Upper ||
           t == TheoremId::AreComposite;
}

// Which preservation preconditions hold for a proposed bind: the residual
// verification that remains when composing checked models.
struct PreconditionReport {
    // hook role, prototype role and type equality
    bool guard_ok = false;
    // no vertex of m1 carries the prototype's object label
    bool prototype_fresh = false;
    // the single-pair rename is injective on m1's occurring labels
    bool injective = false;
    // distinct prototypes across a multi-point bind (always true for one pair)
    bool prototypes_distinct = true;

    bool holds_for(TheoremId t) const {
        if (freshness_applies(t)) {
            return guard_ok && prototype_fresh && injective &&
                   prototypes_distinct;
        }
        return guard_ok;
    }
};

/*
 * The corrected bind: renames every vertex of m1 sharing the hook's object
 * label to the prototype's label, keeping every class and reference label.
 * m2 is consulted only for the prototype-role and type guard; if the guard
 * fails (o1 not a hook of m1, o2 not a prototype of m2, or differing
 * classes), m1 is returned unchanged. The bound hook is consumed: it leaves
 * the result's hook set.
 */
Model bind(const TypedObject& o1, const TypedObject& o2, const Model& m1,
           const Model& m2);

// The pre-correction semantics, kept to demonstrate the inheritance-encoding
// breakage: replaces the single vertex o1 by o2 and rewrites only the edges
// incident to exactly that vertex. Same guard and fallback as bind.
Model naive_bind(const TypedObject& o1, const TypedObject& o2, const Model& m1,
                 const Model& m2);

PreconditionReport check_bind_preconditions(const TypedObject& o1,
                                            const TypedObject& o2,
                                            const Model& m1, const Model& m2);

using BindPair = std::pair<TypedObject, TypedObject>;

// Left fold of bind over the pair list, each step against the accumulated
// model.
Model bind_many(const Model& m1, const Model& m2,
                const std::vector<BindPair>& pairs);

// Conjunction of the stepwise single-bind reports, evaluated against the
// intermediate model at each fold step, plus the distinct-prototypes check.
PreconditionReport check_bind_many_preconditions(
    const Model& m1, const Model& m2, const std::vector<BindPair>& pairs);

// Component-wise union of two models with disjoint vertex sets. Throws
// NotDisjoint naming a shared vertex.
Model extend_disjoint(const Model& m1, const Model& m2);

// Component-wise union; shared vertices and edges appear once.
Model extend_overlapping(const Model& m1, const Model& m2);

} // namespace mdweave

#endif
