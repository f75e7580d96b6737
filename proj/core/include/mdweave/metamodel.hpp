#ifndef mdweave_metamodel_hpp
#define mdweave_metamodel_hpp

#include <string>
#include <variant>
#include <vector>

#include "mdweave/extended_nat.hpp"
#include "mdweave/labels.hpp"

namespace mdweave {

struct ClassReference {
    ClassLabel source;
    ReferenceLabel label;
    ClassLabel target;

    auto operator<=>(const ClassReference&) const = default;
};

// The six MOF property instances a metamodel may declare.
struct SubClassConstraint {
    ClassLabel parent; // c1
    ClassLabel child;  // c2, the direct subclass

    bool operator==(const SubClassConstraint&) const = default;
};

struct IsAbstractConstraint {
    ClassLabel cls;

    bool operator==(const IsAbstractConstraint&) const = default;
};

struct LowerConstraint {
    ClassLabel cls;
    ReferenceLabel reference;
    ExtendedNat bound;

    bool operator==(const LowerConstraint&) const = default;
};

struct UpperConstraint {
    ClassLabel cls;
    ReferenceLabel reference;
    ExtendedNat bound;

    bool operator==(const UpperConstraint&) const = default;
};

struct IsOppositeConstraint {
    ReferenceLabel forward;
    ReferenceLabel backward;

    bool operator==(const IsOppositeConstraint&) const = default;
};

struct AreCompositeConstraint {
    ClassLabel cls;
    std::vector<ReferenceLabel> references; // non-empty, sorted

    bool operator==(const AreCompositeConstraint&) const = default;
};

using SemanticConstraint =
    std::variant<SubClassConstraint, IsAbstractConstraint, LowerConstraint,
                 UpperConstraint, IsOppositeConstraint, AreCompositeConstraint>;

std::string constraint_to_string(const SemanticConstraint& k);

/*
 * A class/reference graph plus the finite ordered list of semantic
 * constraints that concretizes the conformance predicate. Built through
 * make_metamodel, which enforces:
 *   - every class-reference endpoint is a declared class
 *   - every class or reference label mentioned by a constraint occurs in the
 *     class set, respectively in some class reference
 *   - composite constraints carry a non-empty reference set
 */
class MetaModel {
public:
    MetaModel() = default;

    const std::vector<ClassLabel>& classes() const { return classes_; }
    const std::vector<ClassReference>& references() const {
        return references_;
    }
    const std::vector<SemanticConstraint>& constraints() const {
        return constraints_;
    }

    bool has_class(const ClassLabel& c) const;
    bool has_reference(const ClassReference& r) const;

    bool operator==(const MetaModel&) const = default;

    friend MetaModel make_metamodel(std::vector<ClassLabel> classes,
                                    std::vector<ClassReference> references,
                                    std::vector<SemanticConstraint> constraints);

private:
    std::vector<ClassLabel> classes_;
    std::vector<ClassReference> references_;
    std::vector<SemanticConstraint> constraints_;
};

// Throws MetaModelError on a violated invariant, EmptyReferenceSet for a
// composite constraint with no references.
MetaModel make_metamodel(std::vector<ClassLabel> classes,
                         std::vector<ClassReference> references,
                         std::vector<SemanticConstraint> constraints = {});

} // namespace mdweave

#endif
