#include "mdweave/metamodel.hpp"

#include <algorithm>

#include "mdweave/errors.hpp"
#include "mdweave/model.hpp"

namespace mdweave {

namespace {

struct ConstraintPrinter {
    std::string operator()(const SubClassConstraint& k) const {
        return "subclass(" + k.parent.text() + ", " + k.child.text() + ")";
    }
    std::string operator()(const IsAbstractConstraint& k) const {
        return "abstract(" + k.cls.text() + ")";
    }
    std::string operator()(const LowerConstraint& k) const {
        return "lower(" + k.cls.text() + ", " + k.reference.text() + ", " +
               k.bound.to_string() + ")";
    }
    std::string operator()(const UpperConstraint& k) const {
        return "upper(" + k.cls.text() + ", " + k.reference.text() + ", " +
               k.bound.to_string() + ")";
    }
    std::string operator()(const IsOppositeConstraint& k) const {
        return "opposite(" + k.forward.text() + ", " + k.backward.text() + ")";
    }
    std::string operator()(const AreCompositeConstraint& k) const {
        std::string refs;
        for (const ReferenceLabel& r : k.references) {
            if (!refs.empty()) refs += ", ";
            refs += r.text();
        }
        return "composite(" + k.cls.text() + ", {" + refs + "})";
    }
};

struct ConstraintValidator {
    const MetaModel& mm;

    void require_class(const ClassLabel& c) const {
        if (!mm.has_class(c)) {
            throw MetaModelError("constraint mentions unknown class " +
                                 c.text());
        }
    }

    void require_reference(const ReferenceLabel& r) const {
        const auto& refs = mm.references();
        bool found = std::any_of(refs.begin(), refs.end(),
                                 [&](const ClassReference& cr) {
                                     return cr.label == r;
                                 });
        if (!found) {
            throw MetaModelError("constraint mentions unknown reference " +
                                 r.text());
        }
    }

    void operator()(const SubClassConstraint& k) const {
        require_class(k.parent);
        require_class(k.child);
    }
    void operator()(const IsAbstractConstraint& k) const {
        require_class(k.cls);
    }
    void operator()(const LowerConstraint& k) const {
        require_class(k.cls);
        require_reference(k.reference);
    }
    void operator()(const UpperConstraint& k) const {
        require_class(k.cls);
        require_reference(k.reference);
    }
    void operator()(const IsOppositeConstraint& k) const {
        require_reference(k.forward);
        require_reference(k.backward);
    }
    void operator()(const AreCompositeConstraint& k) const {
        if (k.references.empty()) {
            throw EmptyReferenceSet(
                "composite constraint with empty reference set");
        }
        require_class(k.cls);
        for (const ReferenceLabel& r : k.references) {
            require_reference(r);
        }
    }
};

} // namespace

std::string constraint_to_string(const SemanticConstraint& k) {
    return std::visit(ConstraintPrinter{}, k);
}

bool MetaModel::has_class(const ClassLabel& c) const {
    return std::binary_search(classes_.begin(), classes_.end(), c);
}

bool MetaModel::has_reference(const ClassReference& r) const {
    return std::binary_search(references_.begin(), references_.end(), r);
}

MetaModel make_metamodel(std::vector<ClassLabel> classes,
                         std::vector<ClassReference> references,
                         std::vector<SemanticConstraint> constraints) {
    normalize_set(classes);
    normalize_set(references);

    MetaModel mm;
    mm.classes_ = std::move(classes);
    mm.references_ = std::move(references);

    for (const ClassReference& r : mm.references_) {
        if (!mm.has_class(r.source) || !mm.has_class(r.target)) {
            throw MetaModelError("reference " + r.label.text() +
                                 " has an endpoint outside the class set");
        }
    }
    for (const SemanticConstraint& k : constraints) {
        std::visit(ConstraintValidator{mm}, k);
    }

    mm.constraints_ = std::move(constraints);
    return mm;
}

} // namespace mdweave
