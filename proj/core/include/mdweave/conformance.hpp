#ifndef mdweave_conformance_hpp
#define mdweave_conformance_hpp

#include <optional>
#include <string>
#include <vector>

#include "mdweave/metamodel.hpp"
#include "mdweave/model.hpp"

namespace mdweave {

// Structural typing: every vertex class is a metamodel class and every edge's
// (source class, label, target class) triple is a metamodel reference.
bool instance_of(const Model& m, const MetaModel& mm);

// Every instance of c2 carries a direct inh edge to the same object label
// typed by c1. Vacuously true when c2 has no instances.
bool sub_class(const ClassLabel& c1, const ClassLabel& c2, const Model& m);

// Every instance of c is reached by an inh edge from some class, keeping the
// same object label: c has no direct instances.
bool is_abstract(const ClassLabel& c, const Model& m);

// Every instance of c has at least n distinct r-targets. A finite count is
// never >= Top.
bool lower(const ClassLabel& c, const ReferenceLabel& r, ExtendedNat n,
           const Model& m);

// Every instance of c has at most n distinct r-targets.
bool upper(const ClassLabel& c, const ReferenceLabel& r, ExtendedNat n,
           const Model& m);

// The r1 edge relation is the transpose of the r2 edge relation.
bool is_opposite(const ReferenceLabel& r1, const ReferenceLabel& r2,
                 const Model& m);

// Every instance of c has at most one distinct source vertex reaching it
// through a reference in rs. Throws EmptyReferenceSet if rs is empty.
bool are_composite(const ClassLabel& c, const std::vector<ReferenceLabel>& rs,
                   const Model& m);

// Dispatch over the six predicates.
bool check_constraint(const SemanticConstraint& k, const Model& m);

// A concrete element demonstrating a violation.
struct Witness {
    std::string detail;

    bool operator==(const Witness&) const = default;
};

struct ConformanceReport {
    bool instance_of_ok = true;
    std::vector<std::pair<SemanticConstraint, Witness>> violations;
    bool conforms = true;
};

// Full conformance check: structural typing plus every declared constraint,
// reporting a witness (first offending element in label order) per violation.
ConformanceReport conforms_to(const Model& m, const MetaModel& mm);

} // namespace mdweave

#endif
