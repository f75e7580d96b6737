#ifndef mdweave_document_hpp
#define mdweave_document_hpp

#include <string>
#include <vector>

#include "mdweave/compose.hpp"
#include "mdweave/conformance.hpp"
#include "mdweave/harness.hpp"
#include "mdweave/metamodel.hpp"
#include "mdweave/model.hpp"

namespace mdweave {

/*
 * Line-oriented document formats. Tokens are whitespace-separated; '#' starts
 * a comment line; blank lines are ignored. Canonical serialization emits all
 * sections in a fixed order with entries sorted, so structurally equal values
 * yield byte-identical documents and parse . serialize is the identity.
 *
 * Model document sections: objects, links, hooks, prototypes.
 *   objects entry:    <object> <class>
 *   links entry:      <src-object> <src-class> <reference> <dst-object> <dst-class>
 *   hooks/prototypes: <object> <class>
 *
 * Metamodel document sections: classes, references, constraints.
 *   classes entry:     <class>
 *   references entry:  <src-class> <reference> <dst-class>
 *   constraints entry: subclass <parent> <child>
 *                    | abstract <class>
 *                    | lower <class> <reference> <bound>
 *                    | upper <class> <reference> <bound>
 *                    | opposite <reference> <reference>
 *                    | composite <class> <reference>...
 *   where <bound> is a natural number or `top`. Constraint order is
 *   significant and preserved verbatim.
 */

Model parse_model(const std::string& text);
std::string serialize_model(const Model& m);

MetaModel parse_metamodel(const std::string& text);
std::string serialize_metamodel(const MetaModel& mm);

enum class OperatorKind {
    Bind,
    BindMany,
    NaiveBind,
    ExtendDisjoint,
    ExtendOverlapping,
};

std::string operator_name(OperatorKind op);

/*
 * A composition program document, keyword-per-line:
 *   operator  bind | bind_many | naive_bind | extend_disjoint | extend_overlapping
 *   model1    <path>
 *   model2    <path>
 *   metamodel <path>
 *   output    <path>           (optional)
 *   pair      <hook-object> <hook-class> <proto-object> <proto-class>
 * bind and naive_bind take exactly one pair, bind_many at least one, the
 * extend operators none. Paths are taken verbatim to end of line and resolved
 * relative to the program file by the caller.
 */
struct CompositionProgram {
    OperatorKind op = OperatorKind::Bind;
    std::string model1;
    std::string model2;
    std::string metamodel;
    std::string output; // empty: no result file written
    std::vector<BindPair> pairs;
};

CompositionProgram parse_program(const std::string& text);

enum class RenderFormat { Canonical, Pretty };

std::string render_precondition_report(const PreconditionReport& r,
                                       RenderFormat fmt);
std::string render_conformance_report(const ConformanceReport& r,
                                      RenderFormat fmt);

// One falsification report. Canonical form contains the seed, never
// timestamps; an embedded counterexample renders its models as nested
// parseable model documents between `begin`/`end` markers.
std::string render_harness_report(const HarnessReport& r, std::uint64_t seed,
                                  RenderFormat fmt);

} // namespace mdweave

#endif
