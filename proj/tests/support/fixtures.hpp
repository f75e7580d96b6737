#ifndef tests_support_fixtures_hpp
#define tests_support_fixtures_hpp

#include "mdweave/metamodel.hpp"
#include "mdweave/model.hpp"

namespace fixtures {

using namespace mdweave;

inline ObjectLabel obj(const char* s) { return ObjectLabel{s}; }
inline ClassLabel cls(const char* s) { return ClassLabel{s}; }
inline ReferenceLabel ref(const char* s) { return ReferenceLabel{s}; }
inline TypedObject to(const char* o, const char* c) {
    return {obj(o), cls(c)};
}
inline ReferenceEdge edge(TypedObject s, const char* r, TypedObject t) {
    return {s, ref(r), t};
}

// The three-vertex inheritance-chain model: object c with classes C, Csup,
// Cssup linked by inh, hook on <c,C>.
inline Model chain_m1() {
    TypedObject cC = to("c", "C"), cS = to("c", "Csup"), cSS = to("c", "Cssup");
    return make_model({cC, cS, cSS},
                      {edge(cC, "inh", cS), edge(cS, "inh", cSS)}, {cC}, {});
}

// The companion model carrying prototype <c',C>.
inline Model chain_m2() {
    TypedObject p = to("c'", "C");
    return make_model({p}, {}, {}, {p});
}

inline MetaModel chain_mm() {
    ClassLabel C = cls("C"), S = cls("Csup"), SS = cls("Cssup");
    return make_metamodel({C, S, SS},
                          {{C, ref("inh"), S}, {S, ref("inh"), SS}},
                          {SubClassConstraint{S, C}, SubClassConstraint{SS, S}});
}

// Fixed necessity witness for upper: renaming o1 to o2 merges two sources
// and pools their r-targets.
inline Model upper_witness_m1() {
    TypedObject o1 = to("o1", "C"), o2 = to("o2", "C");
    TypedObject x = to("x", "D"), y = to("y", "D");
    return make_model({o1, o2, x, y}, {edge(o1, "r", x), edge(o2, "r", y)},
                      {o1}, {});
}

inline Model upper_witness_m2() {
    TypedObject p = to("o2", "C");
    return make_model({p}, {}, {}, {p});
}

} // namespace fixtures

#endif
