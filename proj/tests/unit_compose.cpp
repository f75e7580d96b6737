#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdweave/compose.hpp"
#include "mdweave/conformance.hpp"
#include "mdweave/errors.hpp"
#include "support/fixtures.hpp"

using namespace mdweave;
using namespace fixtures;

TEST_CASE("bind renames every vertex sharing the hook's object label") {
    Model result = bind(to("c", "C"), to("c'", "C"), chain_m1(), chain_m2());
    CHECK(result.vertices() ==
          std::vector<TypedObject>{to("c'", "C"), to("c'", "Cssup"),
                                   to("c'", "Csup")});
    CHECK(result.edges() ==
          std::vector<ReferenceEdge>{
              edge(to("c'", "C"), "inh", to("c'", "Csup")),
              edge(to("c'", "Csup"), "inh", to("c'", "Cssup"))});
    // the bound hook is consumed
    CHECK(result.hooks().empty());
}

TEST_CASE("bind guard failures return m1 unchanged") {
    Model m1 = chain_m1(), m2 = chain_m2();
    // not a hook
    CHECK(bind(to("c", "Csup"), to("c'", "C"), m1, m2) == m1);
    // not a prototype
    CHECK(bind(to("c", "C"), to("zz", "C"), m1, m2) == m1);
    // differing classes
    Model m2d = make_model({to("c'", "D")}, {}, {}, {to("c'", "D")});
    CHECK(bind(to("c", "C"), to("c'", "D"), m1, m2d) == m1);
}

TEST_CASE("naive_bind replaces only the single hook vertex") {
    Model result =
        naive_bind(to("c", "C"), to("c'", "C"), chain_m1(), chain_m2());
    CHECK(result.vertices() ==
          std::vector<TypedObject>{to("c", "Cssup"), to("c", "Csup"),
                                   to("c'", "C")});
    CHECK(result.edges() ==
          std::vector<ReferenceEdge>{
              edge(to("c", "Csup"), "inh", to("c", "Cssup")),
              edge(to("c'", "C"), "inh", to("c", "Csup"))});
}

TEST_CASE("naive_bind breaks the inheritance encoding that bind preserves") {
    Model good = bind(to("c", "C"), to("c'", "C"), chain_m1(), chain_m2());
    Model bad = naive_bind(to("c", "C"), to("c'", "C"), chain_m1(), chain_m2());
    CHECK(sub_class(cls("Csup"), cls("C"), good));
    CHECK_FALSE(sub_class(cls("Csup"), cls("C"), bad));
    CHECK(conforms_to(good, chain_mm()).conforms);
    CHECK_FALSE(conforms_to(bad, chain_mm()).conforms);
}

TEST_CASE("bind and naive_bind coincide on single-occurrence labels") {
    TypedObject a = to("a", "C"), t = to("t", "D");
    Model m1 = make_model({a, t}, {edge(a, "r", t)}, {a}, {});
    Model m2 = make_model({to("p", "C")}, {}, {}, {to("p", "C")});
    CHECK(bind(a, to("p", "C"), m1, m2) == naive_bind(a, to("p", "C"), m1, m2));
}

TEST_CASE("bind never changes class or reference labels") {
    Model result =
        bind(to("o1", "C"), to("o2", "C"), upper_witness_m1(),
             upper_witness_m2());
    for (const TypedObject& v : result.vertices()) {
        CHECK((v.cls == cls("C") || v.cls == cls("D")));
    }
    for (const ReferenceEdge& e : result.edges()) {
        CHECK(e.label == ref("r"));
    }
}

TEST_CASE("precondition report on the chain scenario") {
    PreconditionReport r = check_bind_preconditions(to("c", "C"), to("c'", "C"),
                                                    chain_m1(), chain_m2());
    CHECK(r.guard_ok);
    CHECK(r.prototype_fresh);
    CHECK(r.injective);
    CHECK(r.prototypes_distinct);
    for (TheoremId t : kAllTheorems) CHECK(r.holds_for(t));
}

TEST_CASE("stale prototype label fails only the multiplicity theorems") {
    // o2's label already labels a vertex of m1
    PreconditionReport r = check_bind_preconditions(
        to("o1", "C"), to("o2", "C"), upper_witness_m1(), upper_witness_m2());
    CHECK(r.guard_ok);
    CHECK_FALSE(r.prototype_fresh);
    CHECK_FALSE(r.injective);
    CHECK(r.holds_for(TheoremId::ValidBind));
    CHECK(r.holds_for(TheoremId::SubClass));
    CHECK(r.holds_for(TheoremId::IsAbstract));
    CHECK(r.holds_for(TheoremId::IsOpposite));
    CHECK_FALSE(r.holds_for(TheoremId::Lower));
    CHECK_FALSE(r.holds_for(TheoremId::Upper));
    CHECK_FALSE(r.holds_for(TheoremId::AreComposite));
}

TEST_CASE("guard failure dominates the precondition report") {
    PreconditionReport r = check_bind_preconditions(
        to("c", "Csup"), to("c'", "C"), chain_m1(), chain_m2());
    CHECK_FALSE(r.guard_ok);
    for (TheoremId t : kAllTheorems) CHECK_FALSE(r.holds_for(t));
}

TEST_CASE("self rename is injective even though not fresh") {
    Model m1 = chain_m1();
    Model m2self = make_model({to("c", "C")}, {}, {}, {to("c", "C")});
    PreconditionReport r =
        check_bind_preconditions(to("c", "C"), to("c", "C"), m1, m2self);
    CHECK(r.guard_ok);
    CHECK_FALSE(r.prototype_fresh);
    CHECK(r.injective);
}

TEST_CASE("the fixed four-vertex witness falsifies unpreconditioned upper") {
    Model m1 = upper_witness_m1(), m2 = upper_witness_m2();
    CHECK(upper(cls("C"), ref("r"), ExtendedNat{1}, m1));
    CHECK(upper(cls("C"), ref("r"), ExtendedNat{1}, m2));
    Model result = bind(to("o1", "C"), to("o2", "C"), m1, m2);
    // the merged vertex now has two distinct r-targets
    CHECK_FALSE(upper(cls("C"), ref("r"), ExtendedNat{1}, result));
}

TEST_CASE("bind_many folds left over the pair list") {
    Model m1 = chain_m1(), m2 = chain_m2();
    CHECK(bind_many(m1, m2, {}) == m1);
    BindPair p{to("c", "C"), to("c'", "C")};
    CHECK(bind_many(m1, m2, {p}) == bind(p.first, p.second, m1, m2));

    TypedObject a = to("a", "C"), b = to("b", "C");
    Model multi = make_model({a, b}, {edge(a, "r", b)}, {a, b}, {});
    TypedObject p1 = to("p", "C"), q1 = to("q", "C");
    Model protos = make_model({p1, q1}, {}, {}, {p1, q1});
    Model result = bind_many(multi, protos, {{a, p1}, {b, q1}});
    CHECK(result.vertices() == std::vector<TypedObject>{p1, q1});
    CHECK(result.edges() == std::vector<ReferenceEdge>{edge(p1, "r", q1)});
    CHECK(result.hooks().empty());
}

TEST_CASE("bind_many preconditions catch duplicated prototypes") {
    TypedObject a = to("a", "C"), b = to("b", "C");
    Model multi = make_model({a, b}, {}, {a, b}, {});
    TypedObject p1 = to("p", "C");
    Model protos = make_model({p1}, {}, {}, {p1});
    PreconditionReport r =
        check_bind_many_preconditions(multi, protos, {{a, p1}, {b, p1}});
    CHECK_FALSE(r.prototypes_distinct);
    CHECK_FALSE(r.holds_for(TheoremId::Lower));
    CHECK_FALSE(r.holds_for(TheoremId::Upper));
}

TEST_CASE("bind_many preconditions are evaluated stepwise") {
    // the second prototype's label is introduced by the first rename
    TypedObject a = to("a", "C"), b = to("b", "C");
    Model multi = make_model({a, b}, {}, {a, b}, {});
    TypedObject p1 = to("p", "C"), q1 = to("q", "C");
    Model protos = make_model({p1, q1}, {}, {}, {p1, q1});
    PreconditionReport fresh =
        check_bind_many_preconditions(multi, protos, {{a, p1}, {b, q1}});
    CHECK(fresh.prototype_fresh);
    PreconditionReport stale =
        check_bind_many_preconditions(multi, protos, {{a, q1}, {b, q1}});
    CHECK_FALSE(stale.prototype_fresh);
    PreconditionReport empty = check_bind_many_preconditions(multi, protos, {});
    CHECK(empty.guard_ok);
    CHECK(empty.prototype_fresh);
    CHECK(empty.injective);
    CHECK(empty.prototypes_distinct);
}

TEST_CASE("extend_disjoint unions disjoint models and rejects overlap") {
    Model m1 = chain_m1();
    Model empty = make_model({}, {});
    CHECK(extend_disjoint(m1, empty) == m1);
    Model other = make_model({to("z", "D")}, {});
    CHECK(extend_disjoint(m1, other).vertices().size() ==
          m1.vertices().size() + 1);
    Model shares = make_model({to("c", "C")}, {});
    CHECK_THROWS_AS(extend_disjoint(m1, shares), NotDisjoint);
}

TEST_CASE("extend_overlapping is an idempotent commutative union") {
    Model m1 = chain_m1();
    CHECK(extend_overlapping(m1, m1) == m1);
    Model shares =
        make_model({to("c", "C"), to("z", "D")}, {});
    Model u = extend_overlapping(m1, shares);
    CHECK(u.vertices().size() == 4); // 3 + 2 - 1 shared
    CHECK(extend_overlapping(shares, m1) == u);
    Model other = make_model({to("z", "D")}, {});
    CHECK(extend_overlapping(m1, other) == extend_disjoint(m1, other));
    // associativity on a small triple
    Model a = make_model({to("x", "C")}, {});
    CHECK(extend_overlapping(extend_overlapping(m1, shares), a) ==
          extend_overlapping(m1, extend_overlapping(shares, a)));
}
