#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdweave/errors.hpp"
#include "mdweave/rename.hpp"
#include "support/fixtures.hpp"

using namespace mdweave;
using namespace fixtures;

TEST_CASE("labels compare by text and reject empty") {
    CHECK(obj("a") == obj("a"));
    CHECK(obj("a") != obj("b"));
    CHECK(obj("a") < obj("b"));
    CHECK_THROWS_AS(ObjectLabel{""}, std::invalid_argument);
    CHECK(inh_label().text() == "inh");
}

TEST_CASE("extended naturals order with top as maximum") {
    CHECK(ext_le(ExtendedNat{3}, ExtendedNat::top()));
    CHECK_FALSE(ext_le(ExtendedNat::top(), ExtendedNat{3}));
    CHECK(ext_le(ExtendedNat{2}, ExtendedNat{2}));
    CHECK(ext_le(ExtendedNat::top(), ExtendedNat::top()));
    CHECK(ExtendedNat::top().to_string() == "top");
    CHECK(ExtendedNat{7}.to_string() == "7");
    CHECK_FALSE(count_at_least(100, ExtendedNat::top()));
    CHECK(count_at_most(100, ExtendedNat::top()));
}

TEST_CASE("make_model on empty sets") {
    Model m = make_model({}, {});
    CHECK(m.empty());
    CHECK(m.edges().empty());
}

TEST_CASE("make_model builds the inheritance chain fixture") {
    Model m1 = chain_m1();
    CHECK(m1.vertices().size() == 3);
    CHECK(m1.edges().size() == 2);
    CHECK(m1.has_vertex(to("c", "Csup")));
    CHECK(m1.has_edge(edge(to("c", "C"), "inh", to("c", "Csup"))));
    CHECK(m1.is_hook(to("c", "C")));
    CHECK_FALSE(m1.is_prototype(to("c", "C")));
}

TEST_CASE("make_model rejects dangling edges and bad roles") {
    TypedObject a = to("a", "C");
    CHECK_THROWS_AS(make_model({a}, {edge(a, "r", to("b", "D"))}),
                    DanglingEdge);
    CHECK_THROWS_AS(make_model({a}, {}, {to("b", "D")}, {}), RoleNotVertex);
    CHECK_THROWS_AS(make_model({a}, {}, {a}, {a}), RoleConflict);
}

TEST_CASE("make_model collapses duplicate inputs to sets") {
    TypedObject a = to("a", "C");
    Model m = make_model({a, a}, {edge(a, "r", a), edge(a, "r", a)});
    CHECK(m.vertices().size() == 1);
    CHECK(m.edges().size() == 1);
}

TEST_CASE("rename_vertices applies the stated map to the chain fixture") {
    RenameMap rm{obj("c"), obj("c'")};
    auto vs = rename_vertices(chain_m1(), rm);
    CHECK(vs == std::vector<TypedObject>{to("c'", "C"), to("c'", "Cssup"),
                                         to("c'", "Csup")});
    auto es = rename_edges(chain_m1(), rm);
    CHECK(es == std::vector<ReferenceEdge>{
                    edge(to("c'", "C"), "inh", to("c'", "Csup")),
                    edge(to("c'", "Csup"), "inh", to("c'", "Cssup"))});
}

TEST_CASE("identity rename changes nothing") {
    Model m1 = chain_m1();
    RenameMap id{obj("x"), obj("x")};
    CHECK(rename_vertices(m1, id) == m1.vertices());
    CHECK(rename_edges(m1, id) == m1.edges());
}

TEST_CASE("non-injective rename collapses vertices and edges") {
    TypedObject a = to("a", "C"), b = to("b", "C"), t = to("t", "D");
    Model m = make_model({a, b, t}, {edge(a, "r", t), edge(b, "r", t)});
    RenameMap rm{obj("a"), obj("b")};
    CHECK(rename_vertices(m, rm) == std::vector<TypedObject>{b, t});
    CHECK(rename_edges(m, rm) == std::vector<ReferenceEdge>{edge(b, "r", t)});
}

TEST_CASE("rename image soundness and cardinality on assorted models") {
    // every image element is the image of some source element, and the image
    // never grows
    std::vector<Model> models = {chain_m1(), upper_witness_m1(),
                                 make_model({}, {})};
    for (const Model& m : models) {
        for (const char* from : {"a", "c", "o1"}) {
            for (const char* dest : {"b", "c'", "o2"}) {
                RenameMap rm{obj(from), obj(dest)};
                auto vs = rename_vertices(m, rm);
                CHECK(vs.size() <= m.vertices().size());
                for (const TypedObject& v : vs) {
                    bool witnessed = false;
                    for (const TypedObject& w : m.vertices()) {
                        if (rm.apply(w) == v) witnessed = true;
                    }
                    CHECK(witnessed);
                }
                auto es = rename_edges(m, rm);
                CHECK(es.size() <= m.edges().size());
                for (const ReferenceEdge& e : es) {
                    bool witnessed = false;
                    for (const ReferenceEdge& w : m.edges()) {
                        if (rm.apply(w) == e) witnessed = true;
                    }
                    CHECK(witnessed);
                }
            }
        }
    }
}
