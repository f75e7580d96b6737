#include "mdweave/document.hpp"

#include <charconv>
#include <sstream>

#include "mdweave/errors.hpp"

namespace mdweave {

namespace {

struct Line {
    std::size_t number; // 1-based
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

[[noreturn]] void fail(const Line& ln, const std::string& what) {
    throw SyntaxError(ln.number, what);
}

void expect_arity(const Line& ln, std::size_t n, const char* what) {
    if (ln.tokens.size() != n) {
        fail(ln, std::string(what) + " entry needs " + std::to_string(n - 1) +
                     " fields, got " + std::to_string(ln.tokens.size() - 1));
    }
}

ExtendedNat parse_bound(const Line& ln, const std::string& tok) {
    if (tok == "top") return ExtendedNat::top();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail(ln, "bound must be a natural number or `top`, got `" + tok + "`");
    }
    return ExtendedNat{v};
}

} // namespace

Model parse_model(const std::string& text) {
    enum class Section { None, Objects, Links, Hooks, Prototypes };
    Section section = Section::None;

    std::vector<TypedObject> vertices;
    std::vector<ReferenceEdge> edges;
    std::vector<TypedObject> hooks;
    std::vector<TypedObject> prototypes;
    // entry lines kept for located role/edge validation below
    std::vector<std::pair<Line, ReferenceEdge>> edge_lines;
    std::vector<std::pair<Line, TypedObject>> role_lines;

    for (const Line& ln : tokenize(text)) {
        const auto& t = ln.tokens;
        if (t.size() == 1) {
            if (t[0] == "objects") section = Section::Objects;
            else if (t[0] == "links") section = Section::Links;
            else if (t[0] == "hooks") section = Section::Hooks;
            else if (t[0] == "prototypes") section = Section::Prototypes;
            else fail(ln, "unknown section `" + t[0] + "`");
            continue;
        }
        switch (section) {
        case Section::None:
            fail(ln, "entry before any section header");
        case Section::Objects:
            expect_arity(ln, 2, "objects");
            vertices.push_back({ObjectLabel{t[0]}, ClassLabel{t[1]}});
            break;
        case Section::Links: {
            expect_arity(ln, 5, "links");
            ReferenceEdge e{{ObjectLabel{t[0]}, ClassLabel{t[1]}},
                            ReferenceLabel{t[2]},
                            {ObjectLabel{t[3]}, ClassLabel{t[4]}}};
            edges.push_back(e);
            edge_lines.push_back({ln, e});
            break;
        }
        case Section::Hooks:
        case Section::Prototypes: {
            expect_arity(ln, 2, section == Section::Hooks ? "hooks"
                                                          : "prototypes");
            TypedObject v{ObjectLabel{t[0]}, ClassLabel{t[1]}};
            (section == Section::Hooks ? hooks : prototypes).push_back(v);
            role_lines.push_back({ln, v});
            break;
        }
        }
    }

    normalize_set(vertices);
    auto is_vertex = [&](const TypedObject& v) {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    };
    for (const auto& [ln, e] : edge_lines) {
        if (!is_vertex(e.source) || !is_vertex(e.target)) {
            throw DanglingEdge("line " + std::to_string(ln.number) +
                               ": link endpoint is not a declared object");
        }
    }
    for (const auto& [ln, v] : role_lines) {
        if (!is_vertex(v)) {
            throw RoleNotVertex("line " + std::to_string(ln.number) +
                                ": role holder is not a declared object");
        }
    }
    // make_model re-validates and catches what is left (role conflicts).
    return make_model(std::move(vertices), std::move(edges), std::move(hooks),
                      std::move(prototypes));
}

namespace {

void emit_vertex(std::string& out, const TypedObject& v) {
    out += v.object.text();
    out += ' ';
    out += v.cls.text();
    out += '\n';
}

} // namespace

std::string serialize_model(const Model& m) {
    std::string out = "objects\n";
    for (const TypedObject& v : m.vertices()) emit_vertex(out, v);
    out += "links\n";
    for (const ReferenceEdge& e : m.edges()) {
        out += e.source.object.text() + ' ' + e.source.cls.text() + ' ' +
               e.label.text() + ' ' + e.target.object.text() + ' ' +
               e.target.cls.text() + '\n';
    }
    out += "hooks\n";
    for (const TypedObject& v : m.hooks()) emit_vertex(out, v);
    out += "prototypes\n";
    for (const TypedObject& v : m.prototypes()) emit_vertex(out, v);
    return out;
}

MetaModel parse_metamodel(const std::string& text) {
    enum class Section { None, Classes, References, Constraints };
    Section section = Section::None;

    std::vector<ClassLabel> classes;
    std::vector<ClassReference> references;
    std::vector<SemanticConstraint> constraints;

    for (const Line& ln : tokenize(text)) {
        const auto& t = ln.tokens;
        if (t.size() == 1 && section != Section::Classes) {
            if (t[0] == "classes") section = Section::Classes;
            else if (t[0] == "references") section = Section::References;
            else if (t[0] == "constraints") section = Section::Constraints;
            else fail(ln, "unknown section `" + t[0] + "`");
            continue;
        }
        switch (section) {
        case Section::None:
            fail(ln, "entry before any section header");
        case Section::Classes:
            if (t.size() == 1 &&
                (t[0] == "references" || t[0] == "constraints")) {
                section = t[0] == "references" ? Section::References
                                               : Section::Constraints;
                break;
            }
            expect_arity(ln, 1, "classes");
            classes.push_back(ClassLabel{t[0]});
            break;
        case Section::References:
            expect_arity(ln, 3, "references");
            references.push_back({ClassLabel{t[0]}, ReferenceLabel{t[1]},
                                  ClassLabel{t[2]}});
            break;
        case Section::Constraints: {
            const std::string& kind = t[0];
            if (kind == "subclass") {
                expect_arity(ln, 3, "subclass");
                constraints.push_back(
                    SubClassConstraint{ClassLabel{t[1]}, ClassLabel{t[2]}});
            } else if (kind == "abstract") {
                expect_arity(ln, 2, "abstract");
                constraints.push_back(IsAbstractConstraint{ClassLabel{t[1]}});
            } else if (kind == "lower" || kind == "upper") {
                expect_arity(ln, 4, kind.c_str());
                ClassLabel c{t[1]};
                ReferenceLabel r{t[2]};
                ExtendedNat n = parse_bound(ln, t[3]);
                if (kind == "lower") {
                    constraints.push_back(LowerConstraint{c, r, n});
                } else {
                    constraints.push_back(UpperConstraint{c, r, n});
                }
            } else if (kind == "opposite") {
                expect_arity(ln, 3, "opposite");
                constraints.push_back(IsOppositeConstraint{
                    ReferenceLabel{t[1]}, ReferenceLabel{t[2]}});
            } else if (kind == "composite") {
                if (t.size() < 3) {
                    fail(ln, "composite entry needs a class and at least one "
                             "reference");
                }
                std::vector<ReferenceLabel> rs;
                for (std::size_t i = 2; i < t.size(); ++i) {
                    rs.push_back(ReferenceLabel{t[i]});
                }
                normalize_set(rs);
                constraints.push_back(
                    AreCompositeConstraint{ClassLabel{t[1]}, std::move(rs)});
            } else {
                fail(ln, "unknown constraint kind `" + kind + "`");
            }
            break;
        }
        }
    }

    return make_metamodel(std::move(classes), std::move(references),
                          std::move(constraints));
}

std::string serialize_metamodel(const MetaModel& mm) {
    std::string out = "classes\n";
    for (const ClassLabel& c : mm.classes()) out += c.text() + '\n';
    out += "references\n";
    for (const ClassReference& r : mm.references()) {
        out += r.source.text() + ' ' + r.label.text() + ' ' + r.target.text() +
               '\n';
    }
    out += "constraints\n";
    for (const SemanticConstraint& k : mm.constraints()) {
        struct Emitter {
            std::string operator()(const SubClassConstraint& k) const {
                return "subclass " + k.parent.text() + ' ' + k.child.text();
            }
            std::string operator()(const IsAbstractConstraint& k) const {
                return "abstract " + k.cls.text();
            }
            std::string operator()(const LowerConstraint& k) const {
                return "lower " + k.cls.text() + ' ' + k.reference.text() +
                       ' ' + k.bound.to_string();
            }
            std::string operator()(const UpperConstraint& k) const {
                return "upper " + k.cls.text() + ' ' + k.reference.text() +
                       ' ' + k.bound.to_string();
            }
            std::string operator()(const IsOppositeConstraint& k) const {
                return "opposite " + k.forward.text() + ' ' +
                       k.backward.text();
            }
            std::string operator()(const AreCompositeConstraint& k) const {
                std::string s = "composite " + k.cls.text();
                for (const ReferenceLabel& r : k.references) {
                    s += ' ' + r.text();
                }
                return s;
            }
        };
        out += std::visit(Emitter{}, k) + '\n';
    }
    return out;
}

std::string operator_name(OperatorKind op) {
    switch (op) {
    case OperatorKind::Bind: return "bind";
    case OperatorKind::BindMany: return "bind_many";
    case OperatorKind::NaiveBind: return "naive_bind";
    case OperatorKind::ExtendDisjoint: return "extend_disjoint";
    case OperatorKind::ExtendOverlapping: return "extend_overlapping";
    }
    return "?";
}

CompositionProgram parse_program(const std::string& text) {
    CompositionProgram prog;
    bool have_op = false;
    std::size_t last_line = 0;

    for (const Line& ln : tokenize(text)) {
        const auto& t = ln.tokens;
        last_line = ln.number;
        const std::string& key = t[0];
        auto path_value = [&]() {
            if (t.size() != 2) {
                fail(ln, key + " takes exactly one path");
            }
            return t[1];
        };
        if (key == "operator") {
            if (t.size() != 2) fail(ln, "operator takes one name");
            if (t[1] == "bind") prog.op = OperatorKind::Bind;
            else if (t[1] == "bind_many") prog.op = OperatorKind::BindMany;
            else if (t[1] == "naive_bind") prog.op = OperatorKind::NaiveBind;
            else if (t[1] == "extend_disjoint")
                prog.op = OperatorKind::ExtendDisjoint;
            else if (t[1] == "extend_overlapping")
                prog.op = OperatorKind::ExtendOverlapping;
            else fail(ln, "unknown operator `" + t[1] + "`");
            have_op = true;
        } else if (key == "model1") {
            prog.model1 = path_value();
        } else if (key == "model2") {
            prog.model2 = path_value();
        } else if (key == "metamodel") {
            prog.metamodel = path_value();
        } else if (key == "output") {
            prog.output = path_value();
        } else if (key == "pair") {
            expect_arity(ln, 5, "pair");
            prog.pairs.push_back(
                {TypedObject{ObjectLabel{t[1]}, ClassLabel{t[2]}},
                 TypedObject{ObjectLabel{t[3]}, ClassLabel{t[4]}}});
        } else {
            fail(ln, "unknown keyword `" + key + "`");
        }
    }

    auto invariant = [&](bool ok, const char* what) {
        if (!ok) throw SyntaxError(last_line, what);
    };
    invariant(have_op, "program declares no operator");
    invariant(!prog.model1.empty() && !prog.model2.empty(),
              "program must reference model1 and model2");
    invariant(!prog.metamodel.empty(), "program must reference a metamodel");
    switch (prog.op) {
    case OperatorKind::Bind:
    case OperatorKind::NaiveBind:
        invariant(prog.pairs.size() == 1,
                  "bind and naive_bind take exactly one pair");
        break;
    case OperatorKind::BindMany:
        invariant(!prog.pairs.empty(), "bind_many takes at least one pair");
        break;
    case OperatorKind::ExtendDisjoint:
    case OperatorKind::ExtendOverlapping:
        invariant(prog.pairs.empty(), "extend operators take no pairs");
        break;
    }
    return prog;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

void embed_model(std::string& out, const char* name, const Model& m) {
    out += std::string("begin ") + name + '\n';
    out += serialize_model(m);
    out += std::string("end ") + name + '\n';
}

} // namespace

std::string render_precondition_report(const PreconditionReport& r,
                                       RenderFormat fmt) {
    std::string out;
    if (fmt == RenderFormat::Canonical) {
        out += std::string("guard_ok ") + yn(r.guard_ok) + '\n';
        out += std::string("prototype_fresh ") + yn(r.prototype_fresh) + '\n';
        out += std::string("injective ") + yn(r.injective) + '\n';
        out += std::string("prototypes_distinct ") + yn(r.prototypes_distinct) +
               '\n';
    } else {
        out += std::string("preconditions: guard=") + yn(r.guard_ok) +
               " fresh=" + yn(r.prototype_fresh) +
               " injective=" + yn(r.injective) +
               " distinct=" + yn(r.prototypes_distinct) + '\n';
    }
    return out;
}

std::string render_conformance_report(const ConformanceReport& r,
                                      RenderFormat fmt) {
    std::string out;
    out += std::string("instance_of ") + yn(r.instance_of_ok) + '\n';
    for (const auto& [k, w] : r.violations) {
        if (fmt == RenderFormat::Canonical) {
            out += "violation " + constraint_to_string(k) + " witness " +
                   w.detail + '\n';
        } else {
            out += "violated " + constraint_to_string(k) + ": " + w.detail +
                   '\n';
        }
    }
    out += std::string("conforms ") + yn(r.conforms) + '\n';
    return out;
}

std::string render_harness_report(const HarnessReport& r, std::uint64_t seed,
                                  RenderFormat fmt) {
    std::string out;
    if (fmt == RenderFormat::Pretty) {
        out += "theorem " + theorem_name(r.theorem) + ": " +
               (r.passed ? "passed" : "FALSIFIED") + " after " +
               std::to_string(r.trials_run) + " trials (seed " +
               std::to_string(seed) + ")\n";
    } else {
        out += "theorem " + theorem_name(r.theorem) + '\n';
        out += "seed " + std::to_string(seed) + '\n';
        out += "trials " + std::to_string(r.trials_run) + '\n';
        out += std::string("status ") + (r.passed ? "passed" : "falsified") +
               '\n';
    }
    if (r.counterexample) {
        const Counterexample& ce = *r.counterexample;
        out += "hook " + ce.o1.object.text() + ' ' + ce.o1.cls.text() + '\n';
        out += "prototype " + ce.o2.object.text() + ' ' + ce.o2.cls.text() +
               '\n';
        if (ce.property) {
            out += "property " + constraint_to_string(*ce.property) + '\n';
        }
        out += std::string("shrunk ") + yn(ce.shrunk) + '\n';
        embed_model(out, "model1", ce.m1);
        embed_model(out, "model2", ce.m2);
        out += "begin metamodel\n";
        out += serialize_metamodel(ce.metamodel);
        out += "end metamodel\n";
    }
    return out;
}

} // namespace mdweave
