#include "mdweave/harness.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

namespace mdweave {

namespace {

// splitmix64; fixed seed-splitting keeps every run reproducible regardless
// of execution order.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix2(std::uint64_t a, std::uint64_t b) { return mix(a ^ mix(b)); }

using Rng = std::mt19937_64;

std::uint64_t pick(Rng& rng, std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

ClassLabel gen_class(std::uint32_t i) {
    static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
    if (i < 8) return ClassLabel{names[i]};
    return ClassLabel{"K" + std::to_string(i)};
}

ReferenceLabel gen_reference(std::uint32_t i) {
    return ReferenceLabel{"r" + std::to_string(i + 1)};
}

ObjectLabel gen_object(std::uint32_t i) {
    return ObjectLabel{"o" + std::to_string(i)};
}

int theorem_index(TheoremId t) { return static_cast<int>(t); }

bool constraint_matches(const SemanticConstraint& k, TheoremId t) {
    switch (t) {
    case TheoremId::SubClass:
        return std::holds_alternative<SubClassConstraint>(k);
    case TheoremId::IsAbstract:
        return std::holds_alternative<IsAbstractConstraint>(k);
    case TheoremId::Lower:
        return std::holds_alternative<LowerConstraint>(k);
    case TheoremId::Upper:
        return std::holds_alternative<UpperConstraint>(k);
    case TheoremId::IsOpposite:
        return std::holds_alternative<IsOppositeConstraint>(k);
    case TheoremId::AreComposite:
        return std::holds_alternative<AreCompositeConstraint>(k);
    case TheoremId::ValidBind:
        return false;
    }
    return false;
}

std::vector<ClassReference> inh_references(const MetaModel& mm) {
    std::vector<ClassReference> out;
    for (const ClassReference& r : mm.references()) {
        if (r.label == inh_label()) out.push_back(r);
    }
    return out;
}

std::vector<ClassReference> user_references(const MetaModel& mm) {
    std::vector<ClassReference> out;
    for (const ClassReference& r : mm.references()) {
        if (r.label != inh_label()) out.push_back(r);
    }
    return out;
}

// Samples one constraint instance over the metamodel's declared classes and
// references; may add the references needed to keep the instance satisfiable
// (opposite constraints need the transposed triple to exist).
std::optional<SemanticConstraint> sample_constraint(
    Rng& rng, const std::vector<ClassLabel>& classes,
    std::vector<ClassReference>& references, int kind) {
    std::vector<ClassReference> inhs;
    std::vector<ClassReference> users;
    for (const ClassReference& r : references) {
        (r.label == inh_label() ? inhs : users).push_back(r);
    }

    switch (kind) {
    case 0: { // subclass
        if (inhs.empty()) return std::nullopt;
        const ClassReference& r = inhs[pick(rng, inhs.size())];
        return SubClassConstraint{r.target, r.source};
    }
    case 1: { // abstract
        if (inhs.empty()) return std::nullopt;
        const ClassReference& r = inhs[pick(rng, inhs.size())];
        return IsAbstractConstraint{r.target};
    }
    case 2: { // lower
        if (users.empty()) return std::nullopt;
        const ClassReference& r = users[pick(rng, users.size())];
        std::uint64_t n = pick(rng, 3) == 0 ? 0 : 1;
        return LowerConstraint{r.source, r.label, ExtendedNat{n}};
    }
    case 3: { // upper
        if (users.empty()) return std::nullopt;
        const ClassReference& r = users[pick(rng, users.size())];
        switch (pick(rng, 3)) {
        case 0: return UpperConstraint{r.source, r.label, ExtendedNat{1}};
        case 1: return UpperConstraint{r.source, r.label, ExtendedNat{2}};
        default:
            return UpperConstraint{r.source, r.label, ExtendedNat::top()};
        }
    }
    case 4: { // opposite
        if (users.empty()) return std::nullopt;
        const ClassReference& fwd = users[pick(rng, users.size())];
        const ClassReference& any = users[pick(rng, users.size())];
        ClassReference transposed{fwd.target, any.label, fwd.source};
        if (std::find(references.begin(), references.end(), transposed) ==
            references.end()) {
            references.push_back(transposed);
        }
        return IsOppositeConstraint{fwd.label, any.label};
    }
    default: { // composite
        if (users.empty()) return std::nullopt;
        const ClassReference& r = users[pick(rng, users.size())];
        return AreCompositeConstraint{r.target, {r.label}};
    }
    }
}

} // namespace

MetaModel gen_metamodel(const GenConfig& cfg) {
    Rng rng(mix2(cfg.seed, 0xA11CEULL));

    std::uint32_t nclasses =
        1 + static_cast<std::uint32_t>(pick(rng, std::max(1u, cfg.max_classes)));
    std::vector<ClassLabel> classes;
    for (std::uint32_t i = 0; i < nclasses; ++i) classes.push_back(gen_class(i));

    std::vector<ClassReference> references;
    for (std::uint32_t i = 0; i < nclasses; ++i) {
        for (std::uint32_t j = 0; j < nclasses; ++j) {
            if (i != j && chance(rng, 0.35)) {
                references.push_back({classes[i], inh_label(), classes[j]});
            }
        }
    }
    std::uint32_t nrefs =
        static_cast<std::uint32_t>(pick(rng, cfg.max_references + 1));
    for (std::uint32_t k = 0; k < nrefs; ++k) {
        std::uint64_t ntriples = 1 + pick(rng, 2);
        for (std::uint64_t i = 0; i < ntriples; ++i) {
            references.push_back({classes[pick(rng, nclasses)],
                                  gen_reference(k),
                                  classes[pick(rng, nclasses)]});
        }
    }

    std::vector<SemanticConstraint> constraints;
    std::uint64_t want = pick(rng, 4);
    for (std::uint64_t i = 0; i < want; ++i) {
        auto k = sample_constraint(rng, classes,  references,
                                   static_cast<int>(pick(rng, 6)));
        if (k) constraints.push_back(*k);
    }

    return make_metamodel(std::move(classes), std::move(references),
                          std::move(constraints));
}

namespace {

// Appends one constraint of the theorem's kind (plus any reference it needs)
// when the sampled metamodel has none, so theorem trials are rarely vacuous.
MetaModel force_constraint_kind(const MetaModel& mm, TheoremId t,
                                std::uint64_t seed) {
    if (t == TheoremId::ValidBind) return mm;
    for (const SemanticConstraint& k : mm.constraints()) {
        if (constraint_matches(k, t)) return mm;
    }

    Rng rng(mix2(seed, 0xF0ECEULL));
    std::vector<ClassLabel> classes = mm.classes();
    std::vector<ClassReference> references = mm.references();

    if (t == TheoremId::SubClass || t == TheoremId::IsAbstract) {
        if (inh_references(mm).empty()) {
            const ClassLabel& child = classes.front();
            const ClassLabel& parent = classes.back();
            references.push_back({child, inh_label(), parent});
        }
    } else {
        if (user_references(mm).empty()) {
            references.push_back({classes.front(), gen_reference(0),
                                  classes[pick(rng, classes.size())]});
        }
    }

    int kind = 0;
    switch (t) {
    case TheoremId::SubClass: kind = 0; break;
    case TheoremId::IsAbstract: kind = 1; break;
    case TheoremId::Lower: kind = 2; break;
    case TheoremId::Upper: kind = 3; break;
    case TheoremId::IsOpposite: kind = 4; break;
    default: kind = 5; break;
    }
    std::vector<SemanticConstraint> constraints = mm.constraints();
    auto forced = sample_constraint(rng, classes, references, kind);
    if (forced) constraints.push_back(*forced);

    return make_metamodel(std::move(classes), std::move(references),
                          std::move(constraints));
}

// ---- repair-based conforming-model generation ----

struct Draft {
    std::set<TypedObject> vertices;
    std::set<ReferenceEdge> edges;

    void erase_vertex(const TypedObject& v) {
        vertices.erase(v);
        for (auto it = edges.begin(); it != edges.end();) {
            if (it->source == v || it->target == v) {
                it = edges.erase(it);
            } else {
                ++it;
            }
        }
    }

    std::vector<TypedObject> targets(const TypedObject& v,
                                     const ReferenceLabel& r) const {
        std::vector<TypedObject> out;
        for (const ReferenceEdge& e : edges) {
            if (e.source == v && e.label == r) out.push_back(e.target);
        }
        return out;
    }
};

struct Repairer {
    const MetaModel& mm;
    Draft& d;
    std::uint32_t fresh_counter = 0;
    std::uint32_t fresh_budget = 4;
    bool changed = false;

    bool allows(const ClassReference& r) const { return mm.has_reference(r); }

    void apply(const SemanticConstraint& k) {
        std::visit([this](const auto& c) { repair(c); }, k);
    }

    void repair(const SubClassConstraint& k) {
        std::vector<TypedObject> children;
        for (const TypedObject& v : d.vertices) {
            if (v.cls == k.child) children.push_back(v);
        }
        for (const TypedObject& v : children) {
            ReferenceEdge wanted{v, inh_label(), TypedObject{v.object, k.parent}};
            if (d.edges.count(wanted)) continue;
            if (allows({k.child, inh_label(), k.parent})) {
                d.vertices.insert(wanted.target);
                d.edges.insert(wanted);
            } else {
                d.erase_vertex(v);
            }
            changed = true;
        }
    }

    void repair(const IsAbstractConstraint& k) {
        std::vector<TypedObject> direct;
        for (const TypedObject& v : d.vertices) {
            if (v.cls != k.cls) continue;
            bool covered = false;
            for (const ReferenceEdge& e : d.edges) {
                if (e.label == inh_label() && e.target == v &&
                    e.source.object == v.object) {
                    covered = true;
                    break;
                }
            }
            if (!covered) direct.push_back(v);
        }
        for (const TypedObject& v : direct) {
            std::optional<ClassLabel> child;
            for (const ClassLabel& c : mm.classes()) {
                if (allows({c, inh_label(), k.cls}) && c != k.cls) {
                    child = c;
                    if (d.vertices.count(TypedObject{v.object, c})) break;
                }
            }
            if (child) {
                TypedObject src{v.object, *child};
                d.vertices.insert(src);
                d.edges.insert({src, inh_label(), v});
            } else {
                d.erase_vertex(v);
            }
            changed = true;
        }
    }

    void repair(const LowerConstraint& k) {
        if (k.bound.is_top()) {
            std::vector<TypedObject> doomed;
            for (const TypedObject& v : d.vertices) {
                if (v.cls == k.cls) doomed.push_back(v);
            }
            for (const TypedObject& v : doomed) {
                d.erase_vertex(v);
                changed = true;
            }
            return;
        }
        std::vector<TypedObject> instances;
        for (const TypedObject& v : d.vertices) {
            if (v.cls == k.cls) instances.push_back(v);
        }
        for (const TypedObject& v : instances) {
            auto targets = d.targets(v, k.reference);
            if (targets.size() >= k.bound.value()) continue;
            std::uint64_t missing = k.bound.value() - targets.size();
            // First link existing vertices of an allowed target class.
            for (const TypedObject& w : d.vertices) {
                if (missing == 0) break;
                if (!allows({k.cls, k.reference, w.cls})) continue;
                ReferenceEdge e{v, k.reference, w};
                if (d.edges.count(e)) continue;
                d.edges.insert(e);
                --missing;
                changed = true;
            }
            // Then mint fresh targets, within budget.
            while (missing > 0 && fresh_counter < fresh_budget) {
                std::optional<ClassLabel> tc;
                for (const ClassLabel& c : mm.classes()) {
                    if (allows({k.cls, k.reference, c})) {
                        tc = c;
                        break;
                    }
                }
                if (!tc) break;
                TypedObject w{ObjectLabel{"x" + std::to_string(fresh_counter++)},
                              *tc};
                d.vertices.insert(w);
                d.edges.insert({v, k.reference, w});
                --missing;
                changed = true;
            }
            if (missing > 0) {
                d.erase_vertex(v);
                changed = true;
            }
        }
    }

    void repair(const UpperConstraint& k) {
        if (k.bound.is_top()) return;
        for (const TypedObject& v : d.vertices) {
            if (v.cls != k.cls) continue;
            auto targets = d.targets(v, k.reference);
            for (std::size_t i = k.bound.value(); i < targets.size(); ++i) {
                d.edges.erase({v, k.reference, targets[i]});
                changed = true;
            }
        }
    }

    void repair(const IsOppositeConstraint& k) {
        std::vector<ReferenceEdge> snapshot(d.edges.begin(), d.edges.end());
        for (const ReferenceEdge& e : snapshot) {
            if (e.label != k.forward && e.label != k.backward) continue;
            const ReferenceLabel& other =
                e.label == k.forward ? k.backward : k.forward;
            ReferenceEdge transposed{e.target, other, e.source};
            if (d.edges.count(transposed)) continue;
            if (allows({e.target.cls, other, e.source.cls})) {
                d.edges.insert(transposed);
            } else {
                d.edges.erase(e);
            }
            changed = true;
        }
    }

    void repair(const AreCompositeConstraint& k) {
        for (const TypedObject& v : d.vertices) {
            if (v.cls != k.cls) continue;
            std::vector<ReferenceEdge> incoming;
            for (const ReferenceEdge& e : d.edges) {
                if (e.target == v &&
                    std::find(k.references.begin(), k.references.end(),
                              e.label) != k.references.end()) {
                    incoming.push_back(e);
                }
            }
            if (incoming.empty()) continue;
            const TypedObject& keeper = incoming.front().source;
            for (const ReferenceEdge& e : incoming) {
                if (e.source != keeper) {
                    d.edges.erase(e);
                    changed = true;
                }
            }
        }
    }
};

} // namespace

Model gen_conforming_model(const MetaModel& mm, const GenConfig& cfg) {
    Rng rng(mix2(cfg.seed, 0xC0DEULL));
    Draft d;

    if (!mm.classes().empty() && cfg.max_objects > 0) {
        std::uint64_t nobjects = pick(rng, cfg.max_objects + 1);
        for (std::uint64_t i = 0; i < nobjects; ++i) {
            std::uint64_t nclasses = 1 + pick(rng, 2);
            for (std::uint64_t j = 0; j < nclasses; ++j) {
                d.vertices.insert(
                    {gen_object(static_cast<std::uint32_t>(i)),
                     mm.classes()[pick(rng, mm.classes().size())]});
            }
        }
        for (const TypedObject& u : d.vertices) {
            for (const TypedObject& v : d.vertices) {
                for (const ClassReference& r : mm.references()) {
                    if (r.source == u.cls && r.target == v.cls &&
                        chance(rng, cfg.edge_density)) {
                        d.edges.insert({u, r.label, v});
                    }
                }
            }
        }
    }

    Repairer rep{mm, d};
    for (int iter = 0; iter < 16; ++iter) {
        rep.changed = false;
        for (const SemanticConstraint& k : mm.constraints()) {
            rep.apply(k);
        }
        if (!rep.changed) break;
    }

    std::vector<TypedObject> vertices(d.vertices.begin(), d.vertices.end());
    std::vector<ReferenceEdge> edges(d.edges.begin(), d.edges.end());

    std::vector<TypedObject> hooks;
    std::vector<TypedObject> prototypes;
    if (vertices.size() >= 2) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            (i % 2 == 0 ? hooks : prototypes).push_back(vertices[i]);
        }
    } else if (vertices.size() == 1) {
        prototypes.push_back(vertices.front());
    }

    Model out = make_model(std::move(vertices), std::move(edges),
                           std::move(hooks), std::move(prototypes));
    if (!conforms_to(out, mm).conforms) {
        // Unsatisfiable at these bounds; the empty model conforms vacuously.
        return Model{};
    }
    return out;
}

bool is_theorem_violation(TheoremId t, const MetaModel& mm, const Model& m1,
                          const Model& m2, const TypedObject& o1,
                          const TypedObject& o2,
                          const std::optional<SemanticConstraint>& property,
                          bool enforce_freshness) {
    PreconditionReport pre = check_bind_preconditions(o1, o2, m1, m2);
    if (enforce_freshness && freshness_applies(t) && !pre.holds_for(t)) {
        return false;
    }

    if (t == TheoremId::ValidBind) {
        if (!instance_of(m1, mm) || !instance_of(m2, mm)) return false;
        return !instance_of(bind(o1, o2, m1, m2), mm);
    }

    if (!property || !constraint_matches(*property, t)) return false;
    if (!check_constraint(*property, m1) || !check_constraint(*property, m2)) {
        return false;
    }
    return !check_constraint(*property, bind(o1, o2, m1, m2));
}

namespace {

Model without_edge(const Model& m, std::size_t index) {
    std::vector<ReferenceEdge> edges = m.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
    return make_model(m.vertices(), std::move(edges), m.hooks(),
                      m.prototypes());
}

Model without_vertex(const Model& m, const TypedObject& v) {
    auto keep = [&](const TypedObject& x) { return x != v; };
    std::vector<TypedObject> vertices;
    std::copy_if(m.vertices().begin(), m.vertices().end(),
                 std::back_inserter(vertices), keep);
    std::vector<ReferenceEdge> edges;
    std::copy_if(m.edges().begin(), m.edges().end(), std::back_inserter(edges),
                 [&](const ReferenceEdge& e) {
                     return e.source != v && e.target != v;
                 });
    std::vector<TypedObject> hooks;
    std::copy_if(m.hooks().begin(), m.hooks().end(), std::back_inserter(hooks),
                 keep);
    std::vector<TypedObject> prototypes;
    std::copy_if(m.prototypes().begin(), m.prototypes().end(),
                 std::back_inserter(prototypes), keep);
    return make_model(std::move(vertices), std::move(edges), std::move(hooks),
                      std::move(prototypes));
}

} // namespace

Counterexample shrink_counterexample(TheoremId t, Counterexample ce,
                                     bool enforce_freshness) {
    auto still_fails = [&](const Model& a, const Model& b) {
        return is_theorem_violation(t, ce.metamodel, a, b, ce.o1, ce.o2,
                                    ce.property, enforce_freshness);
    };

    // Edges before vertices; m1 before m2; deterministic label order.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ce.m1.edges().size(); ++i) {
            Model candidate = without_edge(ce.m1, i);
            if (still_fails(candidate, ce.m2)) {
                ce.m1 = std::move(candidate);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (std::size_t i = 0; i < ce.m2.edges().size(); ++i) {
            Model candidate = without_edge(ce.m2, i);
            if (still_fails(ce.m1, candidate)) {
                ce.m2 = std::move(candidate);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (const TypedObject& v : ce.m1.vertices()) {
            Model candidate = without_vertex(ce.m1, v);
            if (still_fails(candidate, ce.m2)) {
                ce.m1 = std::move(candidate);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (const TypedObject& v : ce.m2.vertices()) {
            Model candidate = without_vertex(ce.m2, v);
            if (still_fails(ce.m1, candidate)) {
                ce.m2 = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    ce.shrunk = true;
    return ce;
}

namespace {

std::optional<std::pair<TypedObject, TypedObject>> pick_pair(
    TheoremId t, const Model& m1, const Model& m2, bool enforce_freshness) {
    for (const TypedObject& h : m1.hooks()) {
        for (const TypedObject& p : m2.prototypes()) {
            if (h.cls != p.cls) continue;
            PreconditionReport pre = check_bind_preconditions(h, p, m1, m2);
            if (enforce_freshness) {
                if (freshness_applies(t) && !pre.holds_for(t)) continue;
            } else {
                // Necessity hunting: only non-fresh prototypes can break
                // anything, so skip the fresh pairs.
                if (pre.prototype_fresh) continue;
            }
            return std::make_pair(h, p);
        }
    }
    return std::nullopt;
}

} // namespace

HarnessReport run_theorem(TheoremId t, std::uint64_t trials,
                          const GenConfig& cfg) {
    HarnessReport report{t};
    for (std::uint64_t i = 0; i < trials; ++i) {
        std::uint64_t s =
            mix2(cfg.seed, 0x7E0 + 31 * static_cast<std::uint64_t>(
                                            theorem_index(t)) + 7919 * i);
        GenConfig mmcfg = cfg;
        mmcfg.seed = mix2(s, 1);
        MetaModel mm = force_constraint_kind(gen_metamodel(mmcfg), t,
                                             mix2(s, 2));

        GenConfig c1 = cfg;
        c1.seed = mix2(s, 3);
        Model m1 = gen_conforming_model(mm, c1);
        GenConfig c2 = cfg;
        c2.seed = mix2(s, 4);
        Model m2 = gen_conforming_model(mm, c2);

        ++report.trials_run;

        auto pair = pick_pair(t, m1, m2, cfg.enforce_freshness);
        if (!pair) continue;

        std::optional<SemanticConstraint> property;
        if (t != TheoremId::ValidBind) {
            for (const SemanticConstraint& k : mm.constraints()) {
                if (constraint_matches(k, t)) {
                    property = k;
                    break;
                }
            }
            if (!property) continue;
        }

        if (is_theorem_violation(t, mm, m1, m2, pair->first, pair->second,
                                 property, cfg.enforce_freshness)) {
            Counterexample ce{mm, m1, m2, pair->first, pair->second, property,
                              false};
            report.counterexample = shrink_counterexample(
                t, std::move(ce), cfg.enforce_freshness);
            report.passed = false;
            break;
        }
    }
    return report;
}

std::vector<HarnessReport> run_all(std::uint64_t trials, const GenConfig& cfg) {
    std::vector<HarnessReport> reports;
    reports.reserve(kAllTheorems.size());
    for (TheoremId t : kAllTheorems) {
        reports.push_back(run_theorem(t, trials, cfg));
    }
    return reports;
}

} // namespace mdweave
