#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "mdweave/harness.hpp"

namespace mdweave {

namespace {

ObjectLabel universe_object(std::uint32_t i) {
    static const char* names[] = {"a", "b", "c", "d", "e", "f"};
    if (i < 6) return ObjectLabel{names[i]};
    return ObjectLabel{"u" + std::to_string(i)};
}

ClassLabel universe_class(std::uint32_t i) {
    static const char* names[] = {"C", "D", "E", "F"};
    if (i < 4) return ClassLabel{names[i]};
    return ClassLabel{"U" + std::to_string(i)};
}

std::vector<ReferenceLabel> universe_references(const UniverseConfig& u) {
    std::vector<ReferenceLabel> refs{inh_label()};
    static const char* names[] = {"r", "s", "t"};
    for (std::uint32_t i = 0; i < u.user_references; ++i) {
        refs.push_back(i < 3 ? ReferenceLabel{names[i]}
                             : ReferenceLabel{"w" + std::to_string(i)});
    }
    return refs;
}

std::vector<ClassLabel> universe_classes(const UniverseConfig& u) {
    std::vector<ClassLabel> out;
    for (std::uint32_t i = 0; i < u.classes; ++i) out.push_back(universe_class(i));
    return out;
}

} // namespace

std::vector<SemanticConstraint> universe_constraints(TheoremId t,
                                                     const UniverseConfig& u) {
    const std::vector<ClassLabel> classes = universe_classes(u);
    const std::vector<ReferenceLabel> refs = universe_references(u);
    const std::vector<ExtendedNat> bounds{ExtendedNat{0}, ExtendedNat{1},
                                          ExtendedNat{2}, ExtendedNat{3},
                                          ExtendedNat::top()};

    std::vector<SemanticConstraint> out;
    switch (t) {
    case TheoremId::ValidBind:
        break;
    case TheoremId::SubClass:
        for (const ClassLabel& parent : classes) {
            for (const ClassLabel& child : classes) {
                out.push_back(SubClassConstraint{parent, child});
            }
        }
        break;
    case TheoremId::IsAbstract:
        for (const ClassLabel& c : classes) {
            out.push_back(IsAbstractConstraint{c});
        }
        break;
    case TheoremId::Lower:
        for (const ClassLabel& c : classes) {
            for (const ReferenceLabel& r : refs) {
                for (ExtendedNat n : bounds) {
                    out.push_back(LowerConstraint{c, r, n});
                }
            }
        }
        break;
    case TheoremId::Upper:
        for (const ClassLabel& c : classes) {
            for (const ReferenceLabel& r : refs) {
                for (ExtendedNat n : bounds) {
                    out.push_back(UpperConstraint{c, r, n});
                }
            }
        }
        break;
    case TheoremId::IsOpposite:
        for (const ReferenceLabel& r1 : refs) {
            for (const ReferenceLabel& r2 : refs) {
                out.push_back(IsOppositeConstraint{r1, r2});
            }
        }
        break;
    case TheoremId::AreComposite:
        for (const ClassLabel& c : classes) {
            // Non-empty reference subsets, in subset-mask order.
            for (std::uint32_t mask = 1; mask < (1u << refs.size()); ++mask) {
                std::vector<ReferenceLabel> subset;
                for (std::size_t i = 0; i < refs.size(); ++i) {
                    if (mask & (1u << i)) subset.push_back(refs[i]);
                }
                out.push_back(AreCompositeConstraint{c, std::move(subset)});
            }
        }
        break;
    }
    return out;
}

void for_each_universe_model(const UniverseConfig& u,
                             const std::function<void(const Model&)>& fn) {
    std::vector<TypedObject> all_vertices;
    for (std::uint32_t o = 0; o < u.object_labels; ++o) {
        for (std::uint32_t c = 0; c < u.classes; ++c) {
            all_vertices.push_back({universe_object(o), universe_class(c)});
        }
    }
    std::sort(all_vertices.begin(), all_vertices.end());
    const std::vector<ReferenceLabel> refs = universe_references(u);

    const std::uint32_t n = static_cast<std::uint32_t>(all_vertices.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::uint32_t>(std::popcount(mask)) > u.max_vertices) {
            continue;
        }
        std::vector<TypedObject> vertices;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) vertices.push_back(all_vertices[i]);
        }

        std::vector<ReferenceEdge> candidates;
        for (const TypedObject& src : vertices) {
            for (const TypedObject& dst : vertices) {
                for (const ReferenceLabel& r : refs) {
                    candidates.push_back({src, r, dst});
                }
            }
        }

        const std::size_t limit =
            std::min<std::size_t>(candidates.size(), u.max_edges);
        for (std::size_t k = 0; k <= limit; ++k) {
            std::vector<std::size_t> idx(k);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::vector<ReferenceEdge> edges;
                edges.reserve(k);
                for (std::size_t i : idx) edges.push_back(candidates[i]);
                fn(make_model(vertices, std::move(edges)));

                // next k-combination of candidate indices
                std::size_t i = k;
                while (i > 0 &&
                       idx[i - 1] == candidates.size() - (k - (i - 1))) {
                    --i;
                }
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
            if (k == 0 && candidates.empty()) break;
        }
    }
}

namespace {

MetaModel minimal_metamodel(const Model& m) {
    std::vector<ClassLabel> classes;
    for (const TypedObject& v : m.vertices()) classes.push_back(v.cls);
    std::vector<ClassReference> references;
    for (const ReferenceEdge& e : m.edges()) {
        references.push_back({e.source.cls, e.label, e.target.cls});
    }
    return make_metamodel(std::move(classes), std::move(references));
}

struct SweepState {
    const UniverseConfig& u;
    ExhaustiveSweep& sweep;
    // per theorem: its property instances and scratch caches
    std::array<std::vector<SemanticConstraint>, 7> props;
    std::array<std::vector<char>, 7> holds_on_m1;
    // property values on a single-vertex, edge-free model, per vertex class
    std::array<std::vector<std::vector<char>>, 7> holds_on_proto;

    explicit SweepState(const UniverseConfig& u_, ExhaustiveSweep& sweep_)
        : u(u_), sweep(sweep_) {
        for (TheoremId t : kAllTheorems) {
            auto i = static_cast<std::size_t>(t);
            props[i] = universe_constraints(t, u);
            holds_on_m1[i].resize(props[i].size());
            holds_on_proto[i].resize(u.classes);
            for (std::uint32_t c = 0; c < u.classes; ++c) {
                TypedObject v{universe_object(0), universe_class(c)};
                Model proto = make_model({v}, {}, {}, {v});
                for (const SemanticConstraint& k : props[i]) {
                    holds_on_proto[i][c].push_back(
                        check_constraint(k, proto) ? 1 : 0);
                }
            }
        }
    }

    void record(TheoremId t, int mode, const MetaModel& mm, const Model& m1,
                const Model& m2, const TypedObject& o1, const TypedObject& o2,
                const std::optional<SemanticConstraint>& prop) {
        auto& slot = sweep.results[static_cast<std::size_t>(t)][mode];
        ++slot.counterexamples;
        if (!slot.first) {
            slot.first = Counterexample{mm, m1, m2, o1, o2, prop, false};
        }
    }

    void visit(const Model& base) {
        ++sweep.models;
        for (std::size_t t = 1; t < 7; ++t) {
            for (std::size_t i = 0; i < props[t].size(); ++i) {
                holds_on_m1[t][i] =
                    check_constraint(props[t][i], base) ? 1 : 0;
            }
        }
        MetaModel mm_min = minimal_metamodel(base);

        std::vector<std::uint32_t> class_index(base.vertices().size());
        for (std::size_t i = 0; i < base.vertices().size(); ++i) {
            for (std::uint32_t c = 0; c < u.classes; ++c) {
                if (base.vertices()[i].cls == universe_class(c)) {
                    class_index[i] = c;
                }
            }
        }

        for (std::size_t vi = 0; vi < base.vertices().size(); ++vi) {
            const TypedObject& o1 = base.vertices()[vi];
            Model m1 = make_model(base.vertices(), base.edges(), {o1}, {});
            bool fresh_done = false;

            for (std::uint32_t oi = 0; oi <= u.object_labels; ++oi) {
                // The last index is a label outside the universe pool.
                ObjectLabel o2_label =
                    oi < u.object_labels ? universe_object(oi)
                                         : ObjectLabel{"z"};
                if (o2_label == o1.object) continue; // identity rename
                bool fresh = std::none_of(
                    base.vertices().begin(), base.vertices().end(),
                    [&](const TypedObject& v) { return v.object == o2_label; });
                if (fresh) {
                    // All fresh targets give isomorphic results; one is enough.
                    if (fresh_done) continue;
                    fresh_done = true;
                }

                TypedObject o2{o2_label, o1.cls};
                Model m2 = make_model({o2}, {}, {}, {o2});
                Model result = bind(o1, o2, m1, m2);
                ++sweep.binds;

                if (!instance_of(result, mm_min)) {
                    record(TheoremId::ValidBind, 0, mm_min, m1, m2, o1, o2,
                           std::nullopt);
                    record(TheoremId::ValidBind, 1, mm_min, m1, m2, o1, o2,
                           std::nullopt);
                }

                for (std::size_t t = 1; t < 7; ++t) {
                    TheoremId theorem = static_cast<TheoremId>(t);
                    const auto& proto_cache =
                        holds_on_proto[t][class_index[vi]];
                    for (std::size_t i = 0; i < props[t].size(); ++i) {
                        if (!holds_on_m1[t][i]) continue;
                        if (!proto_cache[i]) continue;
                        if (check_constraint(props[t][i], result)) continue;
                        record(theorem, 1, mm_min, m1, m2, o1, o2,
                               props[t][i]);
                        if (!freshness_applies(theorem) || fresh) {
                            record(theorem, 0, mm_min, m1, m2, o1, o2,
                                   props[t][i]);
                        }
                    }
                }
            }
        }
    }
};

} // namespace

ExhaustiveSweep exhaustive_sweep(const UniverseConfig& u) {
    ExhaustiveSweep sweep;
    SweepState state(u, sweep);
    for_each_universe_model(u, [&](const Model& m) { state.visit(m); });
    return sweep;
}

ExhaustiveResult exhaustive_check(TheoremId t, bool enforce_freshness,
                                  const UniverseConfig& u) {
    ExhaustiveSweep sweep = exhaustive_sweep(u);
    const auto& slot =
        sweep.results[static_cast<std::size_t>(t)][enforce_freshness ? 0 : 1];
    return ExhaustiveResult{slot.counterexamples, slot.first};
}

} // namespace mdweave
