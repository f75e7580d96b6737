#ifndef mdweave_harness_hpp
#define mdweave_harness_hpp

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mdweave/compose.hpp"
#include "mdweave/conformance.hpp"
#include "mdweave/metamodel.hpp"
#include "mdweave/model.hpp"

namespace mdweave {

struct GenConfig {
    std::uint32_t max_objects = 4;
    std::uint32_t max_classes = 3;
    std::uint32_t max_references = 2;
    double edge_density = 0.3;
    std::uint64_t seed = 0;
    // When false, theorem trials deliberately pick non-fresh prototypes to
    // search for precondition-necessity counterexamples.
    bool enforce_freshness = true;
};

struct Counterexample {
    MetaModel metamodel;
    Model m1;
    Model m2;
    TypedObject o1;
    TypedObject o2;
    // Absent for ValidBind, whose conclusion is structural typing itself.
    std::optional<SemanticConstraint> property;
    bool shrunk = false;
};

struct HarnessReport {
    TheoremId theorem;
    std::uint64_t trials_run = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

// Deterministic in cfg.seed: a metamodel within the cfg bounds whose sampled
// constraints are each satisfiable by at least the empty model.
MetaModel gen_metamodel(const GenConfig& cfg);

// Deterministic in (mm, cfg.seed). Output conforms to mm; built by sampling
// then repairing (adding mandated inh edges, pruning multiplicity overflows)
// rather than rejection. Falls back to the empty model when repair cannot
// reach conformance within its iteration budget.
Model gen_conforming_model(const MetaModel& mm, const GenConfig& cfg);

// The executable theorem statement: true iff (m1, m2, o1, o2, property) is a
// genuine counterexample to theorem t — hypothesis and (when enforced) the
// theorem's preconditions hold, and the conclusion fails on the bind result.
bool is_theorem_violation(TheoremId t, const MetaModel& mm, const Model& m1,
                          const Model& m2, const TypedObject& o1,
                          const TypedObject& o2,
                          const std::optional<SemanticConstraint>& property,
                          bool enforce_freshness);

// Greedy minimization: removes edges, then vertices, from both models while
// the violation persists. The result still violates the theorem and no single
// further removal does.
Counterexample shrink_counterexample(TheoremId t, Counterexample ce,
                                     bool enforce_freshness);

// Runs `trials` independent randomized trials of theorem t; reports the
// first (shrunk) counterexample if any. Deterministic in (t, trials, cfg).
HarnessReport run_theorem(TheoremId t, std::uint64_t trials,
                          const GenConfig& cfg);

// One report per theorem, with per-theorem seeds derived from cfg.seed by a
// fixed split, so results are independent of execution order.
std::vector<HarnessReport> run_all(std::uint64_t trials, const GenConfig& cfg);

// Bounds of the exhaustively enumerated model universe.
struct UniverseConfig {
    std::uint32_t object_labels = 3;   // a, b, c
    std::uint32_t classes = 2;         // C, D
    std::uint32_t user_references = 1; // r, besides inh
    std::uint32_t max_vertices = 3;
    std::uint32_t max_edges = 6;
};

// Enumerates every model (without roles) in the universe, exactly once.
void for_each_universe_model(const UniverseConfig& u,
                             const std::function<void(const Model&)>& fn);

struct SweepModeResult {
    std::uint64_t counterexamples = 0;
    std::optional<Counterexample> first;
};

// One pass over the whole universe, checking every theorem in both modes:
// results[theorem][0] has the theorem's preconditions enforced,
// results[theorem][1] ignores prototype freshness (necessity probing).
struct ExhaustiveSweep {
    std::uint64_t models = 0;
    std::uint64_t binds = 0;
    std::array<std::array<SweepModeResult, 2>, 7> results;
};

// Checks each theorem on every (m1, o1, o2) in the universe, with a minimal
// single-prototype m2 realizing the guard for each candidate pair.
ExhaustiveSweep exhaustive_sweep(const UniverseConfig& u = {});

struct ExhaustiveResult {
    std::uint64_t counterexamples = 0;
    std::optional<Counterexample> first;
};

// Single-theorem view of exhaustive_sweep.
ExhaustiveResult exhaustive_check(TheoremId t, bool enforce_freshness,
                                  const UniverseConfig& u = {});

// All constraint instances over the universe's labels for one theorem kind.
std::vector<SemanticConstraint> universe_constraints(TheoremId t,
                                                     const UniverseConfig& u);

} // namespace mdweave

#endif
