#include <benchmark/benchmark.h>

#include "mdweave/compose.hpp"
#include "mdweave/conformance.hpp"
#include "mdweave/document.hpp"
#include "mdweave/harness.hpp"

using namespace mdweave;

namespace {

// A chain-heavy model: n objects, each with a 3-class inheritance chain and a
// few r edges, hook on the first vertex.
Model chain_model(int n) {
    std::vector<TypedObject> vs;
    std::vector<ReferenceEdge> es;
    for (int i = 0; i < n; ++i) {
        ObjectLabel o{"o" + std::to_string(i)};
        TypedObject a{o, ClassLabel{"C"}};
        TypedObject b{o, ClassLabel{"Csup"}};
        TypedObject c{o, ClassLabel{"Cssup"}};
        vs.insert(vs.end(), {a, b, c});
        es.push_back({a, inh_label(), b});
        es.push_back({b, inh_label(), c});
        if (i > 0) {
            es.push_back({a, ReferenceLabel{"r"},
                          {ObjectLabel{"o" + std::to_string(i - 1)},
                           ClassLabel{"C"}}});
        }
    }
    return make_model(vs, es, {{ObjectLabel{"o0"}, ClassLabel{"C"}}}, {});
}

MetaModel chain_metamodel() {
    ClassLabel c{"C"}, cs{"Csup"}, css{"Cssup"};
    return make_metamodel(
        {c, cs, css},
        {{c, inh_label(), cs}, {cs, inh_label(), css}, {c, ReferenceLabel{"r"}, c}},
        {SubClassConstraint{cs, c}, SubClassConstraint{css, cs},
         UpperConstraint{c, ReferenceLabel{"r"}, ExtendedNat{1}}});
}

void BM_bind(benchmark::State& state) {
    Model m1 = chain_model(static_cast<int>(state.range(0)));
    TypedObject o1{ObjectLabel{"o0"}, ClassLabel{"C"}};
    TypedObject o2{ObjectLabel{"fresh"}, ClassLabel{"C"}};
    Model m2 = make_model({o2}, {}, {}, {o2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(bind(o1, o2, m1, m2));
    }
}
BENCHMARK(BM_bind)->Arg(8)->Arg(64)->Arg(512);

void BM_conforms_to(benchmark::State& state) {
    Model m = chain_model(static_cast<int>(state.range(0)));
    MetaModel mm = chain_metamodel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(conforms_to(m, mm));
    }
}
BENCHMARK(BM_conforms_to)->Arg(8)->Arg(64)->Arg(512);

void BM_gen_conforming_model(benchmark::State& state) {
    GenConfig cfg;
    cfg.seed = 7;
    MetaModel mm = gen_metamodel(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_conforming_model(mm, cfg));
    }
}
BENCHMARK(BM_gen_conforming_model);

void BM_model_roundtrip(benchmark::State& state) {
    Model m = chain_model(64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_model(serialize_model(m)));
    }
}
BENCHMARK(BM_model_roundtrip);

} // namespace

BENCHMARK_MAIN();
