#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mdweave/document.hpp"
#include "mdweave/errors.hpp"
#include "mdweave/harness.hpp"

namespace fs = std::filesystem;
using namespace mdweave;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

RenderFormat parse_format(const std::string& s) {
    return s == "pretty" ? RenderFormat::Pretty : RenderFormat::Canonical;
}

// Preservation theorems whose preconditions matter for this composition:
// ValidBind always, the rest when the metamodel declares a constraint of the
// matching kind. Their preconditions are the residual verification the tool
// insists on before calling a composition safe.
bool applicable_preconditions_hold(const PreconditionReport& report,
                                   const MetaModel& mm) {
    if (!report.holds_for(TheoremId::ValidBind)) return false;
    for (const SemanticConstraint& k : mm.constraints()) {
        TheoremId t = std::visit(
            [](const auto& c) -> TheoremId {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, SubClassConstraint>) {
                    return TheoremId::SubClass;
                } else if constexpr (std::is_same_v<T, IsAbstractConstraint>) {
                    return TheoremId::IsAbstract;
                } else if constexpr (std::is_same_v<T, LowerConstraint>) {
                    return TheoremId::Lower;
                } else if constexpr (std::is_same_v<T, UpperConstraint>) {
                    return TheoremId::Upper;
                } else if constexpr (std::is_same_v<T, IsOppositeConstraint>) {
                    return TheoremId::IsOpposite;
                } else {
                    return TheoremId::AreComposite;
                }
            },
            k);
        if (!report.holds_for(t)) return false;
    }
    return true;
}

int run_compose(const fs::path& program_path, RenderFormat fmt) {
    CompositionProgram prog = parse_program(read_file(program_path));
    const fs::path base = program_path.parent_path();
    Model m1 = parse_model(read_file(base / prog.model1));
    Model m2 = parse_model(read_file(base / prog.model2));
    MetaModel mm = parse_metamodel(read_file(base / prog.metamodel));

    Model result;
    std::optional<PreconditionReport> pre;
    switch (prog.op) {
    case OperatorKind::Bind:
        pre = check_bind_preconditions(prog.pairs[0].first,
                                       prog.pairs[0].second, m1, m2);
        result = bind(prog.pairs[0].first, prog.pairs[0].second, m1, m2);
        break;
    case OperatorKind::NaiveBind:
        pre = check_bind_preconditions(prog.pairs[0].first,
                                       prog.pairs[0].second, m1, m2);
        result = naive_bind(prog.pairs[0].first, prog.pairs[0].second, m1, m2);
        break;
    case OperatorKind::BindMany:
        pre = check_bind_many_preconditions(m1, m2, prog.pairs);
        result = bind_many(m1, m2, prog.pairs);
        break;
    case OperatorKind::ExtendDisjoint:
        result = extend_disjoint(m1, m2);
        break;
    case OperatorKind::ExtendOverlapping:
        result = extend_overlapping(m1, m2);
        break;
    }

    if (!prog.output.empty()) {
        write_file(base / prog.output, serialize_model(result));
    }

    std::cout << "operator " << operator_name(prog.op) << '\n';
    bool pre_ok = true;
    if (pre) {
        std::cout << render_precondition_report(*pre, fmt);
        pre_ok = applicable_preconditions_hold(*pre, mm);
    }
    ConformanceReport conf = conforms_to(result, mm);
    std::cout << render_conformance_report(conf, fmt);

    return conf.conforms && pre_ok ? kExitOk : kExitViolation;
}

int run_check(const fs::path& model_path, const fs::path& mm_path,
              RenderFormat fmt) {
    Model m = parse_model(read_file(model_path));
    MetaModel mm = parse_metamodel(read_file(mm_path));
    ConformanceReport conf = conforms_to(m, mm);
    std::cout << render_conformance_report(conf, fmt);
    return conf.conforms ? kExitOk : kExitViolation;
}

std::optional<TheoremId> theorem_by_name(const std::string& name) {
    for (TheoremId t : kAllTheorems) {
        if (theorem_name(t) == name) return t;
    }
    return std::nullopt;
}

int run_falsify(const std::string& theorem, std::uint64_t trials,
                std::uint64_t seed, bool no_freshness, RenderFormat fmt) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.enforce_freshness = !no_freshness;

    std::vector<HarnessReport> reports;
    if (theorem == "all") {
        reports = run_all(trials, cfg);
    } else {
        std::optional<TheoremId> t = theorem_by_name(theorem);
        if (!t) {
            std::cerr << "unknown theorem `" << theorem << "`\n";
            return kExitUsage;
        }
        reports.push_back(run_theorem(*t, trials, cfg));
    }

    bool all_passed = true;
    for (const HarnessReport& r : reports) {
        std::cout << render_harness_report(r, seed, fmt);
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitViolation;
}

int run_demo(const std::string& name, const fs::path& dir, RenderFormat fmt) {
    static const std::map<std::string, fs::path> demos = {
        {"fig-inconsistency-corrected", "fig-inconsistency/corrected.program"},
        {"fig-inconsistency-naive", "fig-inconsistency/naive.program"},
        {"reuseware-fsfolder", "reuseware-fsfolder/weave.program"},
    };
    auto it = demos.find(name);
    if (it == demos.end()) {
        std::cerr << "unknown demo `" << name << "`\n";
        return kExitUsage;
    }
    return run_compose(dir / it->second, fmt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"model composition with checked preservation theorems"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "canonical";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"canonical", "pretty"}));

    std::string program_path;
    CLI::App* compose = app.add_subcommand(
        "compose", "run a composition program and check the result");
    compose->add_option("program", program_path, "composition program file")
        ->required();

    std::string model_path, metamodel_path;
    CLI::App* check =
        app.add_subcommand("check", "check a model against a metamodel");
    check->add_option("model", model_path, "model file")->required();
    check->add_option("metamodel", metamodel_path, "metamodel file")
        ->required();

    std::string theorem;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    bool no_freshness = false;
    CLI::App* falsify = app.add_subcommand(
        "falsify", "search for counterexamples to a preservation theorem");
    falsify->add_option("theorem", theorem, "theorem name or `all`")
        ->required();
    falsify->add_option("--trials", trials, "randomized trials per theorem");
    falsify->add_option("--seed", seed, "root random seed");
    falsify->add_flag("--no-freshness", no_freshness,
                      "drop the prototype-freshness precondition");

    std::string demo_name;
    std::string demo_dir = "demos";
    CLI::App* demo = app.add_subcommand("demo", "run a bundled scenario");
    demo->add_option("name", demo_name, "demo name")->required();
    demo->add_option("--dir", demo_dir, "demo fixtures directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RenderFormat fmt = parse_format(format);
    try {
        if (compose->parsed()) return run_compose(program_path, fmt);
        if (check->parsed()) {
            return run_check(model_path, metamodel_path, fmt);
        }
        if (falsify->parsed()) {
            return run_falsify(theorem, trials, seed, no_freshness, fmt);
        }
        return run_demo(demo_name, demo_dir, fmt);
    } catch (const NotDisjoint& e) {
        std::cerr << "precondition failure: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
