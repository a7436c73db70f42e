#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mteam/error.hpp"
#include "mteam/eval.hpp"
#include "mteam/io.hpp"
#include "mteam/props.hpp"
#include "mteam/reductions.hpp"

namespace fs = std::filesystem;
using namespace mteam;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct ModeFlags {
    std::string team_kind = "multi";
    std::string strictness = "lax";
    std::string approx = "ratio";

    SemanticsConfig config() const {
        SemanticsConfig cfg;
        cfg.team_kind = team_kind == "set" ? TeamKind::Set : TeamKind::Multi;
        cfg.strictness = strictness == "strict" ? Strictness::Strict : Strictness::Lax;
        cfg.approx_kind = approx == "absolute" ? ApproxKind::Absolute : ApproxKind::Ratio;
        return cfg;
    }
};

void add_mode_flags(CLI::App* cmd, ModeFlags& m) {
    cmd->add_option("--team-kind", m.team_kind, "set or multi")
        ->check(CLI::IsMember({"set", "multi"}))
        ->envname("MTEAM_TEAM_KIND");
    cmd->add_option("--strictness", m.strictness, "lax or strict")
        ->check(CLI::IsMember({"lax", "strict"}))
        ->envname("MTEAM_STRICTNESS");
    cmd->add_option("--approx", m.approx, "ratio or absolute thresholds")
        ->check(CLI::IsMember({"ratio", "absolute"}))
        ->envname("MTEAM_APPROX");
}

// A formula argument naming an existing file is read from it.
Formula formula_arg(const std::string& arg) {
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) return parse(read_file(arg));
    return parse(arg);
}

void print_witness(const std::vector<WitnessStep>& steps) {
    std::cout << "witness:\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        std::cout << "step " << i + 1 << ": " << node_name(s.formula) << "  " << print(s.formula) << '\n';
        std::cout << "team:\n" << dump_multiteam(s.team);
        for (std::size_t j = 0; j < s.parts.size(); ++j)
            std::cout << "part " << j + 1 << ":\n" << dump_multiteam(s.parts[j]);
    }
}

struct CheckArgs {
    std::vector<std::string> positional;
    ModeFlags modes;
    bool witness = false;
    bool no_memo = false;
    std::uint64_t step_limit = 0;
};

int run_check(const CheckArgs& a) {
    // STRUCTURE FORMULA, or STRUCTURE TEAM FORMULA; a team of "-" means {∅}.
    const std::string& formula_text = a.positional.back();
    const Multistructure A = load_structure(read_file(a.positional[0]));
    Multiteam t = Multiteam::empty_assignment();
    if (a.positional.size() == 3 && a.positional[1] != "-") t = load_multiteam(read_file(a.positional[1]));
    const Formula f = formula_arg(formula_text);

    std::vector<WitnessStep> steps;
    EvalOptions opts;
    opts.memo = !a.no_memo;
    opts.step_limit = a.step_limit;
    if (a.witness) opts.witness = &steps;
    const bool ok = evaluate(A, t, f, a.modes.config(), opts);
    std::cout << (ok ? "true" : "false") << '\n';
    if (ok && a.witness) print_witness(steps);
    return ok ? kTrue : kFalse;
}

struct GenArgs {
    std::string kind;
    std::string cnf;
    std::string frac;
    std::string out = ".";
    std::string stem;
};

int run_gen(const GenArgs& a) {
    const CnfFormula phi = parse_dimacs(read_file(a.cnf));
    if (a.kind == "3sat" && !a.frac.empty()) throw InputError("--frac only applies to max2sat");
    if (a.kind == "max2sat" && a.frac.empty()) throw InputError("max2sat needs --frac");
    const Instance inst = a.kind == "3sat" ? encode_3sat(phi) : encode_maxsat(phi, parse_rational(a.frac));
    const std::string stem = a.stem.empty() ? fs::path(a.cnf).stem().string() : a.stem;
    const InstanceFiles files = write_instance(inst, a.out, stem);
    std::cout << files.structure.string() << '\n' << files.team.string() << '\n' << files.formula.string() << '\n';
    return 0;
}

int run_props(const std::string& suite, const PropsOptions& opts) {
    const SuiteReport report = run_suite(suite, opts);
    std::cout << format_report(report);
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model checker for team and multiteam semantics"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Evaluate a formula on a team");
    check_cmd->add_option("args", check.positional, "STRUCTURE [TEAM|-] FORMULA (text or file)")
        ->required()
        ->expected(2, 3);
    add_mode_flags(check_cmd, check.modes);
    check_cmd->add_flag("--witness", check.witness, "Print the witnessing choices on success");
    check_cmd->add_flag("--no-memo", check.no_memo, "Disable memoization");
    check_cmd->add_option("--step-limit", check.step_limit, "Abort after this many evaluation steps (0: none)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Encode a CNF file as a model-checking instance");
    gen_cmd->add_option("kind", gen.kind, "3sat or max2sat")->required()->check(CLI::IsMember({"3sat", "max2sat"}));
    gen_cmd->add_option("cnf", gen.cnf, "DIMACS CNF file")->required();
    gen_cmd->add_option("--frac", gen.frac, "Threshold fraction for max2sat, e.g. 7/10");
    gen_cmd->add_option("--out", gen.out, "Output directory");
    gen_cmd->add_option("--stem", gen.stem, "File name stem (default: the CNF file's stem)");

    std::string suite;
    PropsOptions props;
    bool no_shrink = false;
    auto* props_cmd = app.add_subcommand("props", "Run a property suite");
    props_cmd->add_option("suite", suite, "Suite name")->required();
    props_cmd->add_option("--seed", props.seed);
    props_cmd->add_option("--samples", props.samples, "Samples per property (0: suite default)");
    props_cmd->add_option("--max-vars", props.max_vars);
    props_cmd->add_option("--max-rows", props.max_rows);
    props_cmd->add_option("--max-domain", props.max_domain);
    props_cmd->add_option("--max-mult", props.max_mult);
    props_cmd->add_option("--max-depth", props.max_depth);
    props_cmd->add_option("--step-limit", props.step_limit);
    props_cmd->add_flag("--no-shrink", no_shrink, "Report counterexamples without minimizing");
    app.add_subcommand("suites", "List property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*check_cmd) return run_check(check);
        if (*gen_cmd) return run_gen(gen);
        if (*props_cmd) {
            props.shrink = !no_shrink;
            return run_props(suite, props);
        }
        for (const auto& name : suite_names()) std::cout << name << '\n';
        return 0;
    } catch (const StepLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
