#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mwnet/dynamics.hpp"
#include "mwnet/generator.hpp"
#include "mwnet/io.hpp"
#include "mwnet/linalg.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string input;
    std::uint64_t seed = 0;
    std::string out = ".";
    std::string format = "json";
    double tol_def = 1e-9;
    double tol_rank = 1e-9;
    double horizon = -1.0;  // <0: use the spectral default
    std::size_t path_cap = 10000;
    std::size_t partition_cap = std::size_t{1} << 20;
    int jobs = 1;
    int steps = 400;

    // gen options
    int dim = 3;
    int continents = 2;
    int nodes_per_continent = 3;
    int bridges = 1;
    int path_length = 1;
    std::string violate = "none";
    bool random_gauge = false;
    bool axis_aligned = false;

    mwnet::Tolerances tolerances() const {
        mwnet::Tolerances t;
        t.def = tol_def;
        t.rank = tol_rank;
        return t;
    }

    std::string effective_json(const std::string& command) const {
        Json j;
        j["command"] = command;
        if (!input.empty()) j["input"] = input;
        j["seed"] = seed;
        j["out"] = out;
        j["format"] = format;
        j["tol_def"] = tol_def;
        j["tol_rank"] = tol_rank;
        if (horizon >= 0.0) j["horizon"] = horizon;
        j["path_cap"] = path_cap;
        j["partition_cap"] = partition_cap;
        j["jobs"] = jobs;
        if (command == "simulate") j["steps"] = steps;
        if (command == "gen") {
            j["dim"] = dim;
            j["continents"] = continents;
            j["nodes_per_continent"] = nodes_per_continent;
            j["bridges"] = bridges;
            j["path_length"] = path_length;
            j["violate"] = violate;
            j["random_gauge"] = random_gauge;
            j["axis_aligned"] = axis_aligned;
        }
        return j.dump();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mwnet::Error(mwnet::ErrorCode::InvalidDocument, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mwnet::Error(mwnet::ErrorCode::InvalidDocument, "cannot write " + path.string());
    out << text;
}

std::string stem_of(const std::string& input) { return fs::path(input).stem().string(); }

int exit_code_for(const mwnet::Error& e) {
    switch (e.code()) {
        case mwnet::ErrorCode::PathBudgetExceeded:
        case mwnet::ErrorCode::SearchBudgetExceeded: return 3;
        case mwnet::ErrorCode::NotSettled: return 4;
        default: return 2;
    }
}

mwnet::MatrixWeightedGraph load_graph(const RunConfig& cfg) {
    return mwnet::validate_graph(mwnet::parse_graph_document(slurp(cfg.input)), cfg.tolerances());
}

int cmd_validate(const RunConfig& cfg) {
    const mwnet::MatrixWeightedGraph g = load_graph(cfg);
    int definite = 0;
    for (const mwnet::Edge& e : g.edges) definite += e.sign_class.is_definite();
    std::cout << "ok: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges (" << definite
              << " definite), d=" << g.dim << (g.connected ? ", connected" : ", disconnected")
              << "\n";
    return 0;
}

int cmd_analyze(const RunConfig& cfg) {
    const mwnet::MatrixWeightedGraph g = load_graph(cfg);
    mwnet::AnalysisOptions opts;
    opts.path_cap = cfg.path_cap;
    opts.partition_cap = cfg.partition_cap;
    opts.tol = cfg.tolerances();
    const mwnet::ConditionReport report = mwnet::full_verdict(g, opts);
    const std::string json = mwnet::report_json(report, g, cfg.effective_json("analyze"));
    spit(fs::path(cfg.out) / (stem_of(cfg.input) + ".report.json"), json);
    if (cfg.format == "human") {
        std::cout << "connected: " << (report.connected ? "yes" : "no") << "\n"
                  << "continents: " << report.continents.size() << "\n"
                  << "nbs: " << (report.nbs.unique ? "unique" : "not unique") << " ("
                  << report.nbs.sets.size() << " found)\n"
                  << "verdict_theorem_3_8: " << to_string(report.theorem_3_8) << "\n"
                  << "verdict_corollary_3_11: " << to_string(report.corollary_3_11) << "\n"
                  << "verdict_theorem_3_12: " << to_string(report.theorem_3_12) << "\n"
                  << "predicted: "
                  << (report.predicted ? to_string(*report.predicted) : "unknown") << "\n";
    } else {
        std::cout << json;
    }
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    const mwnet::MatrixWeightedGraph g = load_graph(cfg);
    const mwnet::Laplacian lap = mwnet::build_laplacian(g);
    const mwnet::SpectralDecomposition spec = mwnet::decompose(lap);

    std::mt19937_64 rng(cfg.seed);
    const mwnet::Vector x0 = mwnet::random_state(g.num_nodes() * g.dim, rng);
    const double horizon =
        cfg.horizon >= 0.0 ? cfg.horizon : mwnet::default_horizon(spec, 1.0, cfg.tolerances());
    if (horizon <= 0.0)
        throw mwnet::Error(mwnet::ErrorCode::InvalidDocument, "horizon must be positive");

    const mwnet::Trajectory traj =
        mwnet::integrate(lap, x0, horizon, cfg.steps, mwnet::IntegrationMethod::ExactSpectral);
    const mwnet::OutcomeLabel outcome = mwnet::classify_outcome(lap, traj, x0);
    const mwnet::Vector predicted = mwnet::asymptotic_state(lap, x0, cfg.tolerances());
    const double agreement = (traj.terminal() - predicted).cwiseAbs().maxCoeff();

    const std::string stem = stem_of(cfg.input);
    spit(fs::path(cfg.out) / (stem + ".trajectory.csv"), mwnet::trajectory_csv(traj, g));
    const std::string json = mwnet::outcome_json(outcome, traj.terminal(), predicted, agreement,
                                                 cfg.seed, cfg.effective_json("simulate"));
    spit(fs::path(cfg.out) / (stem + ".outcome.json"), json);
    if (cfg.format == "human")
        std::cout << "outcome: " << to_string(outcome.kind) << ", agreement residual " << agreement
                  << "\n";
    else
        std::cout << json;
    return 0;
}

int cmd_gen(const RunConfig& cfg) {
    mwnet::InstanceRecipe recipe;
    recipe.seed = cfg.seed;
    recipe.dim = cfg.dim;
    recipe.continent_count = cfg.continents;
    recipe.nodes_per_continent = cfg.nodes_per_continent;
    recipe.path_lengths.assign(std::max(cfg.bridges, 0), cfg.path_length);
    recipe.random_gauge = cfg.random_gauge;
    recipe.axis_aligned = cfg.axis_aligned;
    recipe.violation = mwnet::violation_from_string(cfg.violate);

    const mwnet::SynthesizedInstance inst = mwnet::synthesize(recipe);
    const std::string stem = "gen_" + std::to_string(cfg.seed);
    spit(fs::path(cfg.out) / (stem + ".json"), mwnet::graph_document(inst.graph));
    const std::string expect = mwnet::expectation_json(inst, cfg.effective_json("gen"));
    spit(fs::path(cfg.out) / (stem + ".expected.json"), expect);
    if (cfg.format == "human")
        std::cout << "wrote " << stem << ".json (expected " << to_string(inst.expected) << ")\n";
    else
        std::cout << expect;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix-weighted signed consensus network analyzer"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--out", cfg.out, "output directory");
    app.add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "human"}));
    app.add_option("--tol-def", cfg.tol_def, "definiteness tolerance");
    app.add_option("--tol-rank", cfg.tol_rank, "rank tolerance");
    app.add_option("--horizon", cfg.horizon, "integration horizon");
    app.add_option("--path-cap", cfg.path_cap, "simple-path enumeration cap");
    app.add_option("--partition-cap", cfg.partition_cap, "partition enumeration cap");
    app.add_option("--jobs", cfg.jobs, "worker count (outputs stay deterministic)");

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a graph document");
    validate->add_option("input", cfg.input, "graph file")->required();
    CLI::App* analyze = app.add_subcommand("analyze", "run the condition analysis");
    analyze->add_option("input", cfg.input, "graph file")->required();
    CLI::App* simulate = app.add_subcommand("simulate", "integrate the consensus dynamics");
    simulate->add_option("input", cfg.input, "graph file")->required();
    simulate->add_option("--steps", cfg.steps, "trajectory samples");
    CLI::App* gen = app.add_subcommand("gen", "synthesize a seeded instance");
    gen->add_option("--dim", cfg.dim, "block dimension");
    gen->add_option("--continents", cfg.continents, "continent count");
    gen->add_option("--nodes-per-continent", cfg.nodes_per_continent, "nodes per continent");
    gen->add_option("--bridges", cfg.bridges, "paths per consecutive continent pair");
    gen->add_option("--path-length", cfg.path_length, "edges per bridge path");
    gen->add_option("--violate", cfg.violate,
                    "none|condition2|condition3|condition4|condition5|indefinite_cycle");
    gen->add_flag("--random-gauge", cfg.random_gauge, "apply a random gauge switch");
    gen->add_flag("--axis-aligned", cfg.axis_aligned, "axis-aligned null directions");

    for (CLI::App* sub : {validate, analyze, simulate, gen}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(cfg);
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (gen->parsed()) return cmd_gen(cfg);
    } catch (const mwnet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
