#include "qtree/branching.hpp"
#include "qtree/errors.hpp"
#include "qtree/oracles.hpp"
#include "qtree/puzzle.hpp"
#include "qtree/report.hpp"
#include "qtree/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int exit_usage = 2;
constexpr int exit_capacity = 3;
constexpr int exit_no_solution = 4;

struct TreeArgs {
    std::string tree_path;
    int depth = 0;
    int max_qubits = qtree::default_max_qubits;
};

void add_tree_options(CLI::App* cmd, TreeArgs& args) {
    cmd->add_option("--tree", args.tree_path, "tree spec file (JSON)")->required();
    cmd->add_option("--depth", args.depth, "search depth d")->required();
    cmd->add_option("--max-qubits", args.max_qubits, "register size cap")
        ->default_val(qtree::default_max_qubits);
}

int cmd_encode(const TreeArgs& args) {
    const qtree::SearchTree tree = qtree::load_tree_file(args.tree_path);
    const qtree::PathCodec codec = qtree::make_codec(tree, args.depth, args.max_qubits);
    qtree::write_encode_csv(std::cout, tree, codec);
    return 0;
}

int cmd_grover(const TreeArgs& args, const std::vector<std::string>& goal_names,
               std::uint64_t seed, std::optional<std::uint64_t> iterations) {
    qtree::SearchTree tree = qtree::load_tree_file(args.tree_path);
    if (!goal_names.empty()) {
        tree.goals.clear();
        for (const std::string& name : goal_names) {
            const auto id = tree.find_node(name);
            if (!id) throw qtree::ConfigError("--goal '" + name + "' names an unknown node");
            tree.goals.insert(*id);
        }
    }
    const qtree::PathCodec codec = qtree::make_codec(tree, args.depth, args.max_qubits);
    const qtree::BasisPredicate oracle = qtree::goal_oracle(tree, codec);
    const qtree::RunReport report =
        qtree::run_grover(tree, codec, oracle, seed, iterations, args.max_qubits);
    qtree::write_run_report(std::cout, report, tree, codec);
    if (report.marked == 0) {
        std::cerr << "warning: no admissible path reaches a goal; measurement is uniform\n";
        return exit_no_solution;
    }
    return 0;
}

int cmd_branching(const std::vector<std::string>& scenario_args,
                  const std::vector<std::uint64_t>& range) {
    if (!range.empty()) {
        if (!scenario_args.empty()) {
            throw qtree::ConfigError("give either a scenario (B_MAX B_AVG D) or --range, not both");
        }
        qtree::write_ladder_csv(std::cout, qtree::ladder_table(range[0], range[1]));
        return 0;
    }
    if (scenario_args.size() != 3) {
        throw qtree::ConfigError("scenario mode needs exactly B_MAX B_AVG D");
    }
    qtree::BranchingScenario scenario;
    try {
        scenario.b_max = std::stoull(scenario_args[0]);
        scenario.b_avg = std::stod(scenario_args[1]);
        scenario.depth = std::stoi(scenario_args[2]);
    } catch (const std::exception&) {
        throw qtree::ConfigError("scenario arguments must be numeric: B_MAX B_AVG D");
    }
    qtree::write_speedup_report(std::cout, scenario, qtree::speedup_report(scenario));
    return 0;
}

int cmd_puzzle_dist(const std::string& kind, int bins, bool blank_excluded,
                    const std::string& samples_path) {
    if (kind != "h1" && kind != "h2") {
        throw qtree::ConfigError("heuristic must be 'h1' or 'h2'");
    }

    std::vector<double> samples;
    if (!samples_path.empty()) {
        std::ifstream in(samples_path);
        if (!in) throw qtree::ConfigError("cannot open samples file '" + samples_path + "'");
        double value = 0.0;
        while (in >> value) samples.push_back(value);
        if (samples.empty()) throw qtree::ConfigError("samples file holds no values");
    }

    qtree::EmpiricalDistribution dist = [&] {
        if (kind == "h1") {
            if (!samples.empty()) return qtree::EmpiricalDistribution::from_samples_discrete(samples);
            const auto goal = qtree::PuzzleBoard::canonical_goal();
            return qtree::heuristic_distribution(
                [&](const qtree::PuzzleBoard& b) {
                    return static_cast<double>(qtree::h1_misplaced(b, goal, !blank_excluded));
                },
                goal, qtree::DistributionKind::discrete);
        }
        if (!samples.empty()) {
            if (bins > 0) return qtree::EmpiricalDistribution::from_samples_binned(samples, bins);
            return qtree::EmpiricalDistribution::from_samples_bin_width(samples, 0.25);
        }
        const auto goal = qtree::PuzzleBoard::canonical_goal();
        const auto h2 = [&](const qtree::PuzzleBoard& b) { return qtree::h2_euclidean(b, goal); };
        if (bins > 0) return qtree::heuristic_distribution_binned(h2, goal, bins);
        return qtree::heuristic_distribution(h2, goal, qtree::DistributionKind::binned, 0.25);
    }();

    qtree::write_distribution_csv(std::cout, dist);
    return 0;
}

int cmd_quantile_demo(const TreeArgs& args, const std::vector<double>& band, std::uint64_t seed,
                      std::optional<std::uint64_t> iterations) {
    const qtree::SearchTree tree = qtree::load_tree_file(args.tree_path);
    const qtree::PathCodec codec = qtree::make_codec(tree, args.depth, args.max_qubits);
    const qtree::PathEvaluator f = qtree::cost_plus_heuristic(tree);
    const qtree::EmpiricalDistribution dist = qtree::admissible_f_distribution(tree, codec, f);
    const qtree::BandOracle oracle =
        qtree::quantile_band_oracle(tree, codec, f, {band[0], band[1]}, dist);

    const std::uint64_t admissible = qtree::admissible_count(tree, codec);
    const qtree::RunReport report =
        qtree::run_grover(tree, codec, oracle.predicate, seed, iterations, args.max_qubits);

    std::cout << "band: " << qtree::format_number(band[0]) << ' '
              << qtree::format_number(band[1]) << "\n";
    std::cout << "f_lower: " << qtree::format_number(oracle.lower_value) << "\n";
    std::cout << "f_upper: " << qtree::format_number(oracle.upper_value) << "\n";
    std::cout << "admissible_paths: " << admissible << "\n";
    std::cout << "realized_fraction: "
              << qtree::format_number(admissible == 0
                                          ? 0.0
                                          : static_cast<double>(report.marked) /
                                                static_cast<double>(admissible))
              << "\n";
    qtree::write_run_report(std::cout, report, tree, codec);
    if (report.marked == 0) {
        std::cerr << "warning: the band marks no admissible path; measurement is uniform\n";
        return exit_no_solution;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qtree: Grover-style search over tree path encodings,\n"
                 "with branching-factor and heuristic-distribution analysis"};
    app.require_subcommand(1);

    TreeArgs encode_args;
    auto* encode = app.add_subcommand("encode", "list admissible paths and their binary codes");
    add_tree_options(encode, encode_args);

    TreeArgs grover_args;
    std::vector<std::string> goal_names;
    std::uint64_t grover_seed = 0;
    std::int64_t grover_iterations = -1;
    auto* grover = app.add_subcommand("grover", "amplify and measure a goal path");
    add_tree_options(grover, grover_args);
    grover->add_option("--goal", goal_names, "goal node name(s); overrides the tree file");
    grover->add_option("--seed", grover_seed, "measurement seed")->default_val(0);
    grover->add_option("--iterations", grover_iterations,
                       "iteration override (default: floor(pi/4 sqrt(N/k)))");

    std::vector<std::string> scenario_args;
    std::vector<std::uint64_t> range_args;
    auto* branching = app.add_subcommand("branching", "branching-factor speedup analysis");
    branching->add_option("scenario", scenario_args, "B_MAX B_AVG D")->expected(0, 3);
    branching->add_option("--range", range_args, "emit the crossover ladder for b_max in [LO, HI]")
        ->expected(2);

    std::string dist_kind;
    int dist_bins = 0;
    bool blank_excluded = false;
    std::string samples_path;
    auto* puzzle_dist = app.add_subcommand("puzzle-dist", "8-puzzle heuristic distribution CSV");
    puzzle_dist->add_option("heuristic", dist_kind, "h1 (misplaced) or h2 (euclidean)")->required();
    puzzle_dist->add_option("--bins", dist_bins, "histogram bin count (default: 0.25-wide bins)");
    puzzle_dist->add_flag("--blank-excluded", blank_excluded,
                          "h1 counts tiles only (range [0, 8])");
    puzzle_dist->add_option("--samples", samples_path,
                            "build the distribution from a file of values, one per line");

    TreeArgs band_args;
    std::vector<double> band_values;
    std::uint64_t band_seed = 0;
    std::int64_t band_iterations = -1;
    auto* quantile_demo =
        app.add_subcommand("quantile-demo", "amplify one heuristic quartile of the path space");
    add_tree_options(quantile_demo, band_args);
    quantile_demo->add_option("--band", band_values, "quantile band A B with B - A = 0.25")
        ->expected(2)
        ->required();
    quantile_demo->add_option("--seed", band_seed, "measurement seed")->default_val(0);
    quantile_demo->add_option("--iterations", band_iterations, "iteration override");

    try {
        app.parse(argc, argv);

        if (encode->parsed()) return cmd_encode(encode_args);
        if (grover->parsed()) {
            return cmd_grover(grover_args, goal_names, grover_seed,
                              grover_iterations >= 0
                                  ? std::optional<std::uint64_t>(
                                        static_cast<std::uint64_t>(grover_iterations))
                                  : std::nullopt);
        }
        if (branching->parsed()) return cmd_branching(scenario_args, range_args);
        if (puzzle_dist->parsed()) {
            return cmd_puzzle_dist(dist_kind, dist_bins, blank_excluded, samples_path);
        }
        if (quantile_demo->parsed()) {
            return cmd_quantile_demo(band_args, band_values, band_seed,
                                     band_iterations >= 0
                                         ? std::optional<std::uint64_t>(
                                               static_cast<std::uint64_t>(band_iterations))
                                         : std::nullopt);
        }
        return exit_usage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qtree::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const qtree::NoSolutionError& e) {
        std::cerr << "no solution: " << e.what() << "\n";
        return exit_no_solution;
    } catch (const qtree::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qtree::CodecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
