// mastermind -- MM(c,p) solver laboratory command line.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mm/counting.hpp"
#include "mm/harness.hpp"
#include "mm/optimal.hpp"
#include "mm/partition.hpp"
#include "mm/serialize.hpp"

namespace {

struct Options {
    int colors = 6;
    int pegs = 4;
    std::uint64_t seed = 0;
    std::string algorithm = "knuth";
    std::uint64_t games = 5000;
    double alpha = 2.0;
    std::string master_mode = "random";
    std::string candidate_pool = "consistent";
    std::string output;
    std::string format = "jsonl";
    unsigned workers = 0;
    std::uint64_t tree_cap = mm::kDefaultTreeCap;
    std::vector<std::string> guesses;
};

mm::SolverParams params_from(const Options& opt) {
    mm::SolverParams params;
    params.alpha = opt.alpha;
    if (opt.candidate_pool == "full")
        params.candidate_pool = mm::CandidatePool::full_universe;
    else if (opt.candidate_pool != "consistent")
        throw CLI::ValidationError("--candidate-pool", "expected consistent|full");
    return params;
}

void print_summary(const mm::SummaryStats& stats, const std::string& algorithm,
                   const mm::GameConfig& config) {
    std::cout << algorithm << " on MM(" << config.colors << "," << config.pegs << "), n="
              << stats.count << " games\n"
              << "  mean:   " << stats.mean << "\n"
              << "  max:    " << stats.max << "\n"
              << "  median: " << stats.median << "\n"
              << "  std:    " << stats.std_dev << "\n";
}

int cmd_bench(const Options& opt) {
    const mm::GameConfig config(opt.colors, opt.pegs);
    const mm::Algorithm algorithm = mm::parse_algorithm(opt.algorithm);
    const mm::MasterMode mode = mm::parse_master_mode(opt.master_mode);
    std::uint64_t games = opt.games;
    if (mode == mm::MasterMode::exhaustive_sweep) games = config.code_space_size_clamped();

    const mm::SolverParams params = params_from(opt);
    const mm::BatchResult result =
        mm::run_batch(config, algorithm, games, mode, opt.seed, params, opt.workers);
    print_summary(result.stats, opt.algorithm, config);

    if (!opt.output.empty()) {
        mm::RunMeta meta{opt.algorithm, config, games, mode, opt.seed, params};
        mm::export_records(result.records, result.stats, meta, mm::parse_export_format(opt.format),
                           opt.output);
        std::cout << "records written to " << opt.output << "\n";
    }
    return 0;
}

int cmd_verify(const Options&) {
    bool all_pass = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        all_pass = all_pass && ok;
    };

    // Legal class count for p = 4.
    const auto classes4 = mm::legal_feedback_classes(4);
    check("legal feedback classes, p=4: 14 classes",
          classes4.size() == 14 &&
              std::none_of(classes4.begin(), classes4.end(),
                           [](const mm::Feedback& f) { return f.black == 3 && f.white == 1; }));

    // Partition sizes of the five canonical openings over all 1296 codes.
    // Row order: [0,0],[0,1],[0,2],[0,3],[0,4],[1,0],[1,1],[1,2],[1,3],
    //            [2,0],[2,1],[2,2],[3,0],[4,0]
    const mm::GameConfig mm64(6, 4);
    const auto universe = mm::enumerate_codes(mm64);
    const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> golden = {
        {"1111", {625, 0, 0, 0, 0, 500, 0, 0, 0, 150, 0, 0, 20, 1}},
        {"1112", {256, 308, 61, 0, 0, 317, 156, 27, 0, 123, 24, 3, 20, 1}},
        {"1122", {256, 256, 96, 16, 1, 256, 208, 36, 0, 114, 32, 4, 20, 1}},
        {"1123", {81, 276, 222, 44, 2, 182, 230, 84, 4, 105, 40, 5, 20, 1}},
        {"1234", {16, 152, 312, 136, 9, 108, 252, 132, 8, 96, 48, 6, 20, 1}},
    };
    for (const auto& [opening, expected] : golden) {
        const auto table =
            mm::partition_sizes(mm::parse_code(opening, mm64), universe, mm64);
        std::string bad;
        for (std::size_t i = 0; i < classes4.size(); ++i) {
            if (table.sizes.at(classes4[i]) != expected[i]) {
                bad += (bad.empty() ? "" : ", ") + mm::format_feedback(classes4[i]) + " got " +
                       std::to_string(table.sizes.at(classes4[i])) + " want " +
                       std::to_string(expected[i]);
            }
        }
        check("partition sizes, opening " + opening, bad.empty(), bad);
    }

    // Color-count identity: totals must equal c^p.
    bool identity_ok = true;
    std::string identity_bad;
    for (int c = 1; c <= 8 && identity_ok; ++c) {
        for (int p = 1; p <= 8; ++p) {
            const mm::GameConfig config(c, p);
            if (mm::cardinality_by_colors(config).total != config.code_space_size_clamped()) {
                identity_ok = false;
                identity_bad = "MM(" + std::to_string(c) + "," + std::to_string(p) + ")";
                break;
            }
        }
    }
    check("cardinality identity total == c^p for c,p in [1,8]", identity_ok, identity_bad);

    const auto counts64 = mm::cardinality_by_colors(mm64);
    check("MM(6,4) per-color terms 6/210/720/360",
          counts64.per_color_count.at(1) == 6 && counts64.per_color_count.at(2) == 210 &&
              counts64.per_color_count.at(3) == 720 && counts64.per_color_count.at(4) == 360);

    // Two-peg optimal depth against the floor(c/2)+2 formula.
    for (int c = 2; c <= 6; ++c) {
        const auto result = mm::optimal_worst_case(mm::GameConfig(c, 2));
        const int predicted = c / 2 + 2;
        check("optimal worst case MM(" + std::to_string(c) + ",2) == " + std::to_string(predicted),
              result.worst_case_depth == predicted,
              "got " + std::to_string(result.worst_case_depth));
    }

    return all_pass ? 0 : 1;
}

int cmd_partitions(const Options& opt) {
    const mm::GameConfig config(opt.colors, opt.pegs);
    std::vector<std::string> names = opt.guesses;
    if (names.empty() && config.colors == 6 && config.pegs == 4)
        names = {"1111", "1112", "1122", "1123", "1234"};
    if (names.empty()) names = {mm::format_code(mm::default_initial_guess(config), config)};

    const auto universe = mm::enumerate_codes(config);
    const auto classes = mm::legal_feedback_classes(config.pegs);

    std::vector<mm::PartitionTable> tables;
    for (const auto& name : names)
        tables.push_back(mm::partition_sizes(mm::parse_code(name, config), universe, config));

    std::cout << "class";
    for (const auto& name : names) std::cout << '\t' << name;
    std::cout << '\n';
    for (const auto& cls : classes) {
        std::cout << mm::format_feedback(cls);
        for (const auto& table : tables) std::cout << '\t' << table.sizes.at(cls);
        std::cout << '\n';
    }
    std::cout << "max";
    for (const auto& table : tables) std::cout << '\t' << table.max_cell();
    std::cout << '\n';
    return 0;
}

int cmd_optimal(const Options& opt) {
    const mm::GameConfig config(opt.colors, opt.pegs);
    mm::StrategyTreeResult result;
    try {
        result = mm::optimal_worst_case(config, opt.tree_cap);
    } catch (const mm::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: use a smaller instance or raise --tree-cap\n";
        return 1;
    }
    std::cout << "worst_case_depth: " << result.worst_case_depth << "\n"
              << "expected_depth:   " << result.expected_depth << "\n"
              << "node_count:       " << result.node_count << "\n";
    if (config.pegs == 2) {
        const int predicted = config.colors / 2 + 2;
        std::cout << "theorem floor(c/2)+2 = " << predicted << ": "
                  << (result.worst_case_depth == predicted ? "agrees" : "DISAGREES") << "\n";
    }
    return 0;
}

int cmd_play(const Options& opt) {
    const mm::GameConfig config(opt.colors, opt.pegs);
    const mm::Algorithm algorithm = mm::parse_algorithm(opt.algorithm);
    const auto universe = mm::Universe::build(config);
    mm::SolverState state(universe, params_from(opt), opt.seed);

    std::cout << "Think of a code with " << config.pegs << " pegs and " << config.colors
              << " colors. Reply to each query with \"b w\" (e.g. \"1 2\"), or \"undo\".\n";

    std::optional<mm::Code> pending;
    while (true) {
        if (!pending) {
            try {
                pending = mm::next_query(algorithm, state);
            } catch (const mm::contradictory_history_error&) {
                std::cout << "No code is consistent with your answers; the reply to query #"
                          << state.history().size() << " ("
                          << mm::format_code(state.history().back().first, config)
                          << ") contradicts the earlier ones. Use undo or restart.\n";
                return 1;
            }
        }
        std::cout << "query " << state.history().size() + 1 << ": "
                  << mm::format_code(*pending, config) << "\n> " << std::flush;

        std::string line;
        if (!std::getline(std::cin, line)) return 1;
        if (line == "undo") {
            if (state.history().empty()) {
                std::cout << "nothing to undo\n";
            } else {
                state.retract_last();
                pending.reset();
            }
            continue;
        }
        if (line == "quit" || line == "exit") return 0;

        std::istringstream in(line);
        int b = -1, w = -1;
        if (!(in >> b >> w) || b < 0 || w < 0) {
            std::cout << "please answer with two integers \"b w\"\n";
            continue;
        }
        const mm::Feedback reply{b, w};
        if (!mm::is_legal_feedback(reply, config.pegs)) {
            if (b == config.pegs - 1 && w == 1)
                std::cout << "[" << b << "," << w << "] is impossible: one misplaced color with "
                          << "all others exact cannot occur. Re-check the pegs.\n";
            else
                std::cout << "illegal reply: need b + w <= " << config.pegs << "\n";
            continue;
        }
        if (mm::is_winning_feedback(reply, config.pegs)) {
            std::cout << "solved in " << state.history().size() + 1 << " queries\n";
            return 0;
        }
        state.observe(*pending, reply);
        pending.reset();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Mastermind MM(c,p) solver laboratory"};
    app.require_subcommand(1);

    Options opt;
    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--colors", opt.colors, "number of colors c")->check(CLI::PositiveNumber);
        cmd->add_option("--pegs", opt.pegs, "number of pegs p")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "root random seed");
    };

    CLI::App* bench = app.add_subcommand("bench", "run a seeded batch and print summary stats");
    add_shape(bench);
    bench->add_option("--algorithm", opt.algorithm, "random|knuth|sa|merc")->required();
    bench->add_option("--games", opt.games, "number of games")->check(CLI::PositiveNumber);
    bench->add_option("--alpha", opt.alpha, "SA acceptance numerator");
    bench->add_option("--master-mode", opt.master_mode, "random|sweep");
    bench->add_option("--candidate-pool", opt.candidate_pool, "consistent|full");
    bench->add_option("--output", opt.output, "export records to this path");
    bench->add_option("--format", opt.format, "jsonl|csv");
    bench->add_option("--workers", opt.workers, "worker threads (0 = hardware default)");

    CLI::App* verify =
        app.add_subcommand("verify", "recompute the reference tables and identities");
    add_shape(verify);

    CLI::App* partitions =
        app.add_subcommand("partitions", "print query-partition sizes for openings");
    add_shape(partitions);
    partitions->add_option("guesses", opt.guesses, "opening codes (default: the five classics)");

    CLI::App* optimal = app.add_subcommand("optimal", "exhaustive optimal strategy tree");
    add_shape(optimal);
    optimal->add_option("--tree-cap", opt.tree_cap, "max c^p admitted to the tree search");

    CLI::App* play = app.add_subcommand("play", "interactive assistant (you hold the code)");
    add_shape(play);
    play->add_option("--algorithm", opt.algorithm, "random|knuth|sa|merc");
    play->add_option("--alpha", opt.alpha, "SA acceptance numerator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(bench)) return cmd_bench(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(partitions)) return cmd_partitions(opt);
        if (app.got_subcommand(optimal)) return cmd_optimal(opt);
        if (app.got_subcommand(play)) return cmd_play(opt);
    } catch (const mm::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
