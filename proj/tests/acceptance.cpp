// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "mm/counting.hpp"
#include "mm/optimal.hpp"
#include "mm/partition.hpp"
#include "mm/serialize.hpp"

using namespace mm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int criterion, const std::string& name, bool ok, double elapsed_ms,
            const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", criterion,
                name.c_str(), elapsed_ms, detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

bool within(double value, double center, double tolerance) {
    return value >= center - tolerance && value <= center + tolerance;
}

std::string mean_detail(const SummaryStats& stats) {
    std::ostringstream out;
    out << "mean=" << stats.mean << " max=" << stats.max << " median=" << stats.median
        << " std=" << stats.std_dev;
    return out.str();
}

const GameConfig kMM64(6, 4);
constexpr std::uint64_t kSeed = 2;

void criterion1() {
    const auto start = Clock::now();
    const auto classes = legal_feedback_classes(4);
    std::vector<Feedback> expected;
    for (int b = 0; b <= 4; ++b)
        for (int w = 0; b + w <= 4; ++w)
            if (!(b == 3 && w == 1)) expected.push_back({b, w});
    const double elapsed = ms_since(start);
    report(1, "Table I legal classes for p=4", classes == expected && classes.size() == 14 &&
                                                   elapsed < 1.0,
           elapsed);
}

void criterion2() {
    const auto start = Clock::now();
    const auto universe = enumerate_codes(kMM64);
    const auto classes = legal_feedback_classes(4);
    const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> golden = {
        {"1111", {625, 0, 0, 0, 0, 500, 0, 0, 0, 150, 0, 0, 20, 1}},
        {"1112", {256, 308, 61, 0, 0, 317, 156, 27, 0, 123, 24, 3, 20, 1}},
        {"1122", {256, 256, 96, 16, 1, 256, 208, 36, 0, 114, 32, 4, 20, 1}},
        {"1123", {81, 276, 222, 44, 2, 182, 230, 84, 4, 105, 40, 5, 20, 1}},
        {"1234", {16, 152, 312, 136, 9, 108, 252, 132, 8, 96, 48, 6, 20, 1}},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [opening, expected] : golden) {
        const auto table = partition_sizes(parse_code(opening, kMM64), universe, kMM64);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (table.sizes.at(classes[i]) != expected[i]) {
                ok = false;
                detail = opening + " " + format_feedback(classes[i]) + " got " +
                         std::to_string(table.sizes.at(classes[i]));
            }
        }
    }
    const double elapsed = ms_since(start);
    report(2, "Table II partition sizes, 70 cells", ok && elapsed < 1000.0, elapsed, detail);
}

void criterion3() {
    const auto start = Clock::now();
    bool ok = true;
    for (int c = 1; c <= 8; ++c)
        for (int p = 1; p <= 8; ++p) {
            const GameConfig config(c, p);
            if (cardinality_by_colors(config).total != config.code_space_size_clamped()) ok = false;
        }
    const auto counts = cardinality_by_colors(kMM64);
    ok = ok && counts.per_color_count.at(1) == 6 && counts.per_color_count.at(2) == 210 &&
         counts.per_color_count.at(3) == 720 && counts.per_color_count.at(4) == 360;
    const double elapsed = ms_since(start);
    report(3, "color-count identity, c,p in [1,8] + MM(6,4) terms", ok && elapsed < 1000.0,
           elapsed);
}

void criterion4() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (int c = 2; c <= 6; ++c) {
        const auto result = optimal_worst_case(GameConfig(c, 2));
        if (result.worst_case_depth != c / 2 + 2) {
            ok = false;
            detail += "c=" + std::to_string(c) + " got " +
                      std::to_string(result.worst_case_depth) + " ";
        }
    }
    const double elapsed = ms_since(start);
    report(4, "two-peg theorem floor(c/2)+2, c in [2,6]", ok && elapsed < 10'000.0, elapsed,
           detail);
}

void criterion5() {
    const auto start = Clock::now();
    const auto batch =
        run_batch(kMM64, Algorithm::knuth, 5000, MasterMode::uniform_random, kSeed);
    const double elapsed = ms_since(start);
    report(5, "Knuth MM(6,4), 5000 games: mean 4.468 +/- 0.10, max <= 7",
           within(batch.stats.mean, 4.468, 0.10) && batch.stats.max <= 7 && elapsed < 60'000.0,
           elapsed, mean_detail(batch.stats));
}

void criterion6() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    const struct {
        GameConfig config;
        double mean;
        std::uint64_t max_cap;  // 0: unchecked
    } cases[] = {{GameConfig(6, 4), 4.714, 7}, {GameConfig(5, 4), 4.206, 0},
                 {GameConfig(4, 4), 3.751, 6}};
    for (const auto& expected : cases) {
        const auto batch = run_batch(expected.config, Algorithm::merc, 5000,
                                     MasterMode::uniform_random, kSeed);
        const bool mean_ok = within(batch.stats.mean, expected.mean, 0.10);
        const bool max_ok = expected.max_cap == 0 || batch.stats.max <= expected.max_cap;
        ok = ok && mean_ok && max_ok;
        detail += "MM(" + std::to_string(expected.config.colors) + ",4) " + mean_detail(batch.stats) +
                  "; ";
    }
    const double elapsed = ms_since(start);
    report(6, "MERC, 5000 games on MM(6,4)/MM(5,4)/MM(4,4)", ok && elapsed < 300'000.0, elapsed,
           detail);
}

void criterion7() {
    const auto start = Clock::now();
    const auto big = run_batch(kMM64, Algorithm::sa, 5000, MasterMode::uniform_random, kSeed);
    const auto small =
        run_batch(GameConfig(4, 4), Algorithm::sa, 5000, MasterMode::uniform_random, kSeed);
    const double elapsed = ms_since(start);
    report(7, "SA, 5000 games: MM(6,4) 5.79 +/- 0.30, MM(4,4) 4.38 +/- 0.25",
           within(big.stats.mean, 5.79, 0.30) && within(small.stats.mean, 4.38, 0.25) &&
               elapsed < 60'000.0,
           elapsed, mean_detail(big.stats) + "; MM(4,4) " + mean_detail(small.stats));
}

void criterion8() {
    const auto start = Clock::now();
    const auto batch =
        run_batch(kMM64, Algorithm::random_search, 5000, MasterMode::uniform_random, kSeed);
    const double elapsed = ms_since(start);
    report(8, "random search MM(6,4), 5000 games: mean 648.5 +/- 15, max <= 1296",
           within(batch.stats.mean, 648.5, 15.0) && batch.stats.max <= 1296 &&
               elapsed < 30'000.0,
           elapsed, mean_detail(batch.stats));
}

void criterion9() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;

    // (a) the [p-1,1] class never occurs, exhaustively on small instances
    for (const GameConfig& config :
         {GameConfig(6, 4), GameConfig(9, 2), GameConfig(3, 5), GameConfig(2, 10)}) {
        const auto universe = enumerate_codes(config);
        for (const Code& q : universe)
            for (const Code& m : universe) {
                const Feedback fb = feedback(q, m, config);
                if (fb.black == config.pegs - 1 && fb.white == 1) ok = false;
            }
    }
    if (!ok) detail += "[p-1,1] emitted; ";

    // (b) sa_score == 0 iff consistent, over 1000 random histories
    const auto universe = Universe::build(kMM64);
    Rng rng(kSeed);
    bool score_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const Code& master = universe->codes()[uniform_below(rng, universe->size())];
        std::vector<Turn> history;
        for (int t = 0, n = 1 + static_cast<int>(uniform_below(rng, 3)); t < n; ++t) {
            const Code& q = universe->codes()[uniform_below(rng, universe->size())];
            history.emplace_back(q, feedback(q, master, kMM64));
        }
        const auto consistent = consistent_set(history, universe->codes(), kMM64);
        for (int probe = 0; probe < 10; ++probe) {
            const Code& x = universe->codes()[uniform_below(rng, universe->size())];
            const bool in_set =
                std::binary_search(consistent.codes.begin(), consistent.codes.end(), x);
            if ((sa_score(x, history, kMM64) == 0) != in_set) score_ok = false;
        }
    }
    if (!score_ok) detail += "sa_score zero/consistency mismatch; ";
    ok = ok && score_ok;

    // (c) merc_expected_size equals the literal double-loop computation on
    // 100 random mid-game states
    bool merc_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        SolverState state(universe, {}, kSeed);
        const Code& master = universe->codes()[uniform_below(rng, universe->size())];
        for (int t = 0; t < 2; ++t) {
            const Code& q = universe->codes()[uniform_below(rng, universe->size())];
            state.observe(q, feedback(q, master, kMM64));
        }
        const auto set = state.candidates();
        const Code& candidate = set.codes[uniform_below(rng, set.size())];
        std::uint64_t literal = 0;
        for (const Code& m : set.codes) {
            const Feedback target = feedback(candidate, m, kMM64);
            for (const Code& x : set.codes)
                if (feedback(candidate, x, kMM64) == target) ++literal;
        }
        const double expected = static_cast<double>(literal) / static_cast<double>(set.size());
        if (std::abs(merc_expected_size(candidate, set, kMM64) - expected) > 1e-9)
            merc_ok = false;
    }
    if (!merc_ok) detail += "merc expected-size identity mismatch; ";
    ok = ok && merc_ok;

    // (d) consistency-set monotonicity over 1000 random histories
    bool mono_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const Code& master = universe->codes()[uniform_below(rng, universe->size())];
        std::vector<Turn> history;
        std::size_t previous = universe->size();
        for (int t = 0, n = 1 + static_cast<int>(uniform_below(rng, 3)); t < n; ++t) {
            const Code& q = universe->codes()[uniform_below(rng, universe->size())];
            history.emplace_back(q, feedback(q, master, kMM64));
            const std::size_t now = consistent_set(history, universe->codes(), kMM64).size();
            if (now > previous) mono_ok = false;
            previous = now;
        }
    }
    if (!mono_ok) detail += "consistency set grew; ";
    ok = ok && mono_ok;

    report(9, "property suite (illegal class, sa_score, MERC identity, monotonicity)", ok,
           ms_since(start), detail);
}

void criterion10() {
    const auto start = Clock::now();
    const RunMeta meta{"sa", kMM64, 500, MasterMode::uniform_random, kSeed, {}};
    std::string reference;
    bool ok = true;
    int runs = 0;
    for (unsigned workers : {1u, 4u, 1u}) {
        const auto batch = run_batch(kMM64, Algorithm::sa, 500, MasterMode::uniform_random,
                                     kSeed, {}, workers);
        const auto path = std::filesystem::temp_directory_path() /
                          ("mm_acceptance_det_" + std::to_string(runs++) + ".jsonl");
        export_records(batch.records, batch.stats, meta, ExportFormat::json_lines, path);
        std::ifstream in(path, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(in)), {});
        std::ifstream sum(summary_path_for(path), std::ios::binary);
        text += std::string((std::istreambuf_iterator<char>(sum)), {});
        std::error_code ec;
        std::filesystem::remove(path, ec);
        std::filesystem::remove(summary_path_for(path), ec);
        if (reference.empty())
            reference = text;
        else if (text != reference)
            ok = false;
    }
    report(10, "seeded exports byte-identical across repeats and worker counts", ok,
           ms_since(start));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
