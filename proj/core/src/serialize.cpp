#include "mm/serialize.hpp"

#include <fstream>

#include <json.hpp>

namespace mm {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_to_json(const GameRecord& record) {
    ordered_json turns = ordered_json::array();
    for (const auto& [query, reply] : record.turns)
        turns.push_back({{"query", format_code(query, record.config)},
                         {"black", reply.black},
                         {"white", reply.white}});
    return ordered_json{{"config", {{"colors", record.config.colors}, {"pegs", record.config.pegs}}},
                        {"algorithm", record.algorithm},
                        {"seed", record.seed},
                        {"master", format_code(record.master, record.config)},
                        {"turns", std::move(turns)},
                        {"query_count", record.query_count},
                        {"solved", record.solved}};
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void write_summary(const SummaryStats& stats, const RunMeta& meta,
                   const std::filesystem::path& path) {
    const ordered_json doc{
        {"algorithm", meta.algorithm},
        {"config", {{"colors", meta.config.colors}, {"pegs", meta.config.pegs}}},
        {"n_games", meta.n_games},
        {"master_mode", master_mode_name(meta.master_mode)},
        {"master_seed", meta.master_seed},
        {"params",
         {{"alpha", meta.params.alpha},
          {"candidate_pool", meta.params.candidate_pool == CandidatePool::full_universe
                                 ? "full"
                                 : "consistent"}}},
        {"stats",
         {{"count", stats.count},
          {"mean", stats.mean},
          {"median", stats.median},
          {"std", stats.std_dev},
          {"max", stats.max}}}};
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
    if (name == "jsonl" || name == "json-lines") return ExportFormat::json_lines;
    if (name == "csv") return ExportFormat::csv;
    throw invalid_input("unknown export format '" + name + "' (expected jsonl|csv)");
}

std::filesystem::path summary_path_for(const std::filesystem::path& destination) {
    std::filesystem::path p = destination;
    p += ".summary.json";
    return p;
}

void export_records(const std::vector<GameRecord>& records, const SummaryStats& stats,
                    const RunMeta& meta, ExportFormat format,
                    const std::filesystem::path& destination) {
    auto out = open_for_write(destination);
    if (format == ExportFormat::json_lines) {
        for (const GameRecord& record : records) out << record_to_json(record).dump() << '\n';
    } else {
        out << "game_index,algorithm,colors,pegs,seed,master,query_count,solved\n";
        for (std::size_t i = 0; i < records.size(); ++i) {
            const GameRecord& r = records[i];
            out << i << ',' << r.algorithm << ',' << r.config.colors << ',' << r.config.pegs << ','
                << r.seed << ',' << format_code(r.master, r.config) << ',' << r.query_count << ','
                << (r.solved ? "true" : "false") << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed for '" + destination.string() + "'");
    out.close();
    write_summary(stats, meta, summary_path_for(destination));
}

std::vector<GameRecord> import_records_jsonl(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + source.string() + "' for reading");

    std::vector<GameRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto doc = nlohmann::json::parse(line);
        GameRecord record;
        record.config = GameConfig(doc.at("config").at("colors").get<int>(),
                                   doc.at("config").at("pegs").get<int>());
        record.algorithm = doc.at("algorithm").get<std::string>();
        record.seed = doc.at("seed").get<std::uint64_t>();
        record.master = parse_code(doc.at("master").get<std::string>(), record.config);
        for (const auto& turn : doc.at("turns"))
            record.turns.emplace_back(
                parse_code(turn.at("query").get<std::string>(), record.config),
                Feedback{turn.at("black").get<int>(), turn.at("white").get<int>()});
        record.query_count = doc.at("query_count").get<std::uint64_t>();
        record.solved = doc.at("solved").get<bool>();
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace mm
