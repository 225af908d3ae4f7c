#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mm/harness.hpp"

namespace mm {

enum class ExportFormat { json_lines, csv };

ExportFormat parse_export_format(const std::string& name);

/// Everything needed to replay a batch, stored alongside its stats in the
/// summary document.
struct RunMeta {
    std::string algorithm;
    GameConfig config;
    std::uint64_t n_games = 0;
    MasterMode master_mode = MasterMode::uniform_random;
    std::uint64_t master_seed = 0;
    SolverParams params;
};

/// Sibling summary document written next to every export.
std::filesystem::path summary_path_for(const std::filesystem::path& destination);

/// Writes one record per line (json-lines) or per row (csv with a header),
/// plus the summary document. Output is byte-deterministic for identical
/// inputs. I/O failures raise std::runtime_error carrying the path.
void export_records(const std::vector<GameRecord>& records, const SummaryStats& stats,
                    const RunMeta& meta, ExportFormat format,
                    const std::filesystem::path& destination);

/// Re-reads a json-lines export; the result round-trips exactly.
std::vector<GameRecord> import_records_jsonl(const std::filesystem::path& source);

}  // namespace mm
