#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mm/enumerate.hpp"
#include "mm/rules.hpp"

namespace mm {

/// Immutable per-config working set shared by solvers and the harness:
/// the enumerated code space, the legal feedback classes, and (for small
/// instances) a precomputed query-vs-master class table. Build once,
/// share by const reference across threads.
class Universe {
public:
    /// Class tables larger than this many entries are skipped and replies
    /// are computed on the fly.
    static constexpr std::uint64_t kTableEntryLimit = 1ULL << 25;

    static std::shared_ptr<const Universe> build(const GameConfig& config,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

    const GameConfig& config() const { return config_; }
    const std::vector<Code>& codes() const { return codes_; }
    const std::vector<Feedback>& classes() const { return classes_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(codes_.size()); }

    int num_classes() const { return static_cast<int>(classes_.size()); }
    int winning_class() const { return win_class_; }

    /// Class id of feedback(codes[query], codes[master]).
    int class_of(std::uint32_t query, std::uint32_t master) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(query) * codes_.size() + master];
        return class_id(feedback(codes_[query], codes_[master], config_));
    }

    /// Id of a legal class; -1 for illegal combinations.
    int class_id(const Feedback& fb) const {
        return class_lookup_[static_cast<std::size_t>(fb.black) * (config_.pegs + 1) + fb.white];
    }

    /// Per-class cell sizes of each code's partition over the full
    /// universe; empty when the class table was skipped.
    const std::vector<std::uint32_t>& full_partition_counts() const { return full_counts_; }

    std::uint32_t index_of(const Code& code) const {
        return static_cast<std::uint32_t>(code_index(code, config_));
    }

private:
    explicit Universe(const GameConfig& config) : config_(config) {}

    GameConfig config_;
    std::vector<Code> codes_;
    std::vector<Feedback> classes_;
    std::vector<int> class_lookup_;        // (p+1)^2 dense map (b,w) -> class id
    std::vector<std::uint8_t> table_;      // n*n class ids, optional
    std::vector<std::uint32_t> full_counts_;  // n * num_classes, optional
    int win_class_ = -1;
};

}  // namespace mm
