#include "mm/universe.hpp"

namespace mm {

std::shared_ptr<const Universe> Universe::build(const GameConfig& config, std::uint64_t cap) {
    auto universe = std::shared_ptr<Universe>(new Universe(config));
    universe->codes_ = enumerate_codes(config, cap);
    universe->classes_ = legal_feedback_classes(config.pegs);

    universe->class_lookup_.assign(static_cast<std::size_t>(config.pegs + 1) * (config.pegs + 1), -1);
    for (std::size_t id = 0; id < universe->classes_.size(); ++id) {
        const Feedback& cls = universe->classes_[id];
        universe->class_lookup_[static_cast<std::size_t>(cls.black) * (config.pegs + 1) +
                                cls.white] = static_cast<int>(id);
    }
    universe->win_class_ = universe->class_id(Feedback{config.pegs, 0});

    const std::uint64_t n = universe->codes_.size();
    if (n * n <= kTableEntryLimit && universe->classes_.size() <= 256) {
        universe->table_.resize(n * n);
        universe->full_counts_.assign(n * universe->classes_.size(), 0);
        for (std::uint64_t q = 0; q < n; ++q) {
            for (std::uint64_t m = 0; m < n; ++m) {
                const int id =
                    universe->class_id(feedback(universe->codes_[q], universe->codes_[m], config));
                universe->table_[q * n + m] = static_cast<std::uint8_t>(id);
                ++universe->full_counts_[q * universe->classes_.size() + id];
            }
        }
    }
    return universe;
}

}  // namespace mm
