#include "rcinf/tables.hpp"

namespace rcinf {

LengthRiggingTable::LengthRiggingTable(int n, std::vector<int> slots_per_part) : n_(n), slots_(std::move(slots_per_part))
{
    if (n < 1) throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
    if (static_cast<int>(slots_.size()) != n) throw std::invalid_argument("one slot count per part required");
    int total = 0;
    for (int s : slots_) {
        offsets_.push_back(total);
        total += s;
    }
    len_.assign(static_cast<std::size_t>(total), 0);
    rig_.assign(static_cast<std::size_t>(total), 0);
}

std::size_t LengthRiggingTable::index(int i, int k) const
{
    if (i < 1 || i > n_ || k < 1 || k > slots(i)) {
        throw InvalidIndex("length/rigging index (" + std::to_string(i) + "," + std::to_string(k) + ") out of range");
    }
    return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i - 1)] + k - 1);
}

RiggedConfiguration LengthRiggingTable::to_rc() const
{
    std::vector<RiggedPartition> parts;
    parts.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
        std::vector<RiggedRow> rows;
        for (int k = 1; k <= slots(i); ++k) {
            const int l = length(i, k);
            if (l < 0) throw std::logic_error("negative row length in length/rigging table");
            if (l > 0) rows.push_back({l, rigging(i, k)});
        }
        parts.emplace_back(std::move(rows));
    }
    return RiggedConfiguration(std::move(parts));
}

} // namespace rcinf
