#include "rcinf/rigged.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rcinf {

RiggedPartition::RiggedPartition(std::vector<RiggedRow> rows) : rows_(std::move(rows))
{
    for (const auto& row : rows_) {
        if (row.length < 1) throw std::invalid_argument("rigged row length must be positive");
    }
    std::sort(rows_.begin(), rows_.end(), canonical_before);
}

int RiggedPartition::boxes() const
{
    return std::accumulate(rows_.begin(), rows_.end(), 0,
                           [](int acc, const RiggedRow& r) { return acc + r.length; });
}

bool is_canonical(std::span<const RiggedRow> rows)
{
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].length < 1) return false;
        if (k > 0 && canonical_before(rows[k], rows[k - 1])) return false;
    }
    return true;
}

RiggedConfiguration::RiggedConfiguration(std::vector<RiggedPartition> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) throw InvalidRank("rank must be at least 1");
}

const RiggedPartition& RiggedConfiguration::part(int i) const
{
    if (i < 1 || i > rank()) throw InvalidIndex("part index " + std::to_string(i) + " out of range");
    return parts_[static_cast<std::size_t>(i - 1)];
}

int RiggedConfiguration::total_boxes() const
{
    int total = 0;
    for (const auto& p : parts_) total += p.boxes();
    return total;
}

RiggedConfiguration empty_rc(int n)
{
    if (n < 1) throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
    return RiggedConfiguration(std::vector<RiggedPartition>(static_cast<std::size_t>(n)));
}

RiggedConfiguration apply_f(const RiggedConfiguration& rc, int i)
{
    const int n = rc.rank();
    if (i < 1 || i > n) throw InvalidIndex("operator index " + std::to_string(i) + " out of range 1.." + std::to_string(n));

    std::vector<std::vector<RiggedRow>> rows;
    rows.reserve(rc.parts().size());
    for (const auto& p : rc.parts()) rows.push_back(p.rows());

    auto& target = rows[static_cast<std::size_t>(i - 1)];

    // Canonical order puts the longest row of each rigging value first, so the first row that
    // carries the minimum is the one to lengthen.
    std::ptrdiff_t chosen = -1;
    int min_rigging = 1;
    for (std::size_t k = 0; k < target.size(); ++k) {
        if (target[k].rigging <= 0 && target[k].rigging < min_rigging) {
            min_rigging = target[k].rigging;
            chosen = static_cast<std::ptrdiff_t>(k);
        }
    }

    int old_length = 0;
    if (chosen >= 0) {
        old_length = target[static_cast<std::size_t>(chosen)].length;
    }

    for (std::size_t k = 0; k < target.size(); ++k) {
        if (static_cast<std::ptrdiff_t>(k) == chosen) continue;
        if (target[k].length > old_length) target[k].rigging -= 2;
    }
    if (chosen >= 0) {
        auto& row = target[static_cast<std::size_t>(chosen)];
        row.length += 1;
        row.rigging -= 1;
    } else {
        target.push_back({1, -1});
    }

    for (int nb : {i - 1, i + 1}) {
        if (nb < 1 || nb > n) continue;
        for (auto& row : rows[static_cast<std::size_t>(nb - 1)]) {
            if (row.length > old_length) row.rigging += 1;
        }
    }

    std::vector<RiggedPartition> parts;
    parts.reserve(rows.size());
    for (auto& r : rows) parts.emplace_back(std::move(r));
    return RiggedConfiguration(std::move(parts));
}

RiggedConfiguration apply_f_word(const RiggedConfiguration& rc, std::span<const int> word)
{
    RiggedConfiguration out = rc;
    for (int i : word) out = apply_f(out, i);
    return out;
}

RootWeight weight(const RiggedConfiguration& rc)
{
    RootWeight w;
    w.coefficients.reserve(rc.parts().size());
    for (const auto& p : rc.parts()) w.coefficients.push_back(p.boxes());
    return w;
}

std::string to_string(const RiggedConfiguration& rc)
{
    std::ostringstream os;
    os << '[';
    bool first_part = true;
    for (const auto& p : rc.parts()) {
        if (!first_part) os << '|';
        first_part = false;
        if (p.empty()) os << "0";
        bool first_row = true;
        for (const auto& r : p.rows()) {
            if (!first_row) os << ' ';
            first_row = false;
            os << '(' << r.length << ',' << r.rigging << ')';
        }
    }
    os << ']';
    return os.str();
}

} // namespace rcinf
