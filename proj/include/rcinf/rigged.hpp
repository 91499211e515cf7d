#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcinf {

/// A single row of a rigged partition: its box count and the integer label on its right.
struct RiggedRow {
    int length = 0;
    int rigging = 0;

    friend bool operator==(const RiggedRow&, const RiggedRow&) = default;
};

/// Canonical row order: longer rows first, ties broken by smaller rigging.
inline bool canonical_before(const RiggedRow& a, const RiggedRow& b)
{
    if (a.length != b.length) return a.length > b.length;
    return a.rigging < b.rigging;
}

class InvalidRank : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidIndex : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A multiset of rigged rows kept in canonical order. Rows of length zero are never stored.
class RiggedPartition {
public:
    RiggedPartition() = default;

    /// Sorts into canonical order. Throws std::invalid_argument on a row of length < 1.
    explicit RiggedPartition(std::vector<RiggedRow> rows);

    const std::vector<RiggedRow>& rows() const { return rows_; }
    std::size_t height() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    int boxes() const;

    friend bool operator==(const RiggedPartition&, const RiggedPartition&) = default;

private:
    std::vector<RiggedRow> rows_;
};

/// True when rows are all positive-length and already in canonical order.
bool is_canonical(std::span<const RiggedRow> rows);

/// Box counts per part, i.e. the weight in simple-root coordinates (negated).
struct RootWeight {
    std::vector<int> coefficients;

    friend bool operator==(const RootWeight&, const RootWeight&) = default;
};

class RiggedConfiguration {
public:
    /// Throws InvalidRank when parts is empty.
    explicit RiggedConfiguration(std::vector<RiggedPartition> parts);

    int rank() const { return static_cast<int>(parts_.size()); }

    /// 1-based part access.
    const RiggedPartition& part(int i) const;
    const std::vector<RiggedPartition>& parts() const { return parts_; }

    int total_boxes() const;

    friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;

private:
    std::vector<RiggedPartition> parts_;
};

/// The highest weight element: n empty rigged partitions.
RiggedConfiguration empty_rc(int n);

/// Lowering operator f_i (1-based i) on a rigged configuration.
///
/// Picks the smallest non-positive rigging of part i and lengthens the longest row carrying
/// it (rigging - 1); without a non-positive rigging a new row (1, -1) is created. With l the
/// chosen row's length before the box was added, the other rows of part i longer than l lose
/// 2 from their rigging and rows of parts i-1, i+1 longer than l gain 1.
///
/// Only certified on elements reachable from empty_rc(n); outside that set the operator of the
/// full theory also involves vacancy numbers that are not modelled here.
RiggedConfiguration apply_f(const RiggedConfiguration& rc, int i);

/// Applies the word in application order: word[0] acts first.
RiggedConfiguration apply_f_word(const RiggedConfiguration& rc, std::span<const int> word);

RootWeight weight(const RiggedConfiguration& rc);

/// Compact single-line rendering, e.g. "[(2,-1)|(1,-1)]".
std::string to_string(const RiggedConfiguration& rc);

} // namespace rcinf
