#pragma once

// Inequality suite shared by the forward and reverse extensions. The reverse suite is the forward
// one under i -> n + 1 - i: the neighbour used by the min-recurrence flips from i - 1 to i + 1 and
// the vanishing layer moves from the top parts to the bottom parts.

#include <string>

#include "rcinf/report.hpp"
#include "rcinf/tables.hpp"

namespace rcinf::detail {

struct ForwardSide {
    using Table = ForwardExtendedTable;
    static int toward(int i) { return i - 1; }
    static int away(int i) { return i + 1; }
    static int depth(int /*n*/, int i) { return i; }
    static bool in_length_range(int n, int i, int j, int k) { return i >= 1 && j >= 1 && k >= 1 && i + j + k <= n + 2; }
};

struct ReverseSide {
    using Table = ReverseExtendedTable;
    static int toward(int i) { return i + 1; }
    static int away(int i) { return i - 1; }
    static int depth(int n, int i) { return n + 1 - i; }
    static bool in_length_range(int n, int i, int j, int k) { return i <= n && j >= 1 && k >= 1 && j + k - 1 <= i; }
};

/// Partial row length a_{i,j,k} = sum_{x<=j} T_{i,x,k-1} - sum_{x<j} T_{i,x,k}; zero at j = 0.
template <class Side>
int partial_length(const typename Side::Table& t, int i, int j, int k)
{
    if (j == 0) return 0;
    return t.row_sum(i, 1, j, k - 1) - t.row_sum(i, 1, j - 1, k);
}

template <class Side>
InequalityReport check_table(const typename Side::Table& t, const LengthRiggingTable& lr)
{
    InequalityReport report;
    const int n = t.rank();
    auto expect_le = [&](const char* name, int i, int j, int k, int lhs, int rhs) {
        ++report.checked;
        if (lhs > rhs) report.violations.push_back({name, {i, j, k}, lhs, rhs});
    };

    for (int k = 0; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            for (int i = 1; i <= n; ++i) {
                if (!t.contains(i, j, k)) continue;
                const int v = t.at(i, j, k);
                expect_le("n_nonnegative", i, j, k, 0, v);
                const int ti = Side::toward(i);
                const int ai = Side::away(i);
                if (k >= 1 && t.contains(ti, j + 1, k - 1)) {
                    expect_le("n_bounded_by_diagonal", i, j, k, v, t.at(ti, j + 1, k - 1));
                }
                if (t.contains(ai, j, k)) {
                    expect_le("n_monotone_in_i", i, j, k, v, t.at(ai, j, k));
                }
                if (k >= 1 && t.contains(i, j + 1, k - 1)) {
                    expect_le("n_bounded_by_next_column", i, j, k, v, t.at(i, j + 1, k - 1));
                }
                if (k >= 1 && Side::depth(n, i) <= k) {
                    expect_le("n_vanishes_on_outer_parts", i, j, k, v, 0);
                }
            }
        }
    }

    auto in_range = [n](int i, int j, int k) { return Side::in_length_range(n, i, j, k); };
    auto a = [&t](int i, int j, int k) { return partial_length<Side>(t, i, j, k); };

    for (int k = 1; k <= n + 1; ++k) {
        for (int j = 1; j <= n + 1; ++j) {
            for (int i = 1; i <= n; ++i) {
                if (!in_range(i, j, k)) continue;
                const int v = a(i, j, k);
                expect_le("a_nonnegative", i, j, k, 0, v);
                if (in_range(i, j + 1, k)) expect_le("a_monotone_in_j", i, j, k, v, a(i, j + 1, k));
                const int ai = Side::away(i);
                if (in_range(ai, j, k)) expect_le("a_monotone_in_i", i, j, k, v, a(ai, j, k));
                if (in_range(i, j, k + 1)) expect_le("a_decreasing_in_k", i, j, k, a(i, j, k + 1), v);
                if (in_range(i, j, k + 1) && in_range(i, j + 1, k)) {
                    expect_le("a_lower_row_shorter", i, j, k, a(i, j, k + 1), a(i, j + 1, k));
                }
                const int ti = Side::toward(i);
                if (k >= 2 && in_range(ti, j + 1, k - 1)) {
                    expect_le("a_bounded_by_diagonal", i, j, k, v, a(ti, j + 1, k - 1));
                }
            }
        }
    }

    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= lr.slots(i); ++k) {
            if (lr.length(i, k) != 0) continue;
            ++report.checked;
            if (lr.rigging(i, k) != 0) report.violations.push_back({"empty_row_zero_rigging", {i, k, 0}, lr.rigging(i, k), 0});
        }
    }
    return report;
}

} // namespace rcinf::detail
