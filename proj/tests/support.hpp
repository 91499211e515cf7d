#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "rcinf/explore.hpp"
#include "rcinf/forward.hpp"
#include "rcinf/reverse.hpp"

namespace rcinf::testing {

using Rows = std::vector<std::vector<RiggedRow>>;

inline RiggedConfiguration make_rc(const Rows& parts)
{
    std::vector<RiggedPartition> out;
    for (const auto& rows : parts) out.emplace_back(rows);
    return RiggedConfiguration(std::move(out));
}

/// columns[j-1][i-1] = x_{i,j}.
inline ForwardExponents fx(int n, const std::vector<std::vector<int>>& columns)
{
    return validate_forward(forward_triangle_from_columns(n, columns));
}

/// rows[j-1] = (psi_{j,j}, ..., psi_{n,j}).
inline ReverseExponents rx(int n, const std::vector<std::vector<int>>& rows)
{
    return validate_reverse(reverse_triangle_from_rows(n, rows));
}

/// psi_{i,j} = x_{n+1-i,j}: the two parametrizations are mirror images of each other.
inline ReverseExponents flip(const ForwardExponents& x)
{
    const int n = x.rank();
    ReverseTriangle p(n);
    for (int j = 1; j <= n; ++j) {
        for (int i = j; i <= n; ++i) p.set(i, j, x.at(n + 1 - i, j));
    }
    return validate_reverse(p);
}

/// Independent entries sorted within each column; always a valid triangle.
inline ForwardExponents random_forward(int n, int bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, bound);
    ForwardTriangle t(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> col;
        for (int i = 1; i <= n - j + 1; ++i) col.push_back(pick(rng));
        std::sort(col.begin(), col.end());
        for (int i = 1; i <= n - j + 1; ++i) t.set(i, j, col[static_cast<std::size_t>(i - 1)]);
    }
    return validate_forward(t);
}

inline ReverseExponents random_reverse(int n, int bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, bound);
    ReverseTriangle t(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> col;
        for (int i = j; i <= n; ++i) col.push_back(pick(rng));
        std::sort(col.rbegin(), col.rend());
        for (int i = j; i <= n; ++i) t.set(i, j, col[static_cast<std::size_t>(i - j)]);
    }
    return validate_reverse(t);
}

inline std::vector<RiggedConfiguration> ball(int n, int radius) { return explore(n, radius).nodes; }

inline std::unordered_set<std::string> ball_keys(int n, int radius)
{
    std::unordered_set<std::string> keys;
    for (const auto& rc : ball(n, radius)) keys.insert(to_string(rc));
    return keys;
}

/// Every configuration obtained by changing one rigging by +-1 or one row length by +-1 (keeping
/// lengths positive). Mutants equal to the original, which can arise after re-sorting, are dropped.
inline std::vector<RiggedConfiguration> mutants(const RiggedConfiguration& rc)
{
    std::vector<RiggedConfiguration> out;
    const int n = rc.rank();
    for (int p = 1; p <= n; ++p) {
        const auto& rows = rc.part(p).rows();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            for (int field = 0; field < 2; ++field) {
                for (int delta : {-1, 1}) {
                    auto changed = rows;
                    (field == 0 ? changed[k].length : changed[k].rigging) += delta;
                    if (changed[k].length < 1) continue;
                    auto parts = rc.parts();
                    parts[static_cast<std::size_t>(p - 1)] = RiggedPartition(changed);
                    RiggedConfiguration m(std::move(parts));
                    if (!(m == rc)) out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

inline std::vector<int> part_sums(const ForwardExponents& x)
{
    std::vector<int> s(static_cast<std::size_t>(x.rank()), 0);
    for (int i = 1; i <= x.rank(); ++i) {
        for (int j = 1; j <= x.rank() - i + 1; ++j) s[static_cast<std::size_t>(i - 1)] += x.at(i, j);
    }
    return s;
}

inline std::vector<int> part_sums(const ReverseExponents& psi)
{
    std::vector<int> s(static_cast<std::size_t>(psi.rank()), 0);
    for (int i = 1; i <= psi.rank(); ++i) {
        for (int j = 1; j <= i; ++j) s[static_cast<std::size_t>(i - 1)] += psi.at(i, j);
    }
    return s;
}

} // namespace rcinf::testing
