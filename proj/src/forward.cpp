#include "rcinf/forward.hpp"

#include <algorithm>

#include "inequalities.hpp"

namespace rcinf {

const char* to_string(MembershipStage stage)
{
    switch (stage) {
    case MembershipStage::accepted: return "accepted";
    case MembershipStage::height_bound: return "height_bound";
    case MembershipStage::not_exponents: return "not_exponents";
    case MembershipStage::rebuild_mismatch: return "rebuild_mismatch";
    }
    return "unknown";
}

ForwardTriangle forward_triangle_from_columns(int n, const std::vector<std::vector<int>>& columns)
{
    ForwardTriangle t(n);
    if (static_cast<int>(columns.size()) != n) {
        throw ExponentError(ExponentError::Kind::shape, 0, static_cast<int>(columns.size()) + 1,
                            "expected " + std::to_string(n) + " columns, got " + std::to_string(columns.size()));
    }
    for (int j = 1; j <= n; ++j) {
        const auto& col = columns[static_cast<std::size_t>(j - 1)];
        if (static_cast<int>(col.size()) != n - j + 1) {
            throw ExponentError(ExponentError::Kind::shape, 0, j,
                                "column " + std::to_string(j) + " must hold " + std::to_string(n - j + 1) + " entries");
        }
        for (int i = 1; i <= n - j + 1; ++i) t.set(i, j, col[static_cast<std::size_t>(i - 1)]);
    }
    return t;
}

std::vector<std::vector<int>> forward_columns(const ForwardTriangle& t)
{
    const int n = t.rank();
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= n; ++j) {
        std::vector<int> col;
        for (int i = 1; i <= n - j + 1; ++i) col.push_back(t.at(i, j));
        cols.push_back(std::move(col));
    }
    return cols;
}

ForwardExponents validate_forward(const ForwardTriangle& raw)
{
    const int n = raw.rank();
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n - j + 1; ++i) {
            if (raw.at(i, j) < 0) {
                throw ExponentError(ExponentError::Kind::negative, i, j,
                                    "negative exponent at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i + 1 <= n - j + 1; ++i) {
            if (raw.at(i, j) > raw.at(i + 1, j)) {
                throw ExponentError(ExponentError::Kind::monotonicity, i, j,
                                    "x(" + std::to_string(i) + "," + std::to_string(j) + ") > x(" + std::to_string(i + 1)
                                        + "," + std::to_string(j) + ")");
            }
        }
    }
    return ForwardExponents(raw);
}

std::vector<int> word_of_forward(const ForwardTriangle& x)
{
    const int n = x.rank();
    std::vector<int> word;
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n - j + 1; ++i) {
            const int e = x.at(i, j);
            if (e < 0) throw ExponentError(ExponentError::Kind::negative, i, j, "negative exponent");
            word.insert(word.end(), static_cast<std::size_t>(e), i);
        }
    }
    return word;
}

ForwardExtendedTable extend_forward(const ForwardExponents& x)
{
    const int n = x.rank();
    ForwardExtendedTable N(n);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n - j + 1; ++i) N.set(i, j, 0, x.at(i, j));
    }
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n - k + 1; ++j) {
            N.set(1, j, k, 0);
            for (int i = 2; i <= n - j - k + 2; ++i) {
                const int diag = N.at(i - 1, j + 1, k - 1);
                const int slack = N.row_sum(i, 1, j, k - 1) - N.row_sum(i, 1, j - 1, k)
                                  - N.row_sum(i - 1, 1, j, k - 1) + N.row_sum(i - 1, 1, j, k);
                N.set(i, j, k, std::min(diag, slack));
            }
        }
    }
    return N;
}

namespace {

std::vector<int> forward_slots(int n)
{
    std::vector<int> slots;
    for (int i = 1; i <= n; ++i) slots.push_back(n - i + 1);
    return slots;
}

} // namespace

LengthRiggingTable lengths_riggings_forward(const ForwardExtendedTable& N)
{
    const int n = N.rank();
    LengthRiggingTable lr(n, forward_slots(n));
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n - i + 1; ++k) {
            const int top = n - i - k + 2;
            const int len = N.row_sum(i, 1, top, k - 1) - N.row_sum(i, 1, top - 1, k);
            const int rig = -N.at(i, top, k - 1) + N.at(i, top, k);
            lr.set(i, k, len, rig);
        }
    }
    return lr;
}

RiggedConfiguration rc_from_forward(const ForwardExponents& x)
{
    return lengths_riggings_forward(extend_forward(x)).to_rc();
}

LengthRiggingTable forward_lengths_riggings_of(const RiggedConfiguration& rc)
{
    const int n = rc.rank();
    LengthRiggingTable lr(n, forward_slots(n));
    for (int i = 1; i <= n; ++i) {
        const auto& rows = rc.part(i).rows();
        const int h = static_cast<int>(rows.size());
        if (h > height_bound(n, i)) throw HeightBoundError(i, h, height_bound(n, i));
        for (int k = 1; k <= h; ++k) {
            lr.set(i, k, rows[static_cast<std::size_t>(k - 1)].length, rows[static_cast<std::size_t>(k - 1)].rigging);
        }
    }
    return lr;
}

ForwardTriangle recover_forward(const RiggedConfiguration& rc)
{
    const int n = rc.rank();
    const LengthRiggingTable lr = forward_lengths_riggings_of(rc);
    auto L = [&lr](int i, int k) { return lr.length(i, k); };
    auto R = [&lr](int i, int k) { return lr.rigging(i, k); };

    ForwardExtendedTable N(n);
    for (int k = 0; k <= n - 1; ++k) {
        int j = 1;
        int i = n - j - k + 1;
        N.set(i, j, k, L(i, k + 1));
        for (j = 2; j <= n - k; ++j) {
            i = n - j - k + 1;
            N.set(i, j, k, R(i + 1, k + 1) + N.at(i + 1, j - 1, k) - std::min(0, L(i + 1, k + 1) - L(i, k + 1)));
        }
    }
    for (int t = 1; t <= n - 1; ++t) {
        for (int k = 0; k <= n - t - 1; ++k) {
            int j = 1;
            int i = n - j - k + 1 - t;
            N.set(i, j, k, L(i, k + 1) - N.row_sum(i, j + 1, j + t, k) + N.row_sum(i, j, j + t - 1, k + 1));
            for (j = 2; j <= n - k - t; ++j) {
                i = n - j - k + 1 - t;
                const int inner = L(i + 1, k + 1) - L(i, k + 1)
                                  - N.row_sum(i + 1, j, j + t - 1, k) + N.row_sum(i + 1, j - 1, j + t - 2, k + 1)
                                  + N.row_sum(i, j + 1, j + t, k) - N.row_sum(i, j, j + t - 1, k + 1);
                N.set(i, j, k, N.at(i + 1, j - 1, k + 1) - std::min(0, inner));
            }
        }
    }

    ForwardTriangle x(n);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n - j + 1; ++i) x.set(i, j, N.at(i, j, 0));
    }
    return x;
}

Membership<ForwardExponents> is_member_rcinf(const RiggedConfiguration& rc)
{
    Membership<ForwardExponents> out;
    ForwardTriangle candidate(rc.rank());
    try {
        candidate = recover_forward(rc);
    } catch (const HeightBoundError& e) {
        out.stage = MembershipStage::height_bound;
        out.detail = e.what();
        return out;
    }
    std::optional<ForwardExponents> x;
    try {
        x = validate_forward(candidate);
    } catch (const ExponentError& e) {
        out.stage = MembershipStage::not_exponents;
        out.detail = e.what();
        return out;
    }
    if (!(rc_from_forward(*x) == rc)) {
        out.stage = MembershipStage::rebuild_mismatch;
        out.detail = "closed form of recovered exponents differs from input";
        return out;
    }
    out.exponents = std::move(x);
    return out;
}

InequalityReport check_forward_table(const ForwardExtendedTable& table)
{
    return detail::check_table<detail::ForwardSide>(table, lengths_riggings_forward(table));
}

InequalityReport check_forward_inequalities(const ForwardExponents& x)
{
    return check_forward_table(extend_forward(x));
}

} // namespace rcinf
