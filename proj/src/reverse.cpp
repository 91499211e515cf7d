#include "rcinf/reverse.hpp"

#include <algorithm>

#include "inequalities.hpp"

namespace rcinf {

ReverseTriangle reverse_triangle_from_rows(int n, const std::vector<std::vector<int>>& rows)
{
    ReverseTriangle t(n);
    if (static_cast<int>(rows.size()) != n) {
        throw ExponentError(ExponentError::Kind::shape, 0, static_cast<int>(rows.size()) + 1,
                            "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    }
    for (int j = 1; j <= n; ++j) {
        const auto& row = rows[static_cast<std::size_t>(j - 1)];
        if (static_cast<int>(row.size()) != n - j + 1) {
            throw ExponentError(ExponentError::Kind::shape, 0, j,
                                "row " + std::to_string(j) + " must hold " + std::to_string(n - j + 1) + " entries");
        }
        for (int i = j; i <= n; ++i) t.set(i, j, row[static_cast<std::size_t>(i - j)]);
    }
    return t;
}

std::vector<std::vector<int>> reverse_rows(const ReverseTriangle& t)
{
    const int n = t.rank();
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= n; ++j) {
        std::vector<int> row;
        for (int i = j; i <= n; ++i) row.push_back(t.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ReverseExponents validate_reverse(const ReverseTriangle& raw)
{
    const int n = raw.rank();
    for (int j = 1; j <= n; ++j) {
        for (int i = j; i <= n; ++i) {
            if (raw.at(i, j) < 0) {
                throw ExponentError(ExponentError::Kind::negative, i, j,
                                    "negative exponent at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    for (int j = 1; j <= n; ++j) {
        for (int i = j; i + 1 <= n; ++i) {
            if (raw.at(i, j) < raw.at(i + 1, j)) {
                throw ExponentError(ExponentError::Kind::monotonicity, i, j,
                                    "psi(" + std::to_string(i) + "," + std::to_string(j) + ") < psi(" + std::to_string(i + 1)
                                        + "," + std::to_string(j) + ")");
            }
        }
    }
    return ReverseExponents(raw);
}

std::vector<int> word_of_reverse(const ReverseTriangle& psi)
{
    const int n = psi.rank();
    std::vector<int> word;
    for (int j = 1; j <= n; ++j) {
        for (int i = n; i >= j; --i) {
            const int e = psi.at(i, j);
            if (e < 0) throw ExponentError(ExponentError::Kind::negative, i, j, "negative exponent");
            word.insert(word.end(), static_cast<std::size_t>(e), i);
        }
    }
    return word;
}

ReverseExtendedTable extend_reverse(const ReverseExponents& psi)
{
    const int n = psi.rank();
    ReverseExtendedTable M(n);
    for (int j = 1; j <= n; ++j) {
        for (int i = j; i <= n; ++i) M.set(i, j, 0, psi.at(i, j));
    }
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n - k + 1; ++j) {
            M.set(n, j, k, 0);
            for (int i = n - 1; i >= j + k - 1; --i) {
                const int diag = M.at(i + 1, j + 1, k - 1);
                const int slack = M.row_sum(i, 1, j, k - 1) - M.row_sum(i + 1, 1, j, k - 1)
                                  - M.row_sum(i, 1, j - 1, k) + M.row_sum(i + 1, 1, j, k);
                M.set(i, j, k, std::min(diag, slack));
            }
        }
    }
    return M;
}

namespace {

std::vector<int> reverse_slots(int n)
{
    std::vector<int> slots;
    for (int i = 1; i <= n; ++i) slots.push_back(i);
    return slots;
}

} // namespace

LengthRiggingTable lengths_riggings_reverse(const ReverseExtendedTable& M)
{
    const int n = M.rank();
    LengthRiggingTable lr(n, reverse_slots(n));
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= i; ++k) {
            const int top = i - k + 1;
            const int len = M.row_sum(i, 1, top, k - 1) - M.row_sum(i, 1, top - 1, k);
            const int rig = -M.at(i, top, k - 1) + M.at(i, top, k);
            lr.set(i, k, len, rig);
        }
    }
    return lr;
}

RiggedConfiguration rc_from_reverse(const ReverseExponents& psi)
{
    return lengths_riggings_reverse(extend_reverse(psi)).to_rc();
}

LengthRiggingTable reverse_lengths_riggings_of(const RiggedConfiguration& rc)
{
    const int n = rc.rank();
    LengthRiggingTable lr(n, reverse_slots(n));
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

ReverseTriangle recover_reverse(const RiggedConfiguration& rc)
{
    const int n = rc.rank();
    const LengthRiggingTable lr = reverse_lengths_riggings_of(rc);
    auto L = [&lr](int i, int k) { return lr.length(i, k); };
    auto P = [&lr](int i, int k) { return lr.rigging(i, k); };

    ReverseExtendedTable M(n);
    for (int k = 0; k <= n - 1; ++k) {
        int j = 1;
        int i = j + k;
        M.set(i, j, k, L(i, k + 1));
        for (j = 2; j <= n - k; ++j) {
            i = j + k;
            M.set(i, j, k, P(i - 1, k + 1) + M.at(i - 1, j - 1, k) - std::min(0, L(i - 1, k + 1) - L(i, k + 1)));
        }
    }
    for (int t = 1; t <= n - 1; ++t) {
        for (int k = 0; k <= n - t - 1; ++k) {
            int j = 1;
            int i = j + k + t;
            M.set(i, j, k, L(i, k + 1) - M.row_sum(i, j + 1, j + t, k) + M.row_sum(i, j, j + t - 1, k + 1));
            for (j = 2; j <= n - k - t; ++j) {
                i = j + k + t;
                const int inner = L(i - 1, k + 1) - L(i, k + 1)
                                  - M.row_sum(i - 1, j, j + t - 1, k) + M.row_sum(i - 1, j - 1, j + t - 2, k + 1)
                                  + M.row_sum(i, j + 1, j + t, k) - M.row_sum(i, j, j + t - 1, k + 1);
                M.set(i, j, k, M.at(i - 1, j - 1, k + 1) - std::min(0, inner));
            }
        }
    }

    ReverseTriangle psi(n);
    for (int j = 1; j <= n; ++j) {
        for (int i = j; i <= n; ++i) psi.set(i, j, M.at(i, j, 0));
    }
    return psi;
}

Membership<ReverseExponents> is_member_rcinf_reverse(const RiggedConfiguration& rc)
{
    Membership<ReverseExponents> out;
    ReverseTriangle candidate(rc.rank());
    try {
        candidate = recover_reverse(rc);
    } catch (const HeightBoundError& e) {
        out.stage = MembershipStage::height_bound;
        out.detail = e.what();
        return out;
    }
    std::optional<ReverseExponents> psi;
    try {
        psi = validate_reverse(candidate);
    } catch (const ExponentError& e) {
        out.stage = MembershipStage::not_exponents;
        out.detail = e.what();
        return out;
    }
    if (!(rc_from_reverse(*psi) == rc)) {
        out.stage = MembershipStage::rebuild_mismatch;
        out.detail = "closed form of recovered exponents differs from input";
        return out;
    }
    out.exponents = std::move(psi);
    return out;
}

InequalityReport check_reverse_table(const ReverseExtendedTable& table)
{
    return detail::check_table<detail::ReverseSide>(table, lengths_riggings_reverse(table));
}

InequalityReport check_reverse_inequalities(const ReverseExponents& psi)
{
    return check_reverse_table(extend_reverse(psi));
}

} // namespace rcinf
