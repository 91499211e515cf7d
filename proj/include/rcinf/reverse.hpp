#pragma once

#include <vector>

#include "rcinf/report.hpp"
#include "rcinf/rigged.hpp"
#include "rcinf/tables.hpp"

namespace rcinf {

/// Exponent triangle psi_{i,j} (1 <= j <= i <= n), non-negative and weakly decreasing in i.
/// Labels f^{psi_{*,n}} ... f^{psi_{*,1}} applied to the highest weight element, where each wave
/// applies f_n first and f_j last.
class ReverseExponents {
public:
    int rank() const { return t_.rank(); }
    int at(int i, int j) const { return t_.at(i, j); }
    const ReverseTriangle& triangle() const { return t_; }

    friend bool operator==(const ReverseExponents&, const ReverseExponents&) = default;

private:
    explicit ReverseExponents(ReverseTriangle t) : t_(std::move(t)) {}
    friend ReverseExponents validate_reverse(const ReverseTriangle& raw);

    ReverseTriangle t_;
};

/// rows[j-1] lists psi_{j,j}, psi_{j+1,j}, ..., psi_{n,j}.
ReverseTriangle reverse_triangle_from_rows(int n, const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> reverse_rows(const ReverseTriangle& t);

/// Throws ExponentError at the first negative entry or the first (i, j) with psi_{i,j} < psi_{i+1,j}.
ReverseExponents validate_reverse(const ReverseTriangle& raw);

/// Application-order word: for j = 1..n, for i = n down to j, index i repeated psi_{i,j} times.
std::vector<int> word_of_reverse(const ReverseTriangle& psi);
inline std::vector<int> word_of_reverse(const ReverseExponents& psi) { return word_of_reverse(psi.triangle()); }

/// Three-index extension M_{i,j,k}; the min-recurrence looks at part i + 1.
ReverseExtendedTable extend_reverse(const ReverseExponents& psi);

/// Row lengths and riggings for 1 <= k <= i.
LengthRiggingTable lengths_riggings_reverse(const ReverseExtendedTable& table);

RiggedConfiguration rc_from_reverse(const ReverseExponents& psi);

LengthRiggingTable reverse_lengths_riggings_of(const RiggedConfiguration& rc);

/// Inverse recurrence; total on configurations within the height bounds.
ReverseTriangle recover_reverse(const RiggedConfiguration& rc);

Membership<ReverseExponents> is_member_rcinf_reverse(const RiggedConfiguration& rc);

InequalityReport check_reverse_inequalities(const ReverseExponents& psi);
InequalityReport check_reverse_table(const ReverseExtendedTable& table);

} // namespace rcinf
