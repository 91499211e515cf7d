#pragma once

#include <vector>

#include "rcinf/report.hpp"
#include "rcinf/rigged.hpp"
#include "rcinf/tables.hpp"

namespace rcinf {

/// Exponent triangle x_{i,j} (i + j <= n + 1) that is non-negative and weakly increasing in i.
/// Labels the element f^{x_{*,n}} ... f^{x_{*,1}} applied to the highest weight element.
class ForwardExponents {
public:
    int rank() const { return t_.rank(); }
    int at(int i, int j) const { return t_.at(i, j); }
    const ForwardTriangle& triangle() const { return t_; }

    friend bool operator==(const ForwardExponents&, const ForwardExponents&) = default;

private:
    explicit ForwardExponents(ForwardTriangle t) : t_(std::move(t)) {}
    friend ForwardExponents validate_forward(const ForwardTriangle& raw);

    ForwardTriangle t_;
};

/// Builds a raw triangle from columns: columns[j-1][i-1] = x_{i,j}, column j holding n-j+1 entries.
/// Throws ExponentError(shape) on a ragged-length mismatch.
ForwardTriangle forward_triangle_from_columns(int n, const std::vector<std::vector<int>>& columns);
std::vector<std::vector<int>> forward_columns(const ForwardTriangle& t);

/// Throws ExponentError at the first negative entry or the first (i, j) with x_{i,j} > x_{i+1,j}.
ForwardExponents validate_forward(const ForwardTriangle& raw);

/// Application-order word: for j = 1..n, for i = 1..n-j+1, index i repeated x_{i,j} times.
/// Throws ExponentError on a negative entry.
std::vector<int> word_of_forward(const ForwardTriangle& x);
inline std::vector<int> word_of_forward(const ForwardExponents& x) { return word_of_forward(x.triangle()); }

/// Three-index extension N_{i,j,k}: layer 0 is x, later layers follow the min-recurrence.
ForwardExtendedTable extend_forward(const ForwardExponents& x);

/// L_{i,k} and R_{i,k} for 1 <= k <= n-i+1.
LengthRiggingTable lengths_riggings_forward(const ForwardExtendedTable& table);

/// Closed form of f^x applied to the empty configuration.
RiggedConfiguration rc_from_forward(const ForwardExponents& x);

/// Reads L_{i,k}, R_{i,k} off a configuration, padding missing rows with (0, 0).
/// Throws HeightBoundError if a part is taller than min(i, n-i+1).
LengthRiggingTable forward_lengths_riggings_of(const RiggedConfiguration& rc);

/// Runs the recovery recurrence on any configuration within the height bounds and returns the
/// candidate exponent layer. Never fails on arithmetic; the result may be negative or non-monotone
/// when rc is not in the crystal.
ForwardTriangle recover_forward(const RiggedConfiguration& rc);

/// Rebuild-and-compare membership test.
Membership<ForwardExponents> is_member_rcinf(const RiggedConfiguration& rc);

/// Evaluates the structural inequalities of the extension of x over every meaningful index.
InequalityReport check_forward_inequalities(const ForwardExponents& x);

/// Same suite on an arbitrary table, for example one built by hand.
InequalityReport check_forward_table(const ForwardExtendedTable& table);

} // namespace rcinf
