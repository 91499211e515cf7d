#pragma once

#include <string>
#include <vector>

#include "rcinf/forward.hpp"
#include "rcinf/reverse.hpp"

namespace rcinf {

using TableauRows = std::vector<std::vector<int>>;
using TableauColumns = std::vector<std::vector<int>>;

/// Marginally large tableau, stored as the counts c(r, y) of y-boxes in row r for y > r.
/// The r-boxes of row r are implied: there is one more of them than the length of row r + 1,
/// which leaves exactly one basic r-column.
class MarginallyLargeTableau {
public:
    /// All off-diagonal counts zero: the highest weight element.
    explicit MarginallyLargeTableau(int n);

    int rank() const { return n_; }

    /// 1 <= r <= n, r + 1 <= y <= n + 1.
    int count(int r, int y) const;
    void set_count(int r, int y, int c);

    int diagonal_count(int r) const;
    int row_length(int r) const;

    /// Explicit rows, top row first, each weakly increasing.
    TableauRows rows() const;

    friend bool operator==(const MarginallyLargeTableau&, const MarginallyLargeTableau&) = default;

private:
    std::size_t index(int r, int y) const;

    int n_;
    std::vector<int> counts_;
};

/// Marginally large reverse tableau. Its columns are either basic (1..h) or of the form
/// {1..h+1} minus one letter; the stored counts are, for part x (height-x columns) and the y-th
/// row from the bottom of that part, the number of (x - y + 2)-boxes. Counts weakly decrease
/// upwards within a part.
class MarginallyLargeReverseTableau {
public:
    explicit MarginallyLargeReverseTableau(int n);

    int rank() const { return n_; }

    /// 1 <= y <= x <= n; the boxes counted hold the value x - y + 2.
    int count(int x, int y) const;
    void set_count(int x, int y, int c);

    /// Number of height-h columns that skip the letter j (1 <= j <= h).
    int columns_missing(int h, int j) const;

    /// Columns left to right, each listed top to bottom. Taller columns come first; within a
    /// height, columns skipping smaller letters come first and the basic column last.
    TableauColumns columns() const;

    /// Rows top to bottom with columns aligned at the bottom, so the top rows are the shortest.
    /// Every row is weakly decreasing.
    TableauRows rows() const;

    friend bool operator==(const MarginallyLargeReverseTableau&, const MarginallyLargeReverseTableau&) = default;

private:
    std::size_t index(int x, int y) const;

    int n_;
    std::vector<int> counts_;
};

class InvalidTableau : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws InvalidTableau on negative counts or, for reverse tableaux, a part whose counts grow upwards.
void validate(const MarginallyLargeTableau& t);
void validate(const MarginallyLargeReverseTableau& t);

MarginallyLargeTableau highest_mlt(int n);
MarginallyLargeTableau mlt_from_forward(const ForwardExponents& x);
ForwardExponents forward_from_mlt(const MarginallyLargeTableau& t);

/// Kashiwara operator f_i via the column reading (right to left, each column top to bottom) and
/// the usual +/- bracketing, followed by restoring marginality.
MarginallyLargeTableau apply_f_mlt(const MarginallyLargeTableau& t, int i);

MarginallyLargeReverseTableau highest_mlrt(int n);
MarginallyLargeReverseTableau mlrt_from_reverse(const ReverseExponents& psi);
ReverseExponents reverse_from_mlrt(const MarginallyLargeReverseTableau& t);

/// f_i via the column reading left to right, each column top to bottom, followed by restoring
/// marginality.
MarginallyLargeReverseTableau apply_f_mlrt(const MarginallyLargeReverseTableau& t, int i);

bool is_semistandard(const TableauRows& rows);
/// Rows weakly decreasing; columns (bottom aligned) strictly increasing downwards.
bool is_reverse_semistandard(const TableauRows& rows);

/// One line per row, entries bracketed: "[1][1][2]".
std::string render(const TableauRows& rows);

} // namespace rcinf
