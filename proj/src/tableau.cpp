#include "rcinf/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rcinf {

namespace {

void require_rank(int n)
{
    if (n < 1) throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
}

void require_index(int i, int n)
{
    if (i < 1 || i > n) throw InvalidIndex("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

// Positions in the reading word that survive the bracketing, in reading order. Each '-' (letter
// i + 1) cancels the nearest unmatched '+' (letter i) to its left.
template <class Pos>
std::vector<Pos> unbracketed_plus(const std::vector<std::pair<int, Pos>>& word, int i)
{
    std::vector<Pos> open;
    for (const auto& [letter, pos] : word) {
        if (letter == i) {
            open.push_back(pos);
        } else if (letter == i + 1 && !open.empty()) {
            open.pop_back();
        }
    }
    return open;
}

} // namespace

MarginallyLargeTableau::MarginallyLargeTableau(int n) : n_(n)
{
    require_rank(n);
    counts_.assign(static_cast<std::size_t>(n * (n + 1) / 2), 0);
}

std::size_t MarginallyLargeTableau::index(int r, int y) const
{
    if (r < 1 || r > n_ || y <= r || y > n_ + 1) {
        throw InvalidIndex("tableau count (" + std::to_string(r) + "," + std::to_string(y) + ") out of range");
    }
    // Row r owns n + 1 - r slots; rows before it own n, n - 1, ...
    const int before = (r - 1) * n_ - (r - 1) * (r - 2) / 2;
    return static_cast<std::size_t>(before + (y - r - 1));
}

int MarginallyLargeTableau::count(int r, int y) const { return counts_[index(r, y)]; }

void MarginallyLargeTableau::set_count(int r, int y, int c) { counts_[index(r, y)] = c; }

int MarginallyLargeTableau::diagonal_count(int r) const
{
    require_index(r, n_);
    return r == n_ ? 1 : row_length(r + 1) + 1;
}

int MarginallyLargeTableau::row_length(int r) const
{
    int len = diagonal_count(r);
    for (int y = r + 1; y <= n_ + 1; ++y) len += count(r, y);
    return len;
}

TableauRows MarginallyLargeTableau::rows() const
{
    TableauRows out(static_cast<std::size_t>(n_));
    for (int r = n_; r >= 1; --r) {
        auto& row = out[static_cast<std::size_t>(r - 1)];
        const int diag = r == n_ ? 1 : static_cast<int>(out[static_cast<std::size_t>(r)].size()) + 1;
        row.insert(row.end(), static_cast<std::size_t>(diag), r);
        for (int y = r + 1; y <= n_ + 1; ++y) row.insert(row.end(), static_cast<std::size_t>(count(r, y)), y);
    }
    return out;
}

MarginallyLargeReverseTableau::MarginallyLargeReverseTableau(int n) : n_(n)
{
    require_rank(n);
    counts_.assign(static_cast<std::size_t>(n * (n + 1) / 2), 0);
}

std::size_t MarginallyLargeReverseTableau::index(int x, int y) const
{
    if (x < 1 || x > n_ || y < 1 || y > x) {
        throw InvalidIndex("reverse tableau count (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    }
    return static_cast<std::size_t>(x * (x - 1) / 2 + (y - 1));
}

int MarginallyLargeReverseTableau::count(int x, int y) const { return counts_[index(x, y)]; }

void MarginallyLargeReverseTableau::set_count(int x, int y, int c) { counts_[index(x, y)] = c; }

int MarginallyLargeReverseTableau::columns_missing(int h, int j) const
{
    require_index(h, n_);
    require_index(j, h);
    const int y = h - j + 1;
    return count(h, y) - (y + 1 <= h ? count(h, y + 1) : 0);
}

TableauColumns MarginallyLargeReverseTableau::columns() const
{
    TableauColumns out;
    for (int h = n_; h >= 1; --h) {
        for (int j = 1; j <= h; ++j) {
            std::vector<int> col;
            for (int v = 1; v <= h + 1; ++v) {
                if (v != j) col.push_back(v);
            }
            out.insert(out.end(), static_cast<std::size_t>(columns_missing(h, j)), col);
        }
        std::vector<int> basic;
        for (int v = 1; v <= h; ++v) basic.push_back(v);
        out.push_back(std::move(basic));
    }
    return out;
}

TableauRows MarginallyLargeReverseTableau::rows() const
{
    TableauRows out(static_cast<std::size_t>(n_));
    for (const auto& col : columns()) {
        const int h = static_cast<int>(col.size());
        for (int p = 0; p < h; ++p) out[static_cast<std::size_t>(n_ - h + p)].push_back(col[static_cast<std::size_t>(p)]);
    }
    return out;
}

void validate(const MarginallyLargeTableau& t)
{
    const int n = t.rank();
    for (int r = 1; r <= n; ++r) {
        for (int y = r + 1; y <= n + 1; ++y) {
            if (t.count(r, y) < 0) {
                throw InvalidTableau("negative count of " + std::to_string(y) + " in row " + std::to_string(r));
            }
        }
    }
}

void validate(const MarginallyLargeReverseTableau& t)
{
    const int n = t.rank();
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= x; ++y) {
            if (t.count(x, y) < 0) {
                throw InvalidTableau("negative count in part " + std::to_string(x) + " row " + std::to_string(y));
            }
            if (y + 1 <= x && t.count(x, y + 1) > t.count(x, y)) {
                throw InvalidTableau("part " + std::to_string(x) + " has more boxes in row " + std::to_string(y + 1)
                                     + " than in row " + std::to_string(y));
            }
        }
    }
}

MarginallyLargeTableau highest_mlt(int n) { return MarginallyLargeTableau(n); }

MarginallyLargeTableau mlt_from_forward(const ForwardExponents& x)
{
    const int n = x.rank();
    MarginallyLargeTableau t(n);
    for (int r = 1; r <= n; ++r) {
        for (int y = r + 1; y <= n + 1; ++y) {
            const int j = n - y + 2;
            t.set_count(r, y, x.at(r, j) - (r > 1 ? x.at(r - 1, j) : 0));
        }
    }
    return t;
}

ForwardExponents forward_from_mlt(const MarginallyLargeTableau& t)
{
    validate(t);
    const int n = t.rank();
    ForwardTriangle raw(n);
    for (int j = 1; j <= n; ++j) {
        const int y = n - j + 2;
        int acc = 0;
        for (int i = 1; i <= n - j + 1; ++i) {
            acc += t.count(i, y);
            raw.set(i, j, acc);
        }
    }
    return validate_forward(raw);
}

MarginallyLargeTableau apply_f_mlt(const MarginallyLargeTableau& t, int i)
{
    const int n = t.rank();
    require_index(i, n);
    TableauRows rows = t.rows();

    using Cell = std::pair<std::size_t, std::size_t>;
    std::vector<std::pair<int, Cell>> word;
    const std::size_t width = rows.front().size();
    for (std::size_t c = width; c-- > 0;) {
        for (std::size_t r = 0; r < rows.size() && c < rows[r].size(); ++r) word.push_back({rows[r][c], {r, c}});
    }
    const auto open = unbracketed_plus(word, i);
    if (open.empty()) throw std::logic_error("f_" + std::to_string(i) + " kills a marginally large tableau");
    const auto [r0, c0] = open.front();
    rows[r0][c0] = i + 1;

    MarginallyLargeTableau out(n);
    for (int r = 1; r <= n; ++r) {
        for (int v : rows[static_cast<std::size_t>(r - 1)]) {
            if (v > r) out.set_count(r, v, out.count(r, v) + 1);
        }
    }
    return out;
}

MarginallyLargeReverseTableau highest_mlrt(int n) { return MarginallyLargeReverseTableau(n); }

MarginallyLargeReverseTableau mlrt_from_reverse(const ReverseExponents& psi)
{
    const int n = psi.rank();
    MarginallyLargeReverseTableau t(n);
    auto d = [&](int x, int j) { return psi.at(x, j) - (x < n ? psi.at(x + 1, j) : 0); };
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= x; ++y) {
            int c = 0;
            for (int j = 1; j <= x - y + 1; ++j) c += d(x, j);
            t.set_count(x, y, c);
        }
    }
    return t;
}

ReverseExponents reverse_from_mlrt(const MarginallyLargeReverseTableau& t)
{
    validate(t);
    const int n = t.rank();
    ReverseTriangle raw(n);
    for (int j = 1; j <= n; ++j) {
        int acc = 0;
        for (int x = n; x >= j; --x) {
            acc += t.columns_missing(x, j);
            raw.set(x, j, acc);
        }
    }
    return validate_reverse(raw);
}

MarginallyLargeReverseTableau apply_f_mlrt(const MarginallyLargeReverseTableau& t, int i)
{
    const int n = t.rank();
    require_index(i, n);
    TableauColumns cols = t.columns();

    using Cell = std::pair<std::size_t, std::size_t>;
    std::vector<std::pair<int, Cell>> word;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t p = 0; p < cols[c].size(); ++p) word.push_back({cols[c][p], {c, p}});
    }
    const auto open = unbracketed_plus(word, i);
    if (open.empty()) throw std::logic_error("f_" + std::to_string(i) + " kills a marginally large reverse tableau");
    const auto [c0, p0] = open.front();
    cols[c0][p0] = i + 1;

    // Reclassify every column; basic columns are dropped and one per height is implied again.
    std::vector<std::vector<int>> missing(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 2), 0));
    for (const auto& col : cols) {
        const int h = static_cast<int>(col.size());
        const bool strict = std::adjacent_find(col.begin(), col.end(), std::greater_equal<>()) == col.end();
        if (!strict || col.front() < 1 || col.back() > h + 1) {
            throw std::logic_error("f_" + std::to_string(i) + " broke a column");
        }
        int sum = 0;
        for (int v : col) sum += v;
        const int skipped = (h + 1) * (h + 2) / 2 - sum;
        if (skipped == h + 1) continue;
        ++missing[static_cast<std::size_t>(h)][static_cast<std::size_t>(skipped)];
    }

    MarginallyLargeReverseTableau out(n);
    for (int x = 1; x <= n; ++x) {
        int acc = 0;
        for (int y = x; y >= 1; --y) {
            acc += missing[static_cast<std::size_t>(x)][static_cast<std::size_t>(x - y + 1)];
            out.set_count(x, y, acc);
        }
    }
    return out;
}

bool is_semistandard(const TableauRows& rows)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!std::is_sorted(rows[r].begin(), rows[r].end())) return false;
        if (r + 1 < rows.size()) {
            if (rows[r + 1].size() > rows[r].size()) return false;
            for (std::size_t c = 0; c < rows[r + 1].size(); ++c) {
                if (rows[r + 1][c] <= rows[r][c]) return false;
            }
        }
    }
    return true;
}

bool is_reverse_semistandard(const TableauRows& rows)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!std::is_sorted(rows[r].rbegin(), rows[r].rend())) return false;
        if (r + 1 < rows.size()) {
            if (rows[r + 1].size() < rows[r].size()) return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (rows[r + 1][c] <= rows[r][c]) return false;
            }
        }
    }
    return true;
}

std::string render(const TableauRows& rows)
{
    std::string out;
    for (const auto& row : rows) {
        for (int v : row) out += "[" + std::to_string(v) + "]";
        out += "\n";
    }
    return out;
}

} // namespace rcinf
