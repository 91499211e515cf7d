#include "rcinf/highest_weight.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "rcinf/io.hpp"

namespace rcinf {

DominantWeight::DominantWeight(std::vector<int> values) : values_(std::move(values))
{
    if (values_.empty()) throw InvalidRank("a dominant weight needs at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) {
            throw std::invalid_argument("lambda(h_" + std::to_string(i + 1) + ") = " + std::to_string(values_[i])
                                        + " is negative");
        }
    }
}

int DominantWeight::at(int i) const
{
    if (i < 1 || i > rank()) throw InvalidIndex("weight index " + std::to_string(i) + " out of range");
    return values_[static_cast<std::size_t>(i - 1)];
}

int DominantWeight::total() const { return std::accumulate(values_.begin(), values_.end(), 0); }

namespace {

struct Cell {
    int i;
    int j;
};

// sum(coef * value) <= bound, fully decided once the cell at index `last` is assigned.
struct Constraint {
    std::vector<std::pair<std::size_t, int>> terms;
    int bound = 0;
    std::size_t last = 0;
};

// Both triangles are filled column by column (fixed second index), walking each column in the
// direction in which entries may only grow; `prev[c]` is the cell bounding cell c from below.
struct SearchLayout {
    std::vector<Cell> cells;
    std::vector<std::ptrdiff_t> prev;
    std::vector<Constraint> constraints;
};

class ConstraintBuilder {
public:
    ConstraintBuilder(const std::map<std::pair<int, int>, std::size_t>& index, int bound)
        : index_(index), bound_(bound) {}

    void add(int i, int j, int coef)
    {
        const auto it = index_.find({i, j});
        if (it == index_.end()) return; // outside the triangle: reads as zero
        coefs_[it->second] += coef;
    }

    Constraint finish() const
    {
        Constraint c;
        c.bound = bound_;
        for (const auto& [cell, coef] : coefs_) {
            if (coef == 0) continue;
            c.terms.push_back({cell, coef});
            c.last = std::max(c.last, cell);
        }
        return c;
    }

private:
    const std::map<std::pair<int, int>, std::size_t>& index_;
    int bound_;
    std::map<std::size_t, int> coefs_;
};

SearchLayout forward_layout(const DominantWeight& lambda)
{
    const int n = lambda.rank();
    SearchLayout s;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n - j + 1; ++i) {
            index[{i, j}] = s.cells.size();
            s.prev.push_back(i > 1 ? static_cast<std::ptrdiff_t>(s.cells.size()) - 1 : -1);
            s.cells.push_back({i, j});
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            ConstraintBuilder b(index, lambda.at(i));
            for (int t = 1; t <= n - j + 1; ++t) {
                b.add(i, t, 1);
                b.add(i - 1, t, -1);
            }
            for (int t = 1; t <= n - j; ++t) {
                b.add(i + 1, t, -1);
                b.add(i, t, 1);
            }
            s.constraints.push_back(b.finish());
        }
    }
    return s;
}

SearchLayout reverse_layout(const DominantWeight& lambda)
{
    const int n = lambda.rank();
    SearchLayout s;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int j = 1; j <= n; ++j) {
        for (int i = n; i >= j; --i) {
            index[{i, j}] = s.cells.size();
            s.prev.push_back(i < n ? static_cast<std::ptrdiff_t>(s.cells.size()) - 1 : -1);
            s.cells.push_back({i, j});
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            ConstraintBuilder b(index, lambda.at(i));
            for (int t = 1; t <= j; ++t) {
                b.add(i, t, 1);
                b.add(i + 1, t, -1);
            }
            for (int t = 1; t <= j - 1; ++t) {
                b.add(i - 1, t, -1);
                b.add(i, t, 1);
            }
            s.constraints.push_back(b.finish());
        }
    }
    return s;
}

bool satisfied(const Constraint& c, const std::vector<int>& values)
{
    long lhs = 0;
    for (const auto& [cell, coef] : c.terms) lhs += static_cast<long>(coef) * values[cell];
    return lhs <= c.bound;
}

template <class Triangle>
bool all_satisfied(const SearchLayout& s, const Triangle& t)
{
    std::vector<int> values;
    for (const Cell& c : s.cells) values.push_back(t.at(c.i, c.j));
    return std::all_of(s.constraints.begin(), s.constraints.end(),
                       [&](const Constraint& c) { return satisfied(c, values); });
}

void require_same_rank(int a, int b)
{
    if (a != b) throw RankMismatch("rank " + std::to_string(a) + " does not match weight rank " + std::to_string(b));
}

template <class Triangle, class Exponents>
std::vector<Exponents> enumerate(const SearchLayout& s, int n, int box, Exponents (*validate)(const Triangle&))
{
    std::vector<std::vector<std::size_t>> closing(s.cells.size());
    for (std::size_t k = 0; k < s.constraints.size(); ++k) {
        if (s.constraints[k].terms.empty()) continue; // reads 0 <= λ(h_i)
        closing[s.constraints[k].last].push_back(k);
    }

    std::vector<int> values(s.cells.size(), 0);
    std::vector<Exponents> out;
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
        if (c == s.cells.size()) {
            Triangle t(n);
            for (std::size_t k = 0; k < s.cells.size(); ++k) t.set(s.cells[k].i, s.cells[k].j, values[k]);
            out.push_back(validate(t));
            return;
        }
        const int lo = s.prev[c] < 0 ? 0 : values[static_cast<std::size_t>(s.prev[c])];
        for (int v = lo; v <= box; ++v) {
            values[c] = v;
            const bool ok = std::all_of(closing[c].begin(), closing[c].end(),
                                        [&](std::size_t k) { return satisfied(s.constraints[k], values); });
            if (ok) fill(c + 1);
        }
    };
    fill(0);
    return out;
}

} // namespace

bool in_xlambda(const ForwardExponents& x, const DominantWeight& lambda)
{
    require_same_rank(x.rank(), lambda.rank());
    return all_satisfied(forward_layout(lambda), x);
}

bool in_psilambda(const ReverseExponents& psi, const DominantWeight& lambda)
{
    require_same_rank(psi.rank(), lambda.rank());
    return all_satisfied(reverse_layout(lambda), psi);
}

std::vector<ForwardExponents> enumerate_xlambda(const DominantWeight& lambda)
{
    const int n = lambda.rank();
    return enumerate<ForwardTriangle, ForwardExponents>(forward_layout(lambda), n, n * lambda.total(), &validate_forward);
}

std::vector<ReverseExponents> enumerate_psilambda(const DominantWeight& lambda)
{
    const int n = lambda.rank();
    return enumerate<ReverseTriangle, ReverseExponents>(reverse_layout(lambda), n, n * lambda.total(), &validate_reverse);
}

std::vector<LambdaElement> blambda_rc_set(const DominantWeight& lambda, Side side)
{
    std::vector<std::pair<std::string, LambdaElement>> keyed;
    auto add = [&](RiggedConfiguration rc) {
        std::string key = canonical(to_json(rc));
        keyed.push_back({std::move(key), LambdaElement{std::move(rc), lambda}});
    };
    if (side == Side::forward) {
        for (const auto& x : enumerate_xlambda(lambda)) add(rc_from_forward(x));
    } else {
        for (const auto& psi : enumerate_psilambda(lambda)) add(rc_from_reverse(psi));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<LambdaElement> out;
    for (auto& [key, element] : keyed) out.push_back(std::move(element));
    return out;
}

std::int64_t ssyt_count_oracle(const DominantWeight& lambda, int n)
{
    require_same_rank(n, lambda.rank());
    // Row r of the shape has one box per column of height >= r.
    std::vector<int> shape;
    for (int r = 1; r <= n; ++r) {
        int len = 0;
        for (int h = r; h <= n; ++h) len += lambda.at(h);
        if (len > 0) shape.push_back(len);
    }
    std::vector<std::vector<int>> grid;
    for (int len : shape) grid.emplace_back(static_cast<std::size_t>(len), 0);

    std::int64_t count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == grid.size()) {
            ++count;
            return;
        }
        if (c == grid[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= n + 1; ++v) {
            grid[r][c] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return count;
}

} // namespace rcinf
