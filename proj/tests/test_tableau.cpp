#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "rcinf/tableau.hpp"
#include "support.hpp"

using namespace rcinf;
using rcinf::testing::fx;
using rcinf::testing::rx;

namespace {

// Number of columns equal to (1, 2, ..., h), per height h, in a top-aligned tableau.
std::map<int, int> basic_columns(const TableauRows& rows)
{
    std::map<int, int> out;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < width; ++c) {
        std::vector<int> col;
        for (const auto& row : rows) {
            if (c < row.size()) col.push_back(row[c]);
        }
        bool basic = true;
        for (std::size_t p = 0; p < col.size(); ++p) basic = basic && col[p] == static_cast<int>(p) + 1;
        if (basic) ++out[static_cast<int>(col.size())];
    }
    return out;
}

std::map<int, int> basic_columns_listed(const TableauColumns& cols)
{
    std::map<int, int> out;
    for (const auto& col : cols) {
        bool basic = true;
        for (std::size_t p = 0; p < col.size(); ++p) basic = basic && col[p] == static_cast<int>(p) + 1;
        if (basic) ++out[static_cast<int>(col.size())];
    }
    return out;
}

std::map<int, int> one_each(int n)
{
    std::map<int, int> m;
    for (int h = 1; h <= n; ++h) m[h] = 1;
    return m;
}

} // namespace

TEST_CASE("highest weight tableaux consist of basic columns")
{
    CHECK(highest_mlt(1).rows() == TableauRows{{1}});
    CHECK(highest_mlt(2).rows() == TableauRows{{1, 1}, {2}});
    CHECK(highest_mlt(3).rows() == TableauRows{{1, 1, 1}, {2, 2}, {3}});
    CHECK(highest_mlrt(1).rows() == TableauRows{{1}});
    CHECK(highest_mlrt(3).columns() == TableauColumns{{1, 2, 3}, {1, 2}, {1}});
    CHECK(highest_mlrt(3).rows() == TableauRows{{1}, {2, 1}, {3, 2, 1}});
    CHECK_THROWS_AS(highest_mlt(0), InvalidRank);
}

TEST_CASE("tableau of a forward triangle")
{
    CHECK(mlt_from_forward(fx(3, {{0, 0, 0}, {0, 0}, {0}})) == highest_mlt(3));
    const auto t = mlt_from_forward(fx(2, {{1, 1}, {1}}));
    CHECK(t.rows() == TableauRows{{1, 1, 2, 3}, {2}});
    CHECK(forward_from_mlt(t) == fx(2, {{1, 1}, {1}}));
    CHECK(forward_from_mlt(highest_mlt(4)) == fx(4, {{0, 0, 0, 0}, {0, 0, 0}, {0, 0}, {0}}));

    // The top r rows hold x_{r, n-y+2} boxes of y.
    std::mt19937_64 rng(1);
    for (int s = 0; s < 200; ++s) {
        const auto x = rcinf::testing::random_forward(3, 4, rng);
        const auto rows = mlt_from_forward(x).rows();
        for (int y = 2; y <= 4; ++y) {
            int seen = 0;
            for (int r = 1; r <= y - 1; ++r) {
                seen += static_cast<int>(std::count(rows[static_cast<std::size_t>(r - 1)].begin(),
                                                    rows[static_cast<std::size_t>(r - 1)].end(), y));
                CHECK(seen == x.at(r, 3 - y + 2));
            }
        }
        CHECK(forward_from_mlt(mlt_from_forward(x)) == x);
    }
}

TEST_CASE("lowering operator on marginally large tableaux")
{
    CHECK(apply_f_mlt(highest_mlt(2), 1).rows() == TableauRows{{1, 1, 2}, {2}});
    CHECK(apply_f_mlt(highest_mlt(1), 1).rows() == TableauRows{{1, 2}});
    auto t = highest_mlt(2);
    for (int i : {1, 2, 1}) t = apply_f_mlt(t, i);
    CHECK(t.rows() == TableauRows{{1, 1, 2, 3}, {2}});
    CHECK(apply_f_mlt(highest_mlt(2), 2).rows() == TableauRows{{1, 1, 1}, {2, 3}});
    CHECK_THROWS_AS(apply_f_mlt(highest_mlt(2), 3), InvalidIndex);
}

TEST_CASE("reverse tableau of a reverse triangle")
{
    CHECK(mlrt_from_reverse(rx(2, {{0, 0}, {0}})) == highest_mlrt(2));
    const auto t = mlrt_from_reverse(rx(1, {{2}}));
    CHECK(t.rows() == TableauRows{{2, 2, 1}});
    CHECK(reverse_from_mlrt(t) == rx(1, {{2}}));
    auto u = highest_mlrt(1);
    u = apply_f_mlrt(apply_f_mlrt(u, 1), 1);
    CHECK(u == t);

    std::mt19937_64 rng(2);
    for (int s = 0; s < 200; ++s) {
        const auto psi = rcinf::testing::random_reverse(4, 4, rng);
        const auto r = mlrt_from_reverse(psi);
        CHECK(reverse_from_mlrt(r) == psi);
        CHECK(is_reverse_semistandard(r.rows()));
        CHECK(basic_columns_listed(r.columns()) == one_each(4));
    }
    CHECK_THROWS_AS(apply_f_mlrt(highest_mlrt(2), 0), InvalidIndex);
}

TEST_CASE("invalid count tables are rejected")
{
    MarginallyLargeReverseTableau r(2);
    r.set_count(2, 2, 1);
    CHECK_THROWS_AS(validate(r), InvalidTableau);
    CHECK_THROWS_AS(reverse_from_mlrt(r), InvalidTableau);
    MarginallyLargeTableau t(2);
    t.set_count(1, 3, -1);
    CHECK_THROWS_AS(forward_from_mlt(t), InvalidTableau);
    CHECK_THROWS_AS(t.count(2, 2), InvalidIndex);
}

TEST_CASE("operator words reproduce the tableaux of their exponents")
{
    for (int n = 1; n <= 3; ++n) {
        for_each_forward(n, 2, [&](const ForwardExponents& x) {
            auto t = highest_mlt(n);
            for (int i : word_of_forward(x)) {
                t = apply_f_mlt(t, i);
                const auto rows = t.rows();
                CHECK(is_semistandard(rows));
                CHECK(basic_columns(rows) == one_each(n));
            }
            CHECK(t == mlt_from_forward(x));
        });
        for_each_reverse(n, 2, [&](const ReverseExponents& psi) {
            auto t = highest_mlrt(n);
            for (int i : word_of_reverse(psi)) {
                t = apply_f_mlrt(t, i);
                CHECK(is_reverse_semistandard(t.rows()));
                CHECK(basic_columns_listed(t.columns()) == one_each(n));
            }
            CHECK(t == mlrt_from_reverse(psi));
        });
    }
}

TEST_CASE("shape predicates")
{
    CHECK(is_semistandard({{1, 1, 2}, {2, 3}}));
    CHECK_FALSE(is_semistandard({{1, 2, 1}}));
    CHECK(is_semistandard({{1, 2}, {2}}));
    CHECK_FALSE(is_semistandard({{1, 2}, {1}}));
    CHECK(is_reverse_semistandard({{2}, {3, 1}}));
    CHECK_FALSE(is_reverse_semistandard({{1}, {1, 1}}));
}

TEST_CASE("ascii rendering")
{
    CHECK(render(highest_mlt(2).rows()) == "[1][1]\n[2]\n");
    CHECK(render(mlrt_from_reverse(rx(1, {{2}})).rows()) == "[2][2][1]\n");
}
