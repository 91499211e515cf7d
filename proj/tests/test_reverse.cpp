#include "doctest.h"

#include <random>

#include "rcinf/reverse.hpp"
#include "support.hpp"

using namespace rcinf;
using rcinf::testing::make_rc;
using rcinf::testing::rx;

TEST_CASE("validation accepts weakly decreasing columns only")
{
    CHECK_NOTHROW(validate_reverse(ReverseTriangle(2)));
    ReverseTriangle bad(2);
    bad.set(1, 1, 1);
    bad.set(2, 1, 2);
    CHECK_THROWS_AS(validate_reverse(bad), ExponentError);
    CHECK_NOTHROW(rx(4, {{4, 3, 3, 0}, {2, 2, 1}, {5, 0}, {1}}));
    CHECK_THROWS_AS(reverse_triangle_from_rows(3, {{1, 1, 1}, {1, 1}}), ExponentError);
}

TEST_CASE("application word of a reverse triangle")
{
    CHECK(word_of_reverse(ReverseTriangle(3)).empty());
    CHECK(word_of_reverse(rx(2, {{1, 1}, {0}})) == std::vector<int>{2, 1});
    CHECK(word_of_reverse(rx(1, {{2}})) == std::vector<int>{1, 1});
    CHECK(word_of_reverse(rx(2, {{2, 1}, {1}})) == std::vector<int>{2, 1, 1, 2});
}

TEST_CASE("extension of small triangles")
{
    CHECK(extend_reverse(rx(3, {{0, 0, 0}, {0, 0}, {0}})) == ReverseExtendedTable(3));

    std::mt19937_64 rng(3);
    for (int s = 0; s < 100; ++s) {
        const auto psi = rcinf::testing::random_reverse(4, 5, rng);
        const auto M = extend_reverse(psi);
        CHECK(M.at(3, 1, 1) == std::min(psi.at(4, 2), psi.at(3, 1) - psi.at(4, 1)));
        for (int j = 1; j <= 4; ++j) CHECK(M.at(4, j, 1) == 0);
    }

    // psi_{2,2} = 0: M_{1,1,1} = min{psi_{2,2}, ...} = 0.
    const auto M = extend_reverse(rx(2, {{2, 1}, {0}}));
    CHECK(M.at(1, 1, 1) == 0);
}

TEST_CASE("closed form")
{
    CHECK(rc_from_reverse(rx(2, {{0, 0}, {0}})) == empty_rc(2));
    CHECK(rc_from_reverse(rx(1, {{3}})) == make_rc({{{3, -3}}}));
    CHECK(rc_from_reverse(rx(2, {{1, 1}, {0}})) == apply_f_word(empty_rc(2), std::vector<int>{2, 1}));
}

TEST_CASE("recovery and membership")
{
    CHECK(recover_reverse(empty_rc(3)) == ReverseTriangle(3));
    const auto one = recover_reverse(make_rc({{{1, 0}}}));
    CHECK(one.at(1, 1) == 1);
    const auto m = is_member_rcinf_reverse(make_rc({{{1, 0}}}));
    CHECK_FALSE(m.member());
    CHECK(m.stage == MembershipStage::rebuild_mismatch);
    CHECK(is_member_rcinf_reverse(empty_rc(4)).member());

    for (int n = 1; n <= 4; ++n) {
        for_each_reverse(n, n <= 2 ? 3 : 2, [&](const ReverseExponents& psi) {
            const auto rc = rc_from_reverse(psi);
            CHECK(rc == apply_f_word(empty_rc(n), word_of_reverse(psi)));
            CHECK(recover_reverse(rc) == psi.triangle());
        });
    }
}

TEST_CASE("the reverse model is the forward model with parts in reverse order")
{
    for (int n = 1; n <= 4; ++n) {
        for_each_forward(n, n <= 2 ? 3 : 1, [&](const ForwardExponents& x) {
            const auto a = rc_from_forward(x);
            const auto b = rc_from_reverse(rcinf::testing::flip(x));
            auto parts = a.parts();
            std::reverse(parts.begin(), parts.end());
            CHECK(RiggedConfiguration(parts) == b);
        });
    }
}

TEST_CASE("both membership tests agree on balls and mutants")
{
    for (int n = 1; n <= 3; ++n) {
        const int radius = n == 3 ? 4 : 5;
        const auto oracle = rcinf::testing::ball_keys(n, radius + 1);
        for (const auto& rc : rcinf::testing::ball(n, radius)) {
            const auto f = is_member_rcinf(rc);
            const auto r = is_member_rcinf_reverse(rc);
            REQUIRE(f.member());
            REQUIRE(r.member());
            CHECK(rcinf::testing::part_sums(*f.exponents) == rcinf::testing::part_sums(*r.exponents));
            CHECK(rcinf::testing::part_sums(*r.exponents) == weight(rc).coefficients);
            for (const auto& m : rcinf::testing::mutants(rc)) {
                const bool truth = oracle.count(to_string(m)) != 0;
                INFO(to_string(m));
                CHECK(is_member_rcinf_reverse(m).member() == truth);
                CHECK(is_member_rcinf(m).member() == is_member_rcinf_reverse(m).member());
            }
        }
    }
}

TEST_CASE("mirrored inequality suite")
{
    CHECK(check_reverse_inequalities(rx(2, {{0, 0}, {0}})).passed());
    std::mt19937_64 rng(5);
    for (int s = 0; s < 300; ++s) {
        const auto report = check_reverse_inequalities(rcinf::testing::random_reverse(4, 5, rng));
        CHECK(report.checked > 0);
        CHECK(report.passed());
    }
    auto M = extend_reverse(rx(3, {{3, 2, 1}, {2, 1}, {1}}));
    REQUIRE(check_reverse_table(M).passed());
    M.set(3, 1, 1, 4); // the last part never gains an entry beyond the exponent layer
    CHECK_FALSE(check_reverse_table(M).passed());
}
