#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "weyl/codec.hpp"
#include "weyl/error.hpp"
#include "weyl/oracle.hpp"

using weyl::Bigint;
using weyl::WeylFamily;
namespace oracle = weyl::oracle;

TEST_CASE("enumerate_group")
{
    const auto d2 = oracle::enumerate_group(WeylFamily::D, 2);
    REQUIRE(d2.size() == 4);
    CHECK(d2[0].window == std::vector<int>{-2, -1});
    CHECK(d2[1].window == std::vector<int>{-1, -2});
    CHECK(d2[2].window == std::vector<int>{1, 2});
    CHECK(d2[3].window == std::vector<int>{2, 1});

    CHECK(oracle::enumerate_group(WeylFamily::D, 3).size() == 24);

    const auto b1 = oracle::enumerate_group(WeylFamily::B, 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].window == std::vector<int>{-1});
    CHECK(b1[1].window == std::vector<int>{1});

    SUBCASE("counts and membership, n <= 6")
    {
        for (int n = 1; n <= 6; ++n) {
            const auto elements = oracle::enumerate_group(WeylFamily::D, n);
            CHECK(Bigint(elements.size()) == weyl::group_order(WeylFamily::D, n));
            for (const auto& g : elements)
                CHECK(weyl::is_even_signed(g));
            CHECK(std::is_sorted(elements.begin(), elements.end(),
                                 [](const auto& a, const auto& b) {
                                     return a.window < b.window;
                                 }));
        }
        CHECK(Bigint(oracle::enumerate_group(WeylFamily::A, 6).size()) ==
              weyl::group_order(WeylFamily::A, 6));
        CHECK(Bigint(oracle::enumerate_group(WeylFamily::B, 5).size()) ==
              weyl::group_order(WeylFamily::B, 5));
    }

    SUBCASE("budget")
    {
        CHECK_THROWS_AS(oracle::enumerate_group(WeylFamily::D, 8), weyl::budget_error);
        CHECK_THROWS_AS(oracle::enumerate_group(WeylFamily::D, 3, 10), weyl::budget_error);
    }
}

TEST_CASE("brute_force_rank")
{
    CHECK(oracle::brute_force_rank(weyl::make_signed_permutation({1, 2}),
                                   WeylFamily::D, 2) == 2);
    CHECK(oracle::brute_force_rank(weyl::make_signed_permutation({-2, -1}),
                                   WeylFamily::D, 2) == 1);
    CHECK(oracle::brute_force_rank(weyl::identity(3), WeylFamily::A, 3) == 5);

    SUBCASE("agrees with encode over all of D_n, n <= 5")
    {
        for (int n = 2; n <= 5; ++n)
            for (const auto& g : oracle::enumerate_group(WeylFamily::D, n))
                CHECK(oracle::brute_force_rank(g, WeylFamily::D, n) == weyl::encode_d(g));
    }

    CHECK_THROWS_AS(oracle::brute_force_rank(weyl::identity(8), WeylFamily::D, 8),
                    weyl::budget_error);
}

TEST_CASE("certify")
{
    const auto d5 = oracle::certify(WeylFamily::D, 5);
    CHECK(d5.pass);
    CHECK(d5.checked == 1920);
    CHECK(oracle::format_report(d5) == "PASS 1920/1920");

    const auto a6 = oracle::certify(WeylFamily::A, 6);
    CHECK(a6.pass);
    CHECK(a6.checked == 720);

    const auto b4 = oracle::certify(WeylFamily::B, 4);
    CHECK(b4.pass);
    CHECK(b4.checked == 384);

    CHECK_THROWS_AS(oracle::certify(WeylFamily::D, 9), weyl::budget_error);
}
