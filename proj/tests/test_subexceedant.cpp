#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "weyl/error.hpp"
#include "weyl/subexceedant.hpp"

using weyl::Permutation;
using weyl::SubexceedantFunction;

namespace {

const std::vector<int> kRefFword1 = {1, 2, 2, 4, 3, 3, 3, 5, 5, 4, 8, 2};
const std::vector<int> kRefFword2 = {1, 2, 2, 1, 1, 5, 5, 2, 1, 5, 2, 6};
const std::vector<int> kRefBeta2 = {4, 3, 8, 12, 9, 7, 10, 11, 1, 5, 2, 6};
const std::vector<int> kRefBeta1 = {1, 11, 12, 10, 6, 7, 3, 9, 5, 4, 8, 2};

void for_each_subexceedant(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> values(n, 1);
    for (;;) {
        visit(values);
        int i = n - 1;
        while (i >= 0 && values[i] == i + 1)
            values[i--] = 1;
        if (i < 0)
            return;
        ++values[i];
    }
}

} // namespace

TEST_CASE("validation")
{
    CHECK(weyl::validate_subexceedant(kRefFword1).values == kRefFword1);
    CHECK_NOTHROW(weyl::validate_subexceedant(std::vector<int>(12, 1)));

    CHECK_THROWS_WITH_AS(weyl::validate_subexceedant({1, 3}), doctest::Contains("f(2)"),
                         weyl::parse_error);
    CHECK_THROWS_AS(weyl::validate_subexceedant({2}), weyl::parse_error);
    CHECK_THROWS_AS(weyl::validate_subexceedant({1, 0}), weyl::parse_error);
    CHECK_THROWS_AS(weyl::validate_subexceedant({}), weyl::parse_error);
}

TEST_CASE("transposition product")
{
    CHECK(weyl::subexceedant_to_permutation(weyl::validate_subexceedant(kRefFword2)).window ==
          kRefBeta2);

    SUBCASE("f(i) = i gives the identity")
    {
        std::vector<int> values(9);
        std::iota(values.begin(), values.end(), 1);
        const auto beta =
            weyl::subexceedant_to_permutation(weyl::validate_subexceedant(values));
        std::vector<int> expected(9);
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(beta.window == expected);
    }

    CHECK(weyl::subexceedant_to_permutation(weyl::validate_subexceedant({1, 1})).window ==
          std::vector<int>{2, 1});

    SUBCASE("agrees with literal right-to-left transposition composition")
    {
        // Independent route: apply (1 f(1)), then (2 f(2)), ..., as value swaps
        // carried out by an O(n^2) scan with no position index.
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            std::vector<int> values(n);
            for (int i = 0; i < n; ++i)
                values[i] = 1 + static_cast<int>(rng() % (i + 1));
            std::vector<int> window(n);
            std::iota(window.begin(), window.end(), 1);
            for (int i = 1; i <= n; ++i) {
                const int a = i, b = values[i - 1];
                for (int& entry : window) {
                    if (entry == a)
                        entry = b;
                    else if (entry == b)
                        entry = a;
                }
            }
            const auto f = weyl::validate_subexceedant(values);
            CHECK(weyl::subexceedant_to_permutation(f).window == window);
        }
    }
}

TEST_CASE("peeling inverse")
{
    CHECK(weyl::permutation_to_subexceedant(weyl::make_permutation(kRefBeta2)).values ==
          kRefFword2);
    CHECK(weyl::permutation_to_subexceedant(weyl::make_permutation(kRefBeta1)).values ==
          kRefFword1);

    SUBCASE("identity peels to f(i) = i")
    {
        std::vector<int> window(7), expected(7);
        std::iota(window.begin(), window.end(), 1);
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(weyl::permutation_to_subexceedant(weyl::make_permutation(window)).values ==
              expected);
    }
}

TEST_CASE("bijection between f-words and permutations, exhaustive n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> images;
        std::size_t count = 0;
        for_each_subexceedant(n, [&](const std::vector<int>& values) {
            ++count;
            const auto f = weyl::validate_subexceedant(values);
            const Permutation beta = weyl::subexceedant_to_permutation(f);
            images.insert(beta.window);
            CHECK(weyl::permutation_to_subexceedant(beta) == f);
        });
        std::size_t factorial = 1;
        for (int k = 2; k <= n; ++k)
            factorial *= k;
        CHECK(count == factorial);          // |F_n| = n!
        CHECK(images.size() == factorial);  // injective, hence bijective

        std::vector<int> window(n);
        std::iota(window.begin(), window.end(), 1);
        do {
            const auto beta = weyl::make_permutation(window);
            const auto f = weyl::permutation_to_subexceedant(beta);
            CHECK(weyl::subexceedant_to_permutation(f) == beta);
        } while (std::next_permutation(window.begin(), window.end()));
    }
}

TEST_CASE("tail of fixed f values fixes the tail of the window")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 12;
        const int split = 2 + static_cast<int>(rng() % 9);
        std::vector<int> values(n);
        for (int i = 0; i < n; ++i)
            values[i] = i < split ? 1 + static_cast<int>(rng() % (i + 1)) : i + 1;
        const auto beta =
            weyl::subexceedant_to_permutation(weyl::validate_subexceedant(values));
        for (int i = split; i < n; ++i)
            CHECK(beta.window[i] == i + 1);
    }
}

TEST_CASE("f-word text")
{
    const auto f = weyl::validate_subexceedant(kRefFword1);
    CHECK(weyl::format_fword(f) == "1;2;2;4;3;3;3;5;5;4;8;2");
    CHECK(weyl::parse_fword("1;2;2;4;3;3;3;5;5;4;8;2") == f);
    CHECK(weyl::parse_fword(" 1 ; 2;2;4;3;3;3;5;5;4;8;2") == f);
    CHECK(weyl::parse_fword(weyl::format_fword(f)) == f);

    CHECK_THROWS_AS(weyl::parse_fword("1;3"), weyl::parse_error);
    CHECK_THROWS_AS(weyl::parse_fword("1;;2"), weyl::parse_error);
    CHECK_THROWS_AS(weyl::parse_fword(""), weyl::parse_error);
    CHECK_THROWS_AS(weyl::parse_fword("1;2;"), weyl::parse_error);
}
