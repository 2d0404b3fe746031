#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "weyl/error.hpp"
#include "weyl/family.hpp"
#include "weyl/sampling.hpp"

using weyl::Bigint;

TEST_CASE("same seed, same stream")
{
    const Bigint bound = weyl::group_order(weyl::WeylFamily::D, 12);
    weyl::RankSampler a(7), b(7), c(8);
    bool all_equal = true, any_differs = false;
    for (int i = 0; i < 100; ++i) {
        const Bigint xa = a.next(bound);
        all_equal &= xa == b.next(bound);
        any_differs |= xa != c.next(bound);
    }
    CHECK(all_equal);
    CHECK(any_differs);
}

TEST_CASE("draws stay inside the bound")
{
    weyl::RankSampler sampler(1);
    for (const char* text : {"2", "97", "980995276800",
                             "340282366920938463463374607431768211456"}) {
        const Bigint bound(text);
        for (int i = 0; i < 200; ++i) {
            const Bigint x = sampler.next(bound);
            CHECK(x >= 0);
            CHECK(x < bound);
        }
    }
    CHECK(sampler.next(1) == 0);
    CHECK_THROWS_AS(sampler.next(0), weyl::range_error);
}

TEST_CASE("small-bound draws cover every value")
{
    weyl::RankSampler sampler(42);
    std::array<int, 4> hits{};
    for (int i = 0; i < 4000; ++i)
        ++hits[sampler.next(4).convert_to<std::size_t>()];
    for (int count : hits)
        CHECK(count > 800);
}
