#include "weyl/sampling.hpp"

#include "weyl/error.hpp"

namespace weyl {

Bigint RankSampler::next(const Bigint& bound)
{
    if (bound <= 0)
        throw range_error("sampling bound must be positive");
    if (bound == 1)
        return 0;
    const std::size_t bits = boost::multiprecision::msb(bound - 1) + 1;
    const std::size_t words = (bits + 63) / 64;
    const Bigint mask = (Bigint(1) << bits) - 1;
    for (;;) {
        Bigint value = 0;
        for (std::size_t w = 0; w < words; ++w) {
            value <<= 64;
            value |= engine_();
        }
        value &= mask;
        if (value < bound)
            return value;
    }
}

} // namespace weyl
