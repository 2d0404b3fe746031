#pragma once

#include <cstdint>
#include <random>

#include "weyl/bigint.hpp"

namespace weyl {

// Uniform ranks in [0, bound) assembled from fixed-width 64-bit draws with
// rejection.  std::mt19937_64 has fully specified output, so equal seeds
// give byte-identical streams on every platform; std::uniform_int_distribution
// does not and is avoided.
class RankSampler {
public:
    explicit RankSampler(std::uint64_t seed) : engine_(seed) {}

    Bigint next(const Bigint& bound);

private:
    std::mt19937_64 engine_;
};

} // namespace weyl
