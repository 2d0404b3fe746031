#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weyl/bigint.hpp"
#include "weyl/codec.hpp"
#include "weyl/family.hpp"
#include "weyl/permutation.hpp"

namespace weyl::oracle {

inline constexpr std::size_t default_budget = 1'000'000;

// Every group element in lexicographic window order, built by direct
// product of permutations and admissible sign patterns.  Deliberately
// shares no logic with the codec.
std::vector<SignedPermutation> enumerate_group(WeylFamily family, int n,
                                               std::size_t budget = default_budget);

// Linear scan x = 0, 1, ... until decode(x) = g.  Independent of encode;
// a miss over the whole range means the codec is broken.
Bigint brute_force_rank(const SignedPermutation& g, WeylFamily family, int n,
                        std::size_t budget = default_budget);

struct CertifyReport {
    WeylFamily family;
    int n;
    Bigint order;
    Bigint checked;             // decode/encode round trips performed
    bool pass = false;
    std::string first_failure;  // empty when pass
};

// Decode must be total and injective on [0, order-1], its image must equal
// the enumeration, and encode must invert it element by element.
CertifyReport certify(WeylFamily family, int n, std::size_t budget = default_budget);

// "PASS 1920/1920" or "FAIL <checked>/<order>: <first failure>".
std::string format_report(const CertifyReport& report);

} // namespace weyl::oracle
