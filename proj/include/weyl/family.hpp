#pragma once

#include <string>

#include "weyl/bigint.hpp"

namespace weyl {

// The three classical families: A (permutations of {1..n}), B (signed
// permutations), D (signed permutations with an even number of negative
// window entries).
enum class WeylFamily { A, B, D };

char family_letter(WeylFamily family);
WeylFamily family_from_letter(char letter);
WeylFamily parse_family(const std::string& text);

// n! for A, 2^n n! for B, 2^{n-1} n! for D.  Throws parse_error for n < 1.
Bigint group_order(WeylFamily family, int n);

} // namespace weyl
