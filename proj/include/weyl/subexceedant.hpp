#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weyl/permutation.hpp"

namespace weyl {

// A map f on {1..n} with 1 <= f(i) <= i.  There are n! of them for each n,
// and they index permutations through the transposition product below.
struct SubexceedantFunction {
    std::vector<int> values;   // values[i-1] = f(i)

    int n() const { return static_cast<int>(values.size()); }
    int at(int i) const { return values[i - 1]; }

    friend bool operator==(const SubexceedantFunction&, const SubexceedantFunction&) = default;
};

// Throws parse_error naming the first index whose bound fails.
SubexceedantFunction validate_subexceedant(std::vector<int> values);

// The product of transpositions (n f(n)) ... (2 f(2)) (1 f(1)), rightmost
// factor acting first.  Realized in O(n) by swapping the values i and f(i)
// in a working window for i = 1..n.
Permutation subexceedant_to_permutation(const SubexceedantFunction& f);

// Inverse of the above: descending k = n..2, record f(k) = current k-th
// entry, then swap the entry equal to k into position k; f(1) = 1.
SubexceedantFunction permutation_to_subexceedant(const Permutation& beta);

// Word form "f(1);f(2);...;f(n)".
std::string format_fword(const SubexceedantFunction& f);
SubexceedantFunction parse_fword(std::string_view text);

} // namespace weyl
