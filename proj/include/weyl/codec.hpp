#pragma once

#include "weyl/bigint.hpp"
#include "weyl/family.hpp"
#include "weyl/number_system.hpp"
#include "weyl/permutation.hpp"
#include "weyl/subexceedant.hpp"

namespace weyl {

struct SignVector {
    std::vector<int> signs;   // each +1 or -1

    int n() const { return static_cast<int>(signs.size()); }

    friend bool operator==(const SignVector&, const SignVector&) = default;
};

// --- D-family pieces -------------------------------------------------------
//
// A D-family digit vector d_1..d_{n-1} carries an even-signed permutation:
//
//   f(1) = 1,  f(i) = 1 + floor(d_{i-1} / 2)        (magnitudes, through
//                                                     the transposition map)
//   s_i  = (-1)^{d_{i-1}}  for i = 2..n
//   s_1  = (-1)^{odd digit count}
//
// The parity bits make the negative-entry count even by construction:
// positions 2..n contribute one negative per odd digit, and s_1 tops the
// total up to even.

SubexceedantFunction digits_to_subexceedant(const MixedRadixDigits& d);

// Number of odd digits.
int odd_digit_count(const MixedRadixDigits& d);

SignVector signs_from_digits(const MixedRadixDigits& d);

// --- Codecs ----------------------------------------------------------------
//
// Mutually inverse bijections:
//   D: [0, 2^{n-1} n! - 1] <-> even-signed permutations of rank n
//   A: [0, n! - 1]         <-> permutations of rank n
//   B: [0, 2^n n! - 1]     <-> signed permutations of rank n
//
// The B codec stores s_1 directly in the extra digit d_0; for i >= 1 its
// digits follow the same 2(f(i+1) - 1) + parity layout as D.
//
// Rank 0 is not the identity: an all-zero digit vector gives f = 1 at every
// index, whose transposition product is the cycle [2,3,...,n,1].

SignedPermutation decode_d(const Bigint& x, int n);
Bigint encode_d(const SignedPermutation& pi);

Permutation decode_a(const Bigint& x, int n);
Bigint encode_a(const Permutation& beta);

SignedPermutation decode_b(const Bigint& x, int n);
Bigint encode_b(const SignedPermutation& pi);

// Family dispatch; A elements travel as all-positive signed windows.
// encode_element rejects windows outside the family (negative entries for
// A, odd negative count for D) with membership_error.
SignedPermutation decode_element(WeylFamily family, const Bigint& x, int n);
Bigint encode_element(WeylFamily family, const SignedPermutation& g);

} // namespace weyl
