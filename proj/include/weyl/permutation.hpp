#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weyl {

// Window notation: the list [w(1), ..., w(n)].
struct Permutation {
    std::vector<int> window;   // each value of 1..n exactly once

    int n() const { return static_cast<int>(window.size()); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Signed window: the magnitudes form a permutation of 1..n.  Extended to
// the index set {-n..-1, 1..n} by w(-i) = -w(i).
//
// Composition convention: the rightmost factor acts first, so
// compose(a, b)(i) = a(b(i)).  Note this is the opposite of the
// "leftmost acts first" convention some libraries use.
struct SignedPermutation {
    std::vector<int> window;   // nonzero, magnitudes a permutation of 1..n

    int n() const { return static_cast<int>(window.size()); }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// Validating constructors; throw parse_error on a malformed window.
Permutation make_permutation(std::vector<int> window);
SignedPermutation make_signed_permutation(std::vector<int> window);

SignedPermutation identity(int n);

// w(i) for i in {-n..-1, 1..n}.
int apply(const SignedPermutation& w, int i);

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);

int negative_count(const SignedPermutation& w);
// D-membership: an even number of negative window entries.
bool is_even_signed(const SignedPermutation& w);

Permutation magnitudes(const SignedPermutation& w);
SignedPermutation with_all_positive(const Permutation& p);

// "[w(1),...,w(n)]"; parse tolerates whitespace, format never emits it.
std::string format_window(const SignedPermutation& w);
std::string format_window(const Permutation& p);
SignedPermutation parse_window(std::string_view text);

} // namespace weyl
