#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/bigint.hpp"
#include "weyl/family.hpp"

namespace weyl {

// Mixed-radix numeral systems indexing the three classical families.
//
//   family D: digit d_i for i = 1..n-1, place value 2^{i-1} i!, cap 2i+1
//   family A: digit d_i for i = 1..n-1, place value i!,         cap i
//   family B: digit d_i for i = 0..n-1, place value 2^i i! (1 at i = 0),
//             cap 2i+1 (1 at i = 0)
//
// In every family place_values[j+1] = (digit_caps[j] + 1) * place_values[j],
// so the representable range is exactly [0, group order - 1] and each value
// in it has one fixed-width digit vector.
struct RadixProfile {
    WeylFamily family;
    int n; // rank; n = 1 gives a zero-width profile for A and D
    std::vector<Bigint> place_values;   // least significant first
    std::vector<unsigned> digit_caps;   // inclusive upper bound per digit

    std::size_t width() const { return digit_caps.size(); }
    // subscript of digit j in the construction above (B starts at 0)
    int digit_index(std::size_t j) const
    {
        return static_cast<int>(j) + (family == WeylFamily::B ? 0 : 1);
    }

    friend bool operator==(const RadixProfile&, const RadixProfile&) = default;
};

// A fixed-width digit vector; leading zeros are retained so the rank is
// always explicit.
struct MixedRadixDigits {
    RadixProfile profile;
    std::vector<unsigned> digits;   // least significant first

    friend bool operator==(const MixedRadixDigits&, const MixedRadixDigits&) = default;
};

RadixProfile radix_profile(WeylFamily family, int n);

// (group order) - 1: the largest representable value.
Bigint max_value(const RadixProfile& profile);

// Validates width and the per-digit caps; error messages name the
// offending digit subscript.
MixedRadixDigits make_digits(RadixProfile profile, std::vector<unsigned> digits);

// Sum of digits[j] * place_values[j].
Bigint digits_to_int(const MixedRadixDigits& d);

// Successive division by (cap + 1), least significant digit first.  Always
// runs one division step per digit position; *division_steps receives the
// count when non-null.
MixedRadixDigits int_to_digits(const Bigint& x, const RadixProfile& profile,
                               std::size_t* division_steps = nullptr);

// Smallest rank whose profile can represent x, i.e. minimal n with
// x <= max_value(radix_profile(family, n)).
int infer_rank(WeylFamily family, const Bigint& x);

// Text form "(d_k:...:d_1)", most significant digit first, with an
// optional "_D12"-style family/rank tag.
std::string format_digit_string(const MixedRadixDigits& d, bool with_tag = false);

// Parse against a known profile; an embedded tag, if present, must agree.
MixedRadixDigits parse_digit_string(std::string_view text, const RadixProfile& profile);

// Parse with the rank inferred from the digit count (n-1 digits for A and
// D, n for B); an embedded tag must agree with the family.
MixedRadixDigits parse_digit_string(std::string_view text, WeylFamily family);

// Parse using the embedded tag to select the profile.
MixedRadixDigits parse_digit_string(std::string_view text);

} // namespace weyl
