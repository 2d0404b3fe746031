#include "weyl/codec.hpp"

#include <cstdlib>
#include <utility>

#include "weyl/error.hpp"

namespace weyl {
namespace {

void require_family(const MixedRadixDigits& d, WeylFamily family, const char* op)
{
    if (d.profile.family != family)
        throw parse_error(std::string(op) + " expects " +
                          std::string(1, family_letter(family)) + "-family digits, got " +
                          std::string(1, family_letter(d.profile.family)));
}

SignedPermutation attach_signs(const Permutation& beta, const SignVector& signs)
{
    std::vector<int> window(beta.window.size());
    for (std::size_t i = 0; i < window.size(); ++i)
        window[i] = signs.signs[i] * beta.window[i];
    return SignedPermutation{std::move(window)};
}

} // namespace

SubexceedantFunction digits_to_subexceedant(const MixedRadixDigits& d)
{
    require_family(d, WeylFamily::D, "digits_to_subexceedant");
    const int n = d.profile.n;
    std::vector<int> values(static_cast<std::size_t>(n));
    values[0] = 1;
    for (int i = 2; i <= n; ++i)
        values[i - 1] = 1 + static_cast<int>(d.digits[i - 2] / 2);
    return SubexceedantFunction{std::move(values)};
}

int odd_digit_count(const MixedRadixDigits& d)
{
    int count = 0;
    for (unsigned digit : d.digits)
        count += digit % 2;
    return count;
}

SignVector signs_from_digits(const MixedRadixDigits& d)
{
    require_family(d, WeylFamily::D, "signs_from_digits");
    const int n = d.profile.n;
    std::vector<int> signs(static_cast<std::size_t>(n));
    signs[0] = odd_digit_count(d) % 2 == 0 ? 1 : -1;
    for (int i = 2; i <= n; ++i)
        signs[i - 1] = d.digits[i - 2] % 2 == 0 ? 1 : -1;
    return SignVector{std::move(signs)};
}

SignedPermutation decode_d(const Bigint& x, int n)
{
    MixedRadixDigits d = int_to_digits(x, radix_profile(WeylFamily::D, n));
    Permutation beta = subexceedant_to_permutation(digits_to_subexceedant(d));
    return attach_signs(beta, signs_from_digits(d));
}

Bigint encode_d(const SignedPermutation& pi)
{
    if (!is_even_signed(pi))
        throw membership_error("odd number of negative entries: " + format_window(pi) +
                               " is not even-signed");
    const int n = pi.n();
    SubexceedantFunction f = permutation_to_subexceedant(magnitudes(pi));
    std::vector<unsigned> digits(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i <= n - 1; ++i) {
        const unsigned parity_bit = pi.window[i] < 0 ? 1u : 0u; // sign at position i+1
        digits[i - 1] = 2u * static_cast<unsigned>(f.at(i + 1) - 1) + parity_bit;
    }
    return digits_to_int(make_digits(radix_profile(WeylFamily::D, n), std::move(digits)));
}

Permutation decode_a(const Bigint& x, int n)
{
    MixedRadixDigits d = int_to_digits(x, radix_profile(WeylFamily::A, n));
    std::vector<int> values(static_cast<std::size_t>(n));
    values[0] = 1;
    for (int i = 2; i <= n; ++i)
        values[i - 1] = static_cast<int>(d.digits[i - 2]) + 1;
    return subexceedant_to_permutation(SubexceedantFunction{std::move(values)});
}

Bigint encode_a(const Permutation& beta)
{
    const int n = beta.n();
    SubexceedantFunction f = permutation_to_subexceedant(beta);
    std::vector<unsigned> digits(static_cast<std::size_t>(n) - 1);
    for (int i = 2; i <= n; ++i)
        digits[i - 2] = static_cast<unsigned>(f.at(i) - 1);
    return digits_to_int(make_digits(radix_profile(WeylFamily::A, n), std::move(digits)));
}

SignedPermutation decode_b(const Bigint& x, int n)
{
    MixedRadixDigits d = int_to_digits(x, radix_profile(WeylFamily::B, n));
    // digits[0] = d_0 carries s_1; digits[i] = d_i carries f(i+1) and s_{i+1}
    std::vector<int> values(static_cast<std::size_t>(n));
    std::vector<int> signs(static_cast<std::size_t>(n));
    values[0] = 1;
    signs[0] = d.digits[0] == 0 ? 1 : -1;
    for (int i = 1; i <= n - 1; ++i) {
        values[i] = 1 + static_cast<int>(d.digits[i] / 2);
        signs[i] = d.digits[i] % 2 == 0 ? 1 : -1;
    }
    Permutation beta = subexceedant_to_permutation(SubexceedantFunction{std::move(values)});
    return attach_signs(beta, SignVector{std::move(signs)});
}

Bigint encode_b(const SignedPermutation& pi)
{
    const int n = pi.n();
    SubexceedantFunction f = permutation_to_subexceedant(magnitudes(pi));
    std::vector<unsigned> digits(static_cast<std::size_t>(n));
    digits[0] = pi.window[0] < 0 ? 1u : 0u;
    for (int i = 1; i <= n - 1; ++i) {
        const unsigned parity_bit = pi.window[i] < 0 ? 1u : 0u;
        digits[i] = 2u * static_cast<unsigned>(f.at(i + 1) - 1) + parity_bit;
    }
    return digits_to_int(make_digits(radix_profile(WeylFamily::B, n), std::move(digits)));
}

SignedPermutation decode_element(WeylFamily family, const Bigint& x, int n)
{
    switch (family) {
    case WeylFamily::A: return with_all_positive(decode_a(x, n));
    case WeylFamily::B: return decode_b(x, n);
    case WeylFamily::D: return decode_d(x, n);
    }
    throw error("corrupt family tag");
}

Bigint encode_element(WeylFamily family, const SignedPermutation& g)
{
    switch (family) {
    case WeylFamily::A:
        if (negative_count(g) != 0)
            throw membership_error("negative entries: " + format_window(g) +
                                   " is not an unsigned permutation");
        return encode_a(magnitudes(g));
    case WeylFamily::B:
        return encode_b(g);
    case WeylFamily::D:
        return encode_d(g);
    }
    throw error("corrupt family tag");
}

} // namespace weyl
