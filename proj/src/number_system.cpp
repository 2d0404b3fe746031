#include "weyl/number_system.hpp"

#include <cctype>
#include <utility>

#include "weyl/error.hpp"

namespace weyl {
namespace {

std::string digit_name(const RadixProfile& profile, std::size_t j)
{
    return "d_" + std::to_string(profile.digit_index(j));
}

// "(INT (':' INT)*)" with optional "_Xn" tag; returns digits most
// significant first plus the tag if present.
struct ParsedDigitText {
    std::vector<unsigned> digits_msd_first;
    bool has_tag = false;
    WeylFamily family = WeylFamily::D;
    int rank = 0;
};

void skip_spaces(std::string_view text, std::size_t& pos)
{
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
}

unsigned parse_unsigned(std::string_view text, std::size_t& pos, const char* what)
{
    skip_spaces(text, pos);
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error(std::string("expected ") + what + " in '" + std::string(text) + "'");
    unsigned long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > 1'000'000'000ULL)
            throw parse_error(std::string(what) + " too large in '" + std::string(text) + "'");
        ++pos;
    }
    return static_cast<unsigned>(value);
}

ParsedDigitText parse_digit_text(std::string_view text)
{
    ParsedDigitText out;
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '(')
        throw parse_error("digit string must start with '(': '" + std::string(text) + "'");
    ++pos;
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == ')') {
        ++pos; // "()" is the zero-width vector
    } else {
        out.digits_msd_first.push_back(parse_unsigned(text, pos, "digit"));
        skip_spaces(text, pos);
        while (pos < text.size() && text[pos] == ':') {
            ++pos;
            out.digits_msd_first.push_back(parse_unsigned(text, pos, "digit"));
            skip_spaces(text, pos);
        }
        if (pos >= text.size() || text[pos] != ')')
            throw parse_error("expected ')' in digit string '" + std::string(text) + "'");
        ++pos;
    }
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '_') {
        ++pos;
        if (pos >= text.size())
            throw parse_error("truncated family/rank tag in '" + std::string(text) + "'");
        out.has_tag = true;
        out.family = family_from_letter(text[pos]);
        ++pos;
        out.rank = static_cast<int>(parse_unsigned(text, pos, "rank"));
        skip_spaces(text, pos);
    }
    if (pos != text.size())
        throw parse_error("trailing characters in digit string '" + std::string(text) + "'");
    return out;
}

MixedRadixDigits digits_from_msd(const ParsedDigitText& parsed, RadixProfile profile)
{
    if (parsed.has_tag &&
        (parsed.family != profile.family || parsed.rank != profile.n)) {
        throw parse_error("digit-string tag _" +
                          std::string(1, family_letter(parsed.family)) +
                          std::to_string(parsed.rank) + " does not match " +
                          std::string(1, family_letter(profile.family)) +
                          std::to_string(profile.n));
    }
    std::vector<unsigned> digits(parsed.digits_msd_first.rbegin(),
                                 parsed.digits_msd_first.rend());
    return make_digits(std::move(profile), std::move(digits));
}

} // namespace

RadixProfile radix_profile(WeylFamily family, int n)
{
    if (n < 1)
        throw parse_error("invalid rank " + std::to_string(n) + ": must be >= 1");
    RadixProfile profile{family, n, {}, {}};
    switch (family) {
    case WeylFamily::A:
        for (int i = 1; i <= n - 1; ++i)
            profile.digit_caps.push_back(static_cast<unsigned>(i));
        break;
    case WeylFamily::B:
        profile.digit_caps.push_back(1);
        [[fallthrough]];
    case WeylFamily::D:
        for (int i = 1; i <= n - 1; ++i)
            profile.digit_caps.push_back(2 * static_cast<unsigned>(i) + 1);
        break;
    }
    profile.place_values.reserve(profile.digit_caps.size());
    Bigint place = 1;
    for (unsigned cap : profile.digit_caps) {
        profile.place_values.push_back(place);
        place *= cap + 1;
    }
    return profile;
}

Bigint max_value(const RadixProfile& profile)
{
    Bigint range = 1;
    for (unsigned cap : profile.digit_caps)
        range *= cap + 1;
    return range - 1;
}

MixedRadixDigits make_digits(RadixProfile profile, std::vector<unsigned> digits)
{
    if (digits.size() != profile.width()) {
        throw parse_error("expected " + std::to_string(profile.width()) +
                          " digits for " + std::string(1, family_letter(profile.family)) +
                          std::to_string(profile.n) + ", got " + std::to_string(digits.size()));
    }
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] > profile.digit_caps[j]) {
            throw parse_error("invalid digit " + digit_name(profile, j) + " = " +
                              std::to_string(digits[j]) + ": cap is " +
                              std::to_string(profile.digit_caps[j]));
        }
    }
    return MixedRadixDigits{std::move(profile), std::move(digits)};
}

Bigint digits_to_int(const MixedRadixDigits& d)
{
    // Horner form of sum digits[j] * place_values[j]; exact because each
    // place value is the product of the radices below it.
    Bigint acc = 0;
    for (std::size_t j = d.digits.size(); j-- > 0;) {
        acc *= d.profile.digit_caps[j] + 1;
        acc += d.digits[j];
    }
    return acc;
}

MixedRadixDigits int_to_digits(const Bigint& x, const RadixProfile& profile,
                               std::size_t* division_steps)
{
    if (x < 0)
        throw range_error("value " + x.str() + " is negative");
    Bigint max = max_value(profile);
    if (x > max) {
        throw range_error("value " + x.str() + " out of range for " +
                          std::string(1, family_letter(profile.family)) +
                          std::to_string(profile.n) + ": max is " + max.str());
    }
    std::vector<unsigned> digits(profile.width());
    std::size_t steps = 0;
    Bigint quotient = x;
    Bigint next, remainder;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        Bigint radix = profile.digit_caps[j] + 1;
        boost::multiprecision::divide_qr(quotient, radix, next, remainder);
        quotient.swap(next);
        ++steps;
        digits[j] = remainder.convert_to<unsigned>();
    }
    if (division_steps)
        *division_steps = steps;
    return MixedRadixDigits{profile, std::move(digits)};
}

int infer_rank(WeylFamily family, const Bigint& x)
{
    if (x < 0)
        throw range_error("value " + x.str() + " is negative");
    for (int n = 1;; ++n) {
        if (x < group_order(family, n))
            return n;
    }
}

std::string format_digit_string(const MixedRadixDigits& d, bool with_tag)
{
    std::string out = "(";
    for (std::size_t j = d.digits.size(); j-- > 0;) {
        out += std::to_string(d.digits[j]);
        if (j > 0)
            out += ':';
    }
    out += ')';
    if (with_tag) {
        out += '_';
        out += family_letter(d.profile.family);
        out += std::to_string(d.profile.n);
    }
    return out;
}

MixedRadixDigits parse_digit_string(std::string_view text, const RadixProfile& profile)
{
    return digits_from_msd(parse_digit_text(text), profile);
}

MixedRadixDigits parse_digit_string(std::string_view text, WeylFamily family)
{
    ParsedDigitText parsed = parse_digit_text(text);
    const int width = static_cast<int>(parsed.digits_msd_first.size());
    const int n = parsed.has_tag ? parsed.rank
                : family == WeylFamily::B ? width
                                          : width + 1;
    return digits_from_msd(parsed, radix_profile(family, n));
}

MixedRadixDigits parse_digit_string(std::string_view text)
{
    ParsedDigitText parsed = parse_digit_text(text);
    if (!parsed.has_tag)
        throw parse_error("digit string '" + std::string(text) +
                          "' carries no family/rank tag and none was supplied");
    return digits_from_msd(parsed, radix_profile(parsed.family, parsed.rank));
}

} // namespace weyl
