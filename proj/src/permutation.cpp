#include "weyl/permutation.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

#include "weyl/error.hpp"

namespace weyl {
namespace {

void check_magnitude_bijection(const std::vector<int>& window, bool allow_signs)
{
    const int n = static_cast<int>(window.size());
    if (n == 0)
        throw parse_error("window must not be empty");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int entry : window) {
        if (entry == 0)
            throw parse_error("window entry 0 is invalid");
        if (entry < 0 && !allow_signs)
            throw parse_error("negative entry " + std::to_string(entry) +
                              " in an unsigned window");
        int magnitude = std::abs(entry);
        if (magnitude > n)
            throw parse_error("window entry " + std::to_string(entry) +
                              " out of range for rank " + std::to_string(n));
        if (seen[magnitude])
            throw parse_error("repeated magnitude " + std::to_string(magnitude) +
                              " in window");
        seen[magnitude] = true;
    }
}

} // namespace

Permutation make_permutation(std::vector<int> window)
{
    check_magnitude_bijection(window, false);
    return Permutation{std::move(window)};
}

SignedPermutation make_signed_permutation(std::vector<int> window)
{
    check_magnitude_bijection(window, true);
    return SignedPermutation{std::move(window)};
}

SignedPermutation identity(int n)
{
    if (n < 1)
        throw parse_error("invalid rank " + std::to_string(n) + ": must be >= 1");
    std::vector<int> window(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        window[i - 1] = i;
    return SignedPermutation{std::move(window)};
}

int apply(const SignedPermutation& w, int i)
{
    const int n = w.n();
    if (i == 0 || i < -n || i > n)
        throw range_error("index " + std::to_string(i) + " outside {-" +
                          std::to_string(n) + "..-1, 1.." + std::to_string(n) + "}");
    return i > 0 ? w.window[i - 1] : -w.window[-i - 1];
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b)
{
    if (a.n() != b.n())
        throw parse_error("rank mismatch: " + std::to_string(a.n()) + " vs " +
                          std::to_string(b.n()));
    std::vector<int> window(b.window.size());
    for (std::size_t i = 0; i < window.size(); ++i)
        window[i] = apply(a, b.window[i]);
    return SignedPermutation{std::move(window)};
}

SignedPermutation inverse(const SignedPermutation& w)
{
    std::vector<int> window(w.window.size());
    for (int i = 1; i <= w.n(); ++i) {
        int image = w.window[i - 1];
        if (image > 0)
            window[image - 1] = i;
        else
            window[-image - 1] = -i;
    }
    return SignedPermutation{std::move(window)};
}

int negative_count(const SignedPermutation& w)
{
    int count = 0;
    for (int entry : w.window)
        count += entry < 0;
    return count;
}

bool is_even_signed(const SignedPermutation& w)
{
    return negative_count(w) % 2 == 0;
}

Permutation magnitudes(const SignedPermutation& w)
{
    std::vector<int> window(w.window.size());
    for (std::size_t i = 0; i < window.size(); ++i)
        window[i] = std::abs(w.window[i]);
    return Permutation{std::move(window)};
}

SignedPermutation with_all_positive(const Permutation& p)
{
    return SignedPermutation{p.window};
}

namespace {

std::string format_entries(const std::vector<int>& window)
{
    std::string out = "[";
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(window[i]);
    }
    out += ']';
    return out;
}

} // namespace

std::string format_window(const SignedPermutation& w)
{
    return format_entries(w.window);
}

std::string format_window(const Permutation& p)
{
    return format_entries(p.window);
}

SignedPermutation parse_window(std::string_view text)
{
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_spaces();
    if (pos >= text.size() || text[pos] != '[')
        throw parse_error("window must start with '[': '" + std::string(text) + "'");
    ++pos;
    std::vector<int> window;
    skip_spaces();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip_spaces();
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                negative = text[pos] == '-';
                ++pos;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw parse_error("expected integer in window '" + std::string(text) + "'");
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1'000'000'000L)
                    throw parse_error("window entry too large in '" + std::string(text) + "'");
                ++pos;
            }
            window.push_back(negative ? -static_cast<int>(value) : static_cast<int>(value));
            skip_spaces();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw parse_error("expected ',' or ']' in window '" + std::string(text) + "'");
        }
    }
    skip_spaces();
    if (pos != text.size())
        throw parse_error("trailing characters in window '" + std::string(text) + "'");
    return make_signed_permutation(std::move(window));
}

} // namespace weyl
