#include "weyl/subexceedant.hpp"

#include <cctype>
#include <numeric>
#include <utility>

#include "weyl/error.hpp"

namespace weyl {

SubexceedantFunction validate_subexceedant(std::vector<int> values)
{
    if (values.empty())
        throw parse_error("subexceedant function must not be empty");
    for (std::size_t j = 0; j < values.size(); ++j) {
        const int i = static_cast<int>(j) + 1;
        if (values[j] < 1 || values[j] > i)
            throw parse_error("f(" + std::to_string(i) + ") = " +
                              std::to_string(values[j]) + " violates 1 <= f(i) <= i");
    }
    return SubexceedantFunction{std::move(values)};
}

Permutation subexceedant_to_permutation(const SubexceedantFunction& f)
{
    const int n = f.n();
    std::vector<int> window(static_cast<std::size_t>(n));
    std::vector<int> position(static_cast<std::size_t>(n) + 1); // position[v] = 1-based slot of v
    std::iota(window.begin(), window.end(), 1);
    std::iota(position.begin(), position.end(), 0);
    for (int i = 1; i <= n; ++i) {
        const int j = f.at(i);
        if (j == i)
            continue;
        // left-multiplying by the transposition (i j) swaps the values i, j
        const int pi = position[i], pj = position[j];
        std::swap(window[pi - 1], window[pj - 1]);
        std::swap(position[i], position[j]);
    }
    return Permutation{std::move(window)};
}

SubexceedantFunction permutation_to_subexceedant(const Permutation& beta)
{
    const int n = beta.n();
    std::vector<int> window = beta.window;
    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        position[window[i - 1]] = i;
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int k = n; k >= 2; --k) {
        values[k - 1] = window[k - 1];
        const int p = position[k];
        std::swap(window[p - 1], window[k - 1]);
        position[window[p - 1]] = p;
        position[k] = k;
    }
    values[0] = 1;
    return SubexceedantFunction{std::move(values)};
}

std::string format_fword(const SubexceedantFunction& f)
{
    std::string out;
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        if (j > 0)
            out += ';';
        out += std::to_string(f.values[j]);
    }
    return out;
}

SubexceedantFunction parse_fword(std::string_view text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    for (;;) {
        skip_spaces();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected integer in f-word '" + std::string(text) + "'");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000'000L)
                throw parse_error("f-word entry too large in '" + std::string(text) + "'");
            ++pos;
        }
        values.push_back(static_cast<int>(value));
        skip_spaces();
        if (pos < text.size() && text[pos] == ';') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos != text.size())
        throw parse_error("trailing characters in f-word '" + std::string(text) + "'");
    return validate_subexceedant(std::move(values));
}

} // namespace weyl
