#include "weyl/bigint.hpp"

#include <cctype>

#include "weyl/error.hpp"

namespace weyl {

Bigint parse_bigint(std::string_view text)
{
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    if (pos == text.size())
        throw parse_error("not an integer: '" + std::string(text) + "'");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("not an integer: '" + std::string(text) + "'");
    }
    return Bigint(std::string(text));
}

std::string to_string(const Bigint& x)
{
    return x.str();
}

} // namespace weyl
