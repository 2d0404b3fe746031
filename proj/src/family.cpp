#include "weyl/family.hpp"

#include "weyl/error.hpp"

namespace weyl {

char family_letter(WeylFamily family)
{
    switch (family) {
    case WeylFamily::A: return 'A';
    case WeylFamily::B: return 'B';
    case WeylFamily::D: return 'D';
    }
    throw error("corrupt family tag");
}

WeylFamily family_from_letter(char letter)
{
    switch (letter) {
    case 'A': case 'a': return WeylFamily::A;
    case 'B': case 'b': return WeylFamily::B;
    case 'D': case 'd': return WeylFamily::D;
    default:
        throw parse_error(std::string("unknown family '") + letter + "': expected A, B or D");
    }
}

WeylFamily parse_family(const std::string& text)
{
    if (text.size() != 1)
        throw parse_error("unknown family '" + text + "': expected A, B or D");
    return family_from_letter(text[0]);
}

Bigint group_order(WeylFamily family, int n)
{
    if (n < 1)
        throw parse_error("invalid rank " + std::to_string(n) + ": must be >= 1");
    Bigint factorial = 1;
    for (int i = 2; i <= n; ++i)
        factorial *= i;
    switch (family) {
    case WeylFamily::A: return factorial;
    case WeylFamily::B: return factorial << n;
    case WeylFamily::D: return factorial << (n - 1);
    }
    throw error("corrupt family tag");
}

} // namespace weyl
