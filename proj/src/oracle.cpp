#include "weyl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "weyl/error.hpp"

namespace weyl::oracle {
namespace {

void check_budget(WeylFamily family, int n, const Bigint& order, std::size_t budget)
{
    if (order > budget)
        throw budget_error("group " + std::string(1, family_letter(family)) +
                           std::to_string(n) + " has " + order.str() +
                           " elements, over the budget of " + std::to_string(budget));
}

} // namespace

std::vector<SignedPermutation> enumerate_group(WeylFamily family, int n, std::size_t budget)
{
    const Bigint order = group_order(family, n);
    check_budget(family, n, order, budget);

    std::vector<std::vector<int>> windows;
    windows.reserve(order.convert_to<std::size_t>());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (family == WeylFamily::A) {
            windows.push_back(perm);
            continue;
        }
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            if (family == WeylFamily::D && std::popcount(mask) % 2 != 0)
                continue;
            std::vector<int> window = perm;
            for (int i = 0; i < n; ++i)
                if (mask & (1ul << i))
                    window[i] = -window[i];
            windows.push_back(std::move(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(windows.begin(), windows.end());
    std::vector<SignedPermutation> elements;
    elements.reserve(windows.size());
    for (auto& window : windows)
        elements.push_back(SignedPermutation{std::move(window)});
    return elements;
}

Bigint brute_force_rank(const SignedPermutation& g, WeylFamily family, int n,
                        std::size_t budget)
{
    const Bigint order = group_order(family, n);
    check_budget(family, n, order, budget);
    for (Bigint x = 0; x < order; ++x) {
        if (decode_element(family, x, n) == g)
            return x;
    }
    throw error("element " + format_window(g) + " not reached by decode over " +
                std::string(1, family_letter(family)) + std::to_string(n) +
                ": codec defect");
}

CertifyReport certify(WeylFamily family, int n, std::size_t budget)
{
    CertifyReport report{family, n, group_order(family, n), 0, false, {}};
    check_budget(family, n, report.order, budget);

    auto fail = [&](std::string why) {
        report.pass = false;
        report.first_failure = std::move(why);
        return report;
    };

    std::vector<std::vector<int>> decoded_windows;
    decoded_windows.reserve(report.order.convert_to<std::size_t>());
    for (Bigint x = 0; x < report.order; ++x) {
        SignedPermutation g = decode_element(family, x, n);
        if (family == WeylFamily::D && !is_even_signed(g))
            return fail("decode(" + x.str() + ") = " + format_window(g) +
                        " has an odd number of negative entries");
        if (family == WeylFamily::A && negative_count(g) != 0)
            return fail("decode(" + x.str() + ") = " + format_window(g) +
                        " has negative entries");
        Bigint back = encode_element(family, g);
        if (back != x)
            return fail("encode(decode(" + x.str() + ")) = " + back.str());
        decoded_windows.push_back(g.window);
        ++report.checked;
    }

    // Image equality against the independent enumeration; injectivity of
    // decode follows since the counts match.
    std::sort(decoded_windows.begin(), decoded_windows.end());
    std::vector<SignedPermutation> expected = enumerate_group(family, n, budget);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i >= decoded_windows.size() || decoded_windows[i] != expected[i].window)
            return fail("decode image differs from the enumeration at sorted slot " +
                        std::to_string(i) + ": expected " + format_window(expected[i]));
    }
    if (decoded_windows.size() != expected.size())
        return fail("decode image has " + std::to_string(decoded_windows.size()) +
                    " windows, enumeration has " + std::to_string(expected.size()));

    // decode(encode(g)) = g over the enumeration
    for (const SignedPermutation& g : expected) {
        Bigint x = encode_element(family, g);
        if (decode_element(family, x, n) != g)
            return fail("decode(encode(" + format_window(g) + ")) != " + format_window(g));
    }

    report.pass = true;
    return report;
}

std::string format_report(const CertifyReport& report)
{
    if (report.pass)
        return "PASS " + report.checked.str() + "/" + report.order.str();
    return "FAIL " + report.checked.str() + "/" + report.order.str() + ": " +
           report.first_failure;
}

} // namespace weyl::oracle
