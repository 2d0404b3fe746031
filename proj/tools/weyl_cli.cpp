#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weyl/codec.hpp"
#include "weyl/error.hpp"
#include "weyl/number_system.hpp"
#include "weyl/oracle.hpp"
#include "weyl/sampling.hpp"

namespace {

using weyl::Bigint;
using weyl::WeylFamily;

struct Options {
    std::string family_text;
    int rank = 0;
    bool infer_rank = false;
    bool with_tag = false;
    bool with_digits = false;
    bool json = false;
    std::string value;
    std::size_t budget = weyl::oracle::default_budget;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 10;
};

WeylFamily family_of(const Options& opt)
{
    if (opt.family_text.empty())
        throw weyl::parse_error("missing --family (A, B or D)");
    return weyl::parse_family(opt.family_text);
}

nlohmann::json element_json(WeylFamily family, int n, const Bigint& rank,
                            const std::string& digits, const nlohmann::json& window)
{
    return nlohmann::json{{"family", std::string(1, weyl::family_letter(family))},
                          {"n", n},
                          {"rank", rank.str()},
                          {"digits", digits},
                          {"window", window}};
}

std::string trimmed(const std::string& text)
{
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        return "";
    std::size_t last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

void cmd_convert(const Options& opt)
{
    const std::string value = trimmed(opt.value);
    weyl::MixedRadixDigits digits{};
    if (!value.empty() && value.front() == '(') {
        if (opt.rank > 0) {
            digits = weyl::parse_digit_string(value,
                                              weyl::radix_profile(family_of(opt), opt.rank));
        } else if (!opt.family_text.empty()) {
            digits = weyl::parse_digit_string(value, family_of(opt));
        } else {
            digits = weyl::parse_digit_string(value); // embedded tag required
        }
        const Bigint x = weyl::digits_to_int(digits);
        if (opt.json) {
            std::cout << element_json(digits.profile.family, digits.profile.n, x,
                                      weyl::format_digit_string(digits, opt.with_tag),
                                      nullptr)
                      << "\n";
        } else {
            std::cout << x.str() << "\n";
        }
        return;
    }

    const Bigint x = weyl::parse_bigint(value);
    if (x < 0)
        throw weyl::range_error("value " + x.str() + " is negative");
    const WeylFamily family = family_of(opt);
    int n = opt.rank;
    if (n <= 0) {
        if (!opt.infer_rank)
            throw weyl::parse_error("integer input needs --rank or --infer-rank");
        n = weyl::infer_rank(family, x);
    }
    digits = weyl::int_to_digits(x, weyl::radix_profile(family, n));
    if (opt.json) {
        std::cout << element_json(family, n, x,
                                  weyl::format_digit_string(digits, opt.with_tag), nullptr)
                  << "\n";
    } else {
        std::cout << weyl::format_digit_string(digits, opt.with_tag) << "\n";
    }
}

void cmd_encode(const Options& opt)
{
    const weyl::SignedPermutation g = weyl::parse_window(opt.value);
    const WeylFamily family = family_of(opt);
    if (opt.rank > 0 && opt.rank != g.n())
        throw weyl::parse_error("window has rank " + std::to_string(g.n()) +
                                ", but --rank " + std::to_string(opt.rank) + " was given");
    const Bigint x = weyl::encode_element(family, g);
    const auto digits = weyl::int_to_digits(x, weyl::radix_profile(family, g.n()));
    if (opt.json) {
        std::cout << element_json(family, g.n(), x, weyl::format_digit_string(digits, opt.with_tag),
                                  weyl::format_window(g))
                  << "\n";
    } else if (opt.with_digits) {
        std::cout << x.str() << " " << weyl::format_digit_string(digits, opt.with_tag) << "\n";
    } else {
        std::cout << x.str() << "\n";
    }
}

void cmd_decode(const Options& opt)
{
    const WeylFamily family = family_of(opt);
    if (opt.rank <= 0)
        throw weyl::parse_error("decode needs --rank");
    const Bigint x = weyl::parse_bigint(opt.value);
    if (x < 0)
        throw weyl::range_error("value " + x.str() + " is negative");
    const weyl::SignedPermutation g = weyl::decode_element(family, x, opt.rank);
    if (opt.json) {
        const auto digits = weyl::int_to_digits(x, weyl::radix_profile(family, opt.rank));
        std::cout << element_json(family, opt.rank, x,
                                  weyl::format_digit_string(digits, opt.with_tag),
                                  weyl::format_window(g))
                  << "\n";
    } else if (opt.with_digits) {
        const auto digits = weyl::int_to_digits(x, weyl::radix_profile(family, opt.rank));
        std::cout << weyl::format_window(g) << " "
                  << weyl::format_digit_string(digits, opt.with_tag) << "\n";
    } else {
        std::cout << weyl::format_window(g) << "\n";
    }
}

void print_element_line(const Options& opt, WeylFamily family, int n, const Bigint& x,
                        const weyl::SignedPermutation& g)
{
    if (opt.json) {
        const auto digits = weyl::int_to_digits(x, weyl::radix_profile(family, n));
        std::cout << element_json(family, n, x, weyl::format_digit_string(digits),
                                  weyl::format_window(g))
                  << "\n";
    } else {
        std::cout << x.str() << " " << weyl::format_window(g) << "\n";
    }
}

void cmd_enumerate(const Options& opt)
{
    const WeylFamily family = family_of(opt);
    if (opt.rank <= 0)
        throw weyl::parse_error("enumerate needs --rank");
    const Bigint order = weyl::group_order(family, opt.rank);
    if (order > opt.budget)
        throw weyl::budget_error("group has " + order.str() +
                                 " elements, over the budget of " + std::to_string(opt.budget));
    for (Bigint x = 0; x < order; ++x)
        print_element_line(opt, family, opt.rank, x, weyl::decode_element(family, x, opt.rank));
}

void cmd_sample(const Options& opt)
{
    const WeylFamily family = family_of(opt);
    if (opt.rank <= 0)
        throw weyl::parse_error("sample needs --rank");
    const Bigint order = weyl::group_order(family, opt.rank);
    weyl::RankSampler sampler(opt.seed);
    for (std::uint64_t k = 0; k < opt.count; ++k) {
        const Bigint x = sampler.next(order);
        print_element_line(opt, family, opt.rank, x, weyl::decode_element(family, x, opt.rank));
    }
}

int cmd_certify(const Options& opt)
{
    const WeylFamily family = family_of(opt);
    if (opt.rank <= 0)
        throw weyl::parse_error("certify needs --rank");
    const auto report = weyl::oracle::certify(family, opt.rank, opt.budget);
    std::cout << weyl::oracle::format_report(report) << "\n";
    return report.pass ? 0 : 1;
}

void cmd_bench(const Options& opt)
{
    const WeylFamily family = family_of(opt);
    if (opt.rank <= 0)
        throw weyl::parse_error("bench needs --rank");
    const auto profile = weyl::radix_profile(family, opt.rank);
    const Bigint order = weyl::group_order(family, opt.rank);
    weyl::RankSampler sampler(opt.seed);

    using clock = std::chrono::steady_clock;
    double decode_total = 0.0, encode_total = 0.0;
    std::uint64_t verified = 0;
    std::size_t steps = 0;
    for (std::uint64_t k = 0; k < opt.iterations; ++k) {
        const Bigint x = sampler.next(order);

        auto t0 = clock::now();
        const weyl::SignedPermutation g = weyl::decode_element(family, x, opt.rank);
        auto t1 = clock::now();
        const Bigint back = weyl::encode_element(family, g);
        auto t2 = clock::now();

        decode_total += std::chrono::duration<double, std::milli>(t1 - t0).count();
        encode_total += std::chrono::duration<double, std::milli>(t2 - t1).count();
        verified += back == x;

        std::size_t this_steps = 0;
        weyl::int_to_digits(x, profile, &this_steps);
        steps = this_steps;
    }

    const double iters = static_cast<double>(opt.iterations);
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(4);
    out << "bench " << weyl::family_letter(family) << " n=" << opt.rank
        << " iterations=" << opt.iterations << "\n"
        << "decode: mean " << decode_total / iters << " ms\n"
        << "encode: mean " << encode_total / iters << " ms\n"
        << "division steps per conversion: " << steps << " (digit count "
        << profile.width() << (steps == profile.width() ? ", linear)" : ", NOT linear)") << "\n"
        << "round trips verified: " << verified << "/" << opt.iterations << "\n";
    std::cout << out.str();
    if (verified != opt.iterations)
        throw weyl::error("bench round trip failed");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"integer <-> classical Weyl group element codec (families A, B, D)"};
    app.require_subcommand(1);
    Options opt;
    int exit_code = 0;

    auto add_family_rank = [&](CLI::App* sub, bool with_infer = false) {
        sub->add_option("--family,-f", opt.family_text, "family A, B or D");
        sub->add_option("--rank,-n", opt.rank, "rank n");
        if (with_infer)
            sub->add_flag("--infer-rank", opt.infer_rank,
                          "use the smallest rank whose range holds the value");
        sub->add_flag("--json", opt.json, "emit JSON instead of plain text");
    };

    auto* convert = app.add_subcommand(
        "convert", "convert between an integer and its mixed-radix digit string");
    add_family_rank(convert, true);
    convert->add_flag("--tag", opt.with_tag, "append the _<family><rank> tag to digit strings");
    convert->add_option("value", opt.value, "non-negative integer or (d:...:d) digit string")
        ->required();
    convert->callback([&] { cmd_convert(opt); });

    auto* encode = app.add_subcommand("encode", "window notation -> integer rank");
    add_family_rank(encode);
    encode->add_flag("--digits", opt.with_digits, "also print the digit string");
    encode->add_flag("--tag", opt.with_tag, "append the _<family><rank> tag to digit strings");
    encode->add_option("window", opt.value, "window notation, e.g. [2,-1]")->required();
    encode->callback([&] { cmd_encode(opt); });

    auto* decode = app.add_subcommand("decode", "integer rank -> window notation");
    add_family_rank(decode);
    decode->add_flag("--digits", opt.with_digits, "also print the digit string");
    decode->add_option("value", opt.value, "non-negative integer")->required();
    decode->callback([&] { cmd_decode(opt); });

    auto* enumerate = app.add_subcommand("enumerate", "print every element as 'rank window'");
    add_family_rank(enumerate);
    enumerate->add_option("--budget", opt.budget, "element budget for exhaustive commands");
    enumerate->callback([&] { cmd_enumerate(opt); });

    auto* sample = app.add_subcommand("sample", "seeded uniform random elements");
    add_family_rank(sample);
    sample->add_option("--count,-c", opt.count, "number of samples");
    sample->add_option("--seed,-s", opt.seed, "random seed");
    sample->callback([&] { cmd_sample(opt); });

    auto* certify = app.add_subcommand(
        "certify", "exhaustively check the codec bijection against the enumeration oracle");
    add_family_rank(certify);
    certify->add_option("--budget", opt.budget, "element budget for exhaustive commands");
    certify->callback([&] { exit_code = cmd_certify(opt); });

    auto* bench = app.add_subcommand("bench", "time encode/decode and check step linearity");
    add_family_rank(bench);
    bench->add_option("--iterations,-i", opt.iterations, "number of round trips");
    bench->add_option("--seed,-s", opt.seed, "random seed");
    bench->callback([&] { cmd_bench(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const weyl::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const weyl::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const weyl::membership_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const weyl::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const weyl::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
