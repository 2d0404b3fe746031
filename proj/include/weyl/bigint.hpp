#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace weyl {

// Group orders grow as 2^{n-1} n!, which leaves 64 bits at n = 21 already;
// every rank in this library is arbitrary precision.
using Bigint = boost::multiprecision::cpp_int;

// Strict decimal parse (optional leading '-'); throws parse_error otherwise.
Bigint parse_bigint(std::string_view text);

std::string to_string(const Bigint& x);

} // namespace weyl
