#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pint {

using Rat = boost::multiprecision::cpp_rational;

// Renders integers without a denominator, otherwise p/q.
std::string rat_to_string(const Rat& r);

// Parses "p", "-p", "p/q".
Rat rat_parse(std::string_view text);

}  // namespace pint
