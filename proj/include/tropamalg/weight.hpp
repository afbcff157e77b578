#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropamalg {

// All fan weights and Möbius values are arbitrary-precision integers; weight
// products and η-sums must never wrap.
using Weight = boost::multiprecision::cpp_int;

inline std::string weight_to_string(const Weight& w) { return w.str(); }

Weight weight_from_string(const std::string& s);

}  // namespace tropamalg
