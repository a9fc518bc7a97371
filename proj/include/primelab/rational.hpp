#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace primelab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serializes a rational as "num/den", den always present and positive.
inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace primelab
