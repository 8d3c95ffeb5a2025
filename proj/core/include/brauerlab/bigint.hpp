#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace brauerlab {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace brauerlab
