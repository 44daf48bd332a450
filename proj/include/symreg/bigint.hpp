#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symreg {

// Space cardinalities overflow 64 bits almost immediately (200 trees with
// ten terminals reach thousands of digits), so all counting runs on an
// arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

} // namespace symreg
