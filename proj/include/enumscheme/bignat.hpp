#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace enumscheme {

// Exact counting type. Z-set counts stay small, but scheme evaluation
// produces values growing like 4^n and beyond, so the shared type is
// an arbitrary-precision integer.
using BigNat = boost::multiprecision::cpp_int;

}  // namespace enumscheme
