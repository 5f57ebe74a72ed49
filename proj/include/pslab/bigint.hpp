#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace pslab {

// Exact arbitrary-precision integer used by every counting kernel. Counts are
// never truncated or rounded; conversions to double happen only in reporting.
using bigint = boost::multiprecision::cpp_int;

using bigint_hash = boost::hash<bigint>;

} // namespace pslab
