#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace ng {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a computation would exceed a configured size cap.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a condition the library guarantees internally fails anyway.
// Callers are not expected to handle this; it signals a bug or bad data.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ng
