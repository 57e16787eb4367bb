#pragma once

#include <stdexcept>
#include <string>

namespace rbla {

// Malformed data: bad documents, unknown names, shape mismatches.
// Maps to CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace rbla
