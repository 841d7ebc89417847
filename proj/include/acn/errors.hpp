#pragma once

#include <stdexcept>
#include <string>

namespace acn {

// Raised for bad caller input: unknown ids, out-of-range parameters,
// malformed schedules. The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acn
