#pragma once

#include <stdexcept>
#include <string>

namespace ownet {

// Error taxonomy mirrored by the CLI exit codes:
//   config_error -> 2, input_error -> 3, compute_error -> 4.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : error {
  using error::error;
};

struct input_error : error {
  using error::error;
};

struct compute_error : error {
  using error::error;
};

}  // namespace ownet
