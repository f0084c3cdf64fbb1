#pragma once

#include <stdexcept>
#include <string>

namespace illposed {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedKind : std::logic_error {
  using std::logic_error::logic_error;
};

struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace illposed
