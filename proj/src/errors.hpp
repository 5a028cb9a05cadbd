#pragma once

#include <stdexcept>
#include <string>

namespace perfembed {

/// Malformed or rejected input (bad word length, invalid seed, bad file
/// contents, violated precondition).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked to enumerate or materialize more than its
/// configured size limit allows.
struct LimitExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Filesystem-level failure (missing file, unreadable stream).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace perfembed
