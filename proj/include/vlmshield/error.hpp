// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace vlmshield {

/// Bad user-supplied input: shapes, ranges, malformed files, empty prompts.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A plugged-in component broke its interface contract (e.g. a denoiser
/// returned a tensor of the wrong shape).
class ContractViolationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Network/client failure that survived the retry policy.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable path, bad PNG).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vlmshield
