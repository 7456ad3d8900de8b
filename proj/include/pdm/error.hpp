#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

  // Malformed input: an invalid word, a crossing matching, mismatched
  // degrees, or an argument outside an operation's domain.
  class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A request that would exceed a configured size guard.
  class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace pdm
