#pragma once

#include <stdexcept>
#include <string>

namespace mulideal {

/// Bad input or a violated precondition (including a theorem hypothesis).
/// Never used to signal a failed check.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mulideal
