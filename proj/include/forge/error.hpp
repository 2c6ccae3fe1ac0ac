#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// Invalid user input: bad config files, malformed CLI values, incompatible
// artifacts. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A pipeline stage failed while executing. CLI maps this to exit code 3.
struct StageError : std::runtime_error {
  explicit StageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulator faults.
struct UninitializedReadError : StageError {
  explicit UninitializedReadError(const std::string& msg) : StageError(msg) {}
};
struct FsmFault : StageError {
  explicit FsmFault(const std::string& msg) : StageError(msg) {}
};
struct TrojanConfigFault : ConfigError {
  explicit TrojanConfigFault(const std::string& msg) : ConfigError(msg) {}
};

}  // namespace forge
