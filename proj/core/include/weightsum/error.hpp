#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace weightsum {

// Every library failure carries a stable machine-readable code ("NotPrime",
// "CapExceeded", ...) next to the human-readable message, so the CLI can map
// errors to exit statuses and tests can match on the code alone.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

inline void require(bool condition, const std::string& code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace weightsum
