#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace k3lat {

// Single exception type carrying a stable machine-readable code
// ("SingularMatrix", "UnknownName", ...). The CLI maps these to exit code 2
// and a structured error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, long position = -1)
      : std::runtime_error(message), code_(std::move(code)), position_(position) {}

  const std::string& code() const noexcept { return code_; }

  // Byte offset for SyntaxError; -1 otherwise.
  long position() const noexcept { return position_; }

 private:
  std::string code_;
  long position_;
};

}  // namespace k3lat
