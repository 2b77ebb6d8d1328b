#pragma once

#include <stdexcept>
#include <string>

namespace amekit {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  Shape,
  Contradiction,
  Entangled,
  NotAme,
  Unsupported,
  Limit,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace amekit
