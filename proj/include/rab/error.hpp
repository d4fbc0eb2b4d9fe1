#pragma once

#include <stdexcept>
#include <string>

namespace rab {

// Every failure carries a stable kind name (UnknownType, BallTooLarge, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace rab
