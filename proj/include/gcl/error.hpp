#pragma once

#include <stdexcept>
#include <string>

namespace gcl {

// Every domain failure carries a stable name (InvalidOrder, NotAFunctional, ...)
// that the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& what) {
  throw Error(name, what);
}

}  // namespace gcl
