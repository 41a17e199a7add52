#pragma once

#include <stdexcept>
#include <string>

namespace borda {

// Bad input data or configuration. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (programming error at the
// call site, not bad election data).
class ArgumentError : public std::logic_error {
 public:
  explicit ArgumentError(const std::string& what) : std::logic_error(what) {}
};

// A should-never-happen internal check failed. The CLI maps this to exit
// code 2.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace borda
