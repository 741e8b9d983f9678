#ifndef BISETFUN_ERRORS_HPP
#define BISETFUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bisetfun {

// Bad user input (malformed permutation, unknown preset, invalid module spec).
struct input_error : std::runtime_error {
  explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

// A configured size limit was exceeded. The message names the limit.
struct limit_error : std::runtime_error {
  explicit limit_error(const std::string &msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed. Never expected on valid inputs.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace bisetfun

#endif
