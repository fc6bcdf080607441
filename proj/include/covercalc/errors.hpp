#ifndef COVERCALC_ERRORS_HPP
#define COVERCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covercalc {

// Bad user input (malformed words, out-of-range indices, unrealizable requests).
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded (ball sizes, group orders).
// The CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; reaching this is a bug, not bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace covercalc

#endif
