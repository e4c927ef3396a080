// Exception types shared by the library, the CLI and the Python module.
#pragma once

#include <stdexcept>
#include <string>

namespace zipcox {

// Bad user input: malformed datum, non-dominant mu, violated precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration or volume limit was hit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal self-check failed.
struct DefectError : std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw InputError(msg); }
[[noreturn]] inline void fail_defect(const std::string& msg) { throw DefectError(msg); }

struct Limits {
  std::size_t enumeration = 1000000;   // roots / Weyl elements
  std::size_t volume = 1000000;        // lattice points in parallelepipeds
};

} // namespace zipcox
