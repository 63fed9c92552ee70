// Error taxonomy for the whole library.
//
// Three kinds, matching the three ways a computation can go wrong here:
//   invalid_input     — caller handed us data that is malformed or
//                       mathematically inconsistent (bad Cartan matrix,
//                       automorphism that does not preserve the diagram, ...)
//   unsupported_case  — the input is legitimate mathematics but outside the
//                       family of cases this code implements
//   internal_error    — an invariant the library itself maintains was
//                       violated; always a bug, never a user problem.
//
// The command line tool maps these to exit codes; library code should pick
// the most specific kind and include enough context in the message to
// reproduce the failure.

#pragma once

#include <stdexcept>
#include <string>

namespace liedirac {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_input : public error {
 public:
  explicit invalid_input(const std::string& what) : error("invalid input: " + what) {}
};

class unsupported_case : public error {
 public:
  explicit unsupported_case(const std::string& what)
      : error("unsupported case: " + what) {}
};

class internal_error : public error {
 public:
  explicit internal_error(const std::string& what)
      : error("internal error: " + what) {}
};

}  // namespace liedirac
