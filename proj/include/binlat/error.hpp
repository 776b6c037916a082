#pragma once

#include <stdexcept>
#include <string>

namespace binlat {

// A mathematical precondition of an operation does not hold for its input.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed text input.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal identity failed to hold; always a bug or an unexpected input class.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw precondition_error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw invariant_error(what);
}

}  // namespace binlat
