#pragma once

#include <stdexcept>
#include <string>

namespace tiltforge {

// Input quiver is not of Dynkin mutation type.
class NotDynkinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical invariant failed to hold; indicates a bug.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace tiltforge
