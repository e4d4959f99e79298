#pragma once

#include <stdexcept>
#include <string>

namespace dualgraph {

// Malformed user input: parse errors, dimension mismatches, invalid graph data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation applied outside its mathematical domain (p_f = 0, indefinite
// intersection form, disconnected support, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable search budget was exhausted before the answer was certain.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Either a bug or a counterexample to a statement
// the implementation relies on; the message carries the witness.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Checked 64-bit arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace dualgraph
