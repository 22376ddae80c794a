#pragma once

#include <stdexcept>
#include <string>

namespace morseflow {

// Malformed or out-of-domain input (bad JSON, loops in a quotient, p outside [0,1], ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated operation precondition (deforming a non-flow, Morse ranking a cyclic flow, ...).
struct PreconditionError : InputError {
  using InputError::InputError;
};

// Instance exceeds a hard size guard (enumeration limit, 64-vertex polynomial cap, ...).
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace morseflow
