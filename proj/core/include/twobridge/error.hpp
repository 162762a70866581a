#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

// Violated input precondition: malformed text, zero coefficient, link where a
// knot is required, non-coprime fraction and so on.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Two independent computations of the same quantity disagreed. Signals a bug
// or corrupted state, never bad user input.
class CrossCheckError : public std::logic_error {
 public:
  explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

// The closed-form diagonalization hit an isotropic middle-region vector
// (a zero weight), so the Gram-Schmidt chain cannot continue.
class DegenerateFormError : public std::domain_error {
 public:
  explicit DegenerateFormError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace twobridge
