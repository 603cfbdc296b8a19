#pragma once

#include <stdexcept>
#include <string>

namespace mhproj {

/// Malformed user input (bad JSON, wrong shapes, zero degree columns, ...).
/// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A well-formed question whose answer is "this object does not admit that"
/// (sections of an empty scheme, a weight outside the weight cone, ...).
/// The CLI maps this to exit code 1.
struct analysis_error : std::runtime_error {
  explicit analysis_error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant: something the mathematics guarantees failed
/// to hold. Always a bug, never a user error.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mhproj
