#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace blockscope {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (files, CLI arguments, non-bijective images).
class input_error : public error {
public:
  using error::error;
};

/// Precondition violation on otherwise well-formed values
/// (element not in group, subgroup not contained, kernel not normal, ...).
class domain_error : public error {
public:
  using error::error;
};

/// The request exceeds a configured enumeration threshold.
class capacity_error : public error {
public:
  using error::error;
};

/// Invalid exact-arithmetic operation (inversion of zero, p in a denominator, ...).
class arithmetic_error : public error {
public:
  using error::error;
};

/// A verified theorem failed on concrete data.  This either exposes a bug in
/// the engine or falsifies the statement; it must never be swallowed, so it
/// carries the full diagnostic trail.
class theorem_violation : public error {
public:
  theorem_violation(const std::string& what, std::string diagnostics)
      : error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const { return diagnostics_; }

private:
  std::string diagnostics_;
};

} // namespace blockscope
