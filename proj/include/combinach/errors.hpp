#pragma once

#include <stdexcept>
#include <string>

namespace combinach {

// Malformed input: bad syntax, unknown fields, out-of-range parameters.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but violates a stated operation precondition.
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internally recomputed identity failed; indicates an engine bug.
class verification_error : public std::runtime_error {
public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace combinach
