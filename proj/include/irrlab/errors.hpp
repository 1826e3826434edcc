#pragma once

#include <stdexcept>
#include <string>

namespace irrlab {

// Caller-supplied data is malformed or violates a documented precondition.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is well formed but outside what this build can handle.
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A search or enumeration exceeded its configured budget; verdict unknown.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// The instance provably has no solution.
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction that must succeed produced an invalid result: a defect.
struct construction_error : std::runtime_error {
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace irrlab
