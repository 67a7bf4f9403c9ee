#pragma once

#include <stdexcept>
#include <string>

namespace hamarch {

/// Computation or contract failure (bad input, unsupported combination,
/// exceeded encoding width, failed exactness assertion).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operation asked of an engine that does not serve it (e.g. transfer
/// matrix for the V/U ensembles).
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error(what) {}
};

}  // namespace hamarch
