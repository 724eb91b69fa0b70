/**
 * @file errors.hpp
 * @brief Error taxonomy mirrored by the CLI exit codes.
 *
 * Exit-code convention: 0 success, 1 property failure, 2 usage error,
 * 3 degenerate input (e.g. a metric family evaluated at a singular
 * parameter point), 4 I/O failure.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace cskit {

/// A mathematical property that should hold numerically does not.
struct PropertyError : std::runtime_error {
  explicit PropertyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad arguments / malformed request.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally valid input that lands on a degenerate configuration.
struct DegenerateError : std::runtime_error {
  explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File / stream problems.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A chart-based computation left the domain of the chart (e.g. the rotation
/// angle reached the cut locus of the logarithm).
struct ChartOverflowError : std::runtime_error {
  explicit ChartOverflowError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// A group product drifted off the manifold beyond tolerance; elements are
/// never silently re-projected.
struct GroupDriftError : PropertyError {
  explicit GroupDriftError(const std::string& msg) : PropertyError(msg) {}
};

}  // namespace cskit
