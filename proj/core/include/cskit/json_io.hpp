/**
 * @file json_io.hpp
 * @brief Minimal JSON emitter with reproducible number formatting.
 *
 * Output determinism is a hard requirement: the same command with the same
 * seed must produce byte-identical reports.  General-purpose JSON writers do
 * not pin their float formatting, so the emitter here is explicit: doubles are
 * printed with "%.17g" (lossless round-trip), and object keys keep insertion
 * order.  Parsing of input files is delegated to a vendored parser inside the
 * .cpp, which never leaks into this interface.
 */
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cskit/linalg.hpp"

namespace cskit::jio {

/// Format a double with 17 significant digits (JSON payloads).
std::string num17(double v);

/// Format a double with 12 significant digits (human-readable text).
std::string num12(double v);

/// Ordered JSON value tree.
struct Value {
  enum class Kind { Null, Bool, Int, Num, Str, Arr, Obj };
  Kind kind = Kind::Null;
  bool b = false;
  long long i = 0;
  double num = 0.0;
  std::string str;
  std::vector<Value> arr;
  std::vector<std::pair<std::string, Value>> obj;

  static Value null();
  static Value boolean(bool v);
  static Value integer(long long v);
  static Value number(double v);
  static Value string(std::string v);
  static Value array(std::vector<Value> items = {});
  static Value object();

  Value& push(Value v);                       ///< append to array
  Value& set(const std::string& k, Value v);  ///< append key to object

  /// Serialize; indent >= 0 pretty-prints with that many spaces per level.
  std::string dump(int indent = 2) const;
};

/// JSON array from a vector.
Value vec_to_json(const Vec& v);
/// JSON array-of-arrays (row-major) from a matrix.
Value mat_to_json(const Mat& m);
/// Complex matrix: every entry becomes the pair [re, im].
Value cmat_to_json(const CMat& m);

}  // namespace cskit::jio
