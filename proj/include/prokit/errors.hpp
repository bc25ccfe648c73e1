// Error taxonomy shared by the whole library.
//
// Three failure classes map onto the CLI exit-code contract:
//   parse_error  -> exit 2  (malformed input files / words / terms)
//   shape_error  -> exit 3  (rank, base-dimension, arity, or index violations)
//   value_error  -> exit 3  (semantically invalid values, e.g. division by the
//                            zero polynomial, unknown chip or letter)
#pragma once

#include <stdexcept>
#include <string>

namespace prokit {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct shape_error : std::runtime_error {
  explicit shape_error(const std::string& what) : std::runtime_error(what) {}
};

struct value_error : std::runtime_error {
  explicit value_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace prokit
