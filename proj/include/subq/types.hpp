// Copyright 2026 The subq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subq {

/// Dense vertex identifier. All on-device values (ids and offsets) are 32-bit.
using VertexId = std::uint32_t;
using Offset = std::uint32_t;
/// Vertex identifier as it appears in an input file, before dense remapping.
using RawId = std::uint64_t;

enum class Direction : std::uint8_t { Out, In };

inline const char* to_string(Direction d) { return d == Direction::Out ? "out" : "in"; }

/// Memory arrays a request can address.
enum class ArrayId : std::uint8_t { NeighborsOut, NeighborsIn, PointersOut, PointersIn, Other };

inline ArrayId neighbors_array(Direction d) {
  return d == Direction::Out ? ArrayId::NeighborsOut : ArrayId::NeighborsIn;
}
inline ArrayId pointers_array(Direction d) {
  return d == Direction::Out ? ArrayId::PointersOut : ArrayId::PointersIn;
}

/// Reference to a contiguous, strictly ascending slice of one memory array.
struct SetRef {
  ArrayId array = ArrayId::Other;
  Offset left = 0;
  Offset size = 0;

  friend bool operator==(const SetRef&, const SetRef&) = default;
};

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or binary input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Invalid query graph, vertex ordering or plan.
class QueryError : public Error {
 public:
  using Error::Error;
};

/// Invalid run-time configuration (fan-in, level capacity, line width, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition (unsorted set, vertex out of range).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace subq
