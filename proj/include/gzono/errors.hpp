#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gzono {

/// Malformed graph text or an invalid graph description.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (disconnected host, invalid quad, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size limits for the exponential enumerations. The defaults target desk-scale inputs.
struct Caps {
  std::size_t max_edges = 18;              // sign-space covector search
  std::size_t max_partition_vertices = 10; // ordered-partition oracle
  std::size_t max_cycles = 1'000'000;      // simple-cycle enumeration
  int max_caterpillar_leaves = 12;
  int max_polygon_vertices = 9;

  /// Caps raised to the hard representation limits.
  static Caps unsafe() {
    Caps c;
    c.max_edges = 64;
    c.max_partition_vertices = 16;
    c.max_cycles = std::size_t{1} << 40;
    c.max_caterpillar_leaves = 32;
    c.max_polygon_vertices = 14;
    return c;
  }
};

struct EnumOptions {
  Caps caps{};
  unsigned threads = 1;
};

}  // namespace gzono
