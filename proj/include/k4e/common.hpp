#pragma once

// Shared basics: vertex labels, order admissibility, triangular edge
// indexing, and the library error type.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace k4e {

using Vertex = std::uint8_t;

/// True iff a (K4-e)-design of order v can exist: v = 0,1 (mod 5) and v >= 6.
inline bool admissible_order(int v) { return v >= 6 && (v % 5 == 0 || v % 5 == 1); }

/// Number of blocks b_v = v(v-1)/10 in a design of order v.
inline int block_count(int v) { return v * (v - 1) / 10; }

inline int edge_count(int v) { return v * (v - 1) / 2; }

/// Row-major triangular index of edge {x,y}, x < y; a bijection onto
/// [0, C(v,2)) that is increasing in (x,y) lexicographic order.
inline int edge_index(int v, int x, int y) {
  return x * v - x * (x + 1) / 2 + (y - x - 1);
}

inline std::pair<int, int> edge_vertices(int v, int index) {
  int x = 0;
  while (index >= v - 1 - x) {
    index -= v - 1 - x;
    ++x;
  }
  return {x, x + 1 + index};
}

enum class ErrorKind {
  InvalidBlock,
  VertexOutOfRange,
  WrongBlockCount,
  EdgeCollision,
  EdgeMissing,
  OrderMismatch,
  InadmissibleOrder,
  OrderTooLarge,
  UnsupportedOrder,
  IncompleteClassList,
  UnknownClass,
  BadInput,
  InternalCheckFailed,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int a = -1, int b = -1)
      : std::runtime_error(what), kind(kind), a(a), b(b) {}

  ErrorKind kind;
  // Optional payload: offending vertex, or the two endpoints of an edge.
  int a;
  int b;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::WrongBlockCount: return "WrongBlockCount";
    case ErrorKind::EdgeCollision: return "EdgeCollision";
    case ErrorKind::EdgeMissing: return "EdgeMissing";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::InadmissibleOrder: return "InadmissibleOrder";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::IncompleteClassList: return "IncompleteClassList";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace k4e
