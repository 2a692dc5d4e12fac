#pragma once

// Permutations on {0..v-1} stored as image arrays, plus cycle-notation
// parsing and formatting. Cycle strings omit fixed points; "()" (or any
// string of singleton cycles such as "(1)") denotes the identity.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "k4e/common.hpp"

namespace k4e {

struct Permutation {
  std::vector<Vertex> image;  // image[i] = pi(i)

  int order() const { return static_cast<int>(image.size()); }
  Vertex operator()(int i) const { return image[i]; }

  static Permutation identity(int v) {
    Permutation p;
    p.image.resize(v);
    for (int i = 0; i < v; ++i) p.image[i] = static_cast<Vertex>(i);
    return p;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline Permutation make_permutation(const std::vector<int>& images) {
  const int v = static_cast<int>(images.size());
  std::vector<char> seen(v, 0);
  Permutation p;
  p.image.reserve(v);
  for (int x : images) {
    if (x < 0 || x >= v || seen[x])
      throw Error(ErrorKind::BadInput, "image array is not a bijection");
    seen[x] = 1;
    p.image.push_back(static_cast<Vertex>(x));
  }
  return p;
}

/// compose(p, q)(x) = p(q(x)): apply q first, then p.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.order() != q.order())
    throw Error(ErrorKind::OrderMismatch, "composing permutations of different orders");
  Permutation r;
  r.image.resize(p.order());
  for (int i = 0; i < p.order(); ++i) r.image[i] = p.image[q.image[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  r.image.resize(p.order());
  for (int i = 0; i < p.order(); ++i) r.image[p.image[i]] = static_cast<Vertex>(i);
  return r;
}

/// Parses cycle notation like "(1 2)(3 4)"; omitted labels are fixed points.
inline Permutation parse_cycles(const std::string& text, int v) {
  Permutation p = Permutation::identity(v);
  std::vector<int> cycle;
  std::vector<char> seen(v, 0);
  std::size_t i = 0;
  auto apply_cycle = [&]() {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      p.image[from] = static_cast<Vertex>(to);
    }
    cycle.clear();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '(') {
      ++i;
      cycle.clear();
      while (i < text.size() && text[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw Error(ErrorKind::BadInput, "unexpected character in cycle string");
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          ++i;
        }
        if (value < 0 || value >= v)
          throw Error(ErrorKind::BadInput, "cycle entry out of range", value);
        if (seen[value])
          throw Error(ErrorKind::BadInput, "label repeated across cycles", value);
        seen[value] = 1;
        cycle.push_back(value);
      }
      if (i >= text.size())
        throw Error(ErrorKind::BadInput, "unterminated cycle");
      ++i;  // ')'
      if (cycle.size() >= 2) apply_cycle();
      cycle.clear();
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      throw Error(ErrorKind::BadInput, "unexpected character outside cycles");
    }
  }
  return p;
}

/// Formats in cycle notation: cycles sorted by least element, least element
/// first in each cycle, fixed points omitted, identity printed as "()".
inline std::string cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> done(p.order(), 0);
  bool any = false;
  for (int start = 0; start < p.order(); ++start) {
    if (done[start] || p.image[start] == start) continue;
    any = true;
    out << '(' << start;
    done[start] = 1;
    for (int x = p.image[start]; x != start; x = p.image[x]) {
      out << ' ' << x;
      done[x] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace k4e
