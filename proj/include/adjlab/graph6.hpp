#pragma once

#include <string>

#include "adjlab/graph.hpp"

namespace adjlab {

// graph6 text codec.  Header byte is 63+n for n <= 62, else 126 followed by
// three 6-bit digits of n; adjacency bits walk the upper triangle in column
// order (a01, a02, a12, a03, ...), packed big-endian six to a byte, each
// byte offset by 63.

inline std::string write_graph6(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(char(63 + g.n));
  } else if (g.n <= 258047) {
    out.push_back(char(126));
    out.push_back(char(63 + ((g.n >> 12) & 63)));
    out.push_back(char(63 + ((g.n >> 6) & 63)));
    out.push_back(char(63 + (g.n & 63)));
  } else {
    throw InvalidInput("graph too large for graph6 writer", 0);
  }
  int bits = 0, acc = 0;
  for (int col = 1; col < g.n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(char(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits) out.push_back(char(63 + (acc << (6 - bits))));
  return out;
}

inline Graph read_graph6(const std::string& line) {
  std::size_t pos = 0;
  // Optional format marker emitted by some producers.
  const std::string marker = ">>graph6<<";
  if (line.rfind(marker, 0) == 0) pos = marker.size();
  if (pos >= line.size()) throw InvalidInput("empty graph6 line", pos);

  auto digit = [&](std::size_t at) {
    unsigned char c = line[at];
    if (c < 63 || c > 126) throw InvalidInput("graph6 byte out of range", at);
    return int(c - 63);
  };

  long long n;
  if (digit(pos) == 63) {  // 126 - 63
    if (pos + 3 >= line.size())
      throw InvalidInput("truncated graph6 size field", pos);
    n = (static_cast<long long>(digit(pos + 1)) << 12) |
        (digit(pos + 2) << 6) | digit(pos + 3);
    pos += 4;
  } else {
    n = digit(pos);
    pos += 1;
  }

  Graph g{static_cast<int>(n)};
  long long need = n * (n - 1) / 2;
  long long seen = 0;
  int row = 0, col = 1;
  while (seen < need) {
    if (pos >= line.size())
      throw InvalidInput("truncated graph6 adjacency data", pos);
    int group = digit(pos++);
    for (int b = 5; b >= 0 && seen < need; --b, ++seen) {
      if ((group >> b) & 1) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
    // Padding bits below the last consumed position must be zero.
    if (seen == need) {
      int pad_bits = int((6 - (need % 6)) % 6);
      if (group & ((1 << pad_bits) - 1))
        throw InvalidInput("nonzero graph6 padding", pos - 1);
    }
  }
  if (pos != line.size()) throw InvalidInput("trailing graph6 bytes", pos);
  return g;
}

}  // namespace adjlab
