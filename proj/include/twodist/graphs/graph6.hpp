#pragma once

#include <string>
#include <string_view>

#include "twodist/errors.hpp"
#include "twodist/graphs/graph.hpp"

namespace twodist {

// graph6, short form only: one header byte 63+n (n <= 62), then the upper
// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
// byte, most significant bit first, each byte offset by 63 and the last one
// zero-padded.

inline constexpr int kGraph6MaxOrder = 62;

inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of the printable range 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6MaxOrder) throw Graph6Error("graph6 long form (n > 62) is not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw Graph6Error("graph6 bit field is truncated");
  if (text.size() - 1 > bytes) throw Graph6Error("graph6 string has trailing bytes");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw Graph6Error("graph6 padding bits must be zero");
  }
  return g;
}

/// Encodes with the vertex labelling as given; no canonicalization.
inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw Graph6Error("graph6 short form supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace twodist
