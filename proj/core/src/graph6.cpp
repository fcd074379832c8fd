#include "lct/graph6.hpp"

#include <vector>

#include "lct/errors.hpp"

namespace lct {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.empty()) throw ParseError("malformed header: empty input", base);
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw ParseError("malformed header: multi-byte size form not supported (n > 62)", base);
  if (head < 63 || head > 125) throw ParseError("malformed header: invalid size byte", base);
  const int n = head - 63;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int ch = static_cast<unsigned char>(body[i]);
    if (ch < 63 || ch > 126) throw ParseError("character out of range", base + 1 + i);
  }
  if (body.size() < need) throw ParseError("truncated bit stream", base + 1 + body.size());
  if (body.size() > need) throw ParseError("trailing data after bit stream", base + 1 + need);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = static_cast<unsigned char>(body[k / 6]) - 63;
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw CapExceeded("graph6 single-byte size form holds at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

}  // namespace lct
