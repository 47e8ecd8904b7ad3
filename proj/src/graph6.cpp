#include "detourlab/graph6.hpp"

#include <vector>

#include "detourlab/error.hpp"

namespace detourlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
  throw Error(ErrorKind::kParseError, what, offset);
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) fail("unexpected end of input", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > kBias + 63) fail("byte outside graph6 range", at);
    return c - kBias;
  };

  if (pos >= text.size()) fail("empty graph6 record", pos);
  long n = 0;
  if (text[pos] != '~') {
    n = sextet(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    // 8-byte form for n >= 258048; always beyond our cap but parsed for a precise error.
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(pos + i);
    if (n < 258048) fail("non-minimal length field", pos);
    pos += 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(pos + i);
    if (n < 63) fail("non-minimal length field", pos);
    pos += 4;
  }
  if (n > kMaxOrder) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "graph6 order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder), pos);
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) fail("truncated edge data", text.size());
  if (text.size() - pos > bytes) fail("trailing bytes after edge data", pos + bytes);

  std::vector<VertexSet> rows(static_cast<std::size_t>(order), 0);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(pos + bytes - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) fail("nonzero padding bits", pos + bytes - 1);
  }
  return Graph::from_rows(order, rows);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace detourlab
