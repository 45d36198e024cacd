#include "maxrho/graph6.hpp"

#include "maxrho/error.hpp"

namespace maxrho {

namespace {

constexpr int kBias = 63;

void encode_order(std::size_t n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) throw ParseError("graph6: byte outside [63,126]", pos);
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  if (g.has_loops()) throw InputError("graph6 cannot represent loops; use the JSON form");
  const std::size_t n = g.order();
  std::string out;
  encode_order(n, out);
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) base = kHeader.size();
  if (text.size() == base) throw ParseError("graph6: empty input", base);
  if (text[base] == ':' || text[base] == '&') throw ParseError("graph6: sparse6/digraph6 input", base);
  for (std::size_t k = base; k < text.size(); ++k) sextet(text, k);

  std::size_t pos = base;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[base]) != 126) {
    n = static_cast<std::size_t>(sextet(text, base));
    pos = base + 1;
  } else if (text.size() > base + 1 && static_cast<unsigned char>(text[base + 1]) == 126) {
    for (std::size_t k = base + 2; k < base + 8; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text, k));
    pos = base + 8;
  } else {
    for (std::size_t k = base + 1; k < base + 4; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text, k));
    pos = base + 4;
  }
  if (n < 1 || n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " unsupported", base);

  const std::size_t nbits = n * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < pos + nbytes) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() > pos + nbytes) throw ParseError("graph6: trailing bytes", pos + nbytes);

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int s = sextet(text, pos + bit / 6);
      if ((s >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  if (nbits % 6 != 0) {
    const std::size_t last = pos + nbytes - 1;
    const int pad = 6 - static_cast<int>(nbits % 6);
    if (sextet(text, last) & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", last);
  }
  return std::move(b).build();
}

}  // namespace maxrho
