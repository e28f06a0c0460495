#include "qmain/graph6.hpp"

namespace qmain {
namespace {

constexpr std::string_view kPrefix = ">>graph6<<";
constexpr long kMaxOrder = 258047;

void encode_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  out.push_back(126);
  out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
  out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
  out.push_back(static_cast<char>((n & 63) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw GraphError("graph too large for graph6");
  std::string out;
  encode_order(out, n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kPrefix.size()) == kPrefix) base = kPrefix.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.size() <= base) throw ParseError("empty graph6 string", base);

  for (std::size_t i = base; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", i);
  }

  std::size_t pos = base;
  long n = static_cast<unsigned char>(text[pos]) - 63;
  if (n == 63) {
    if (text.size() < pos + 4) throw ParseError("truncated extended length", pos);
    if (text[pos + 1] == 126) throw ParseError("8-byte length form not supported", pos + 1);
    n = 0;
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (static_cast<unsigned char>(text[pos + k]) - 63);
    if (n <= 62) throw ParseError("non-minimal extended length", pos);
    pos += 4;
  } else {
    pos += 1;
  }
  if (n > kMaxOrder) throw ParseError("order too large", base);

  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != need) {
    const std::size_t at = static_cast<long long>(text.size() - pos) < need
                               ? text.size()
                               : pos + static_cast<std::size_t>(need);
    throw ParseError("expected " + std::to_string(need) + " data bytes", at);
  }

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[pos + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (need > 0 && bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[pos + need - 1]) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("nonzero padding bits", pos + need - 1);
  }
  return g;
}

}  // namespace qmain
