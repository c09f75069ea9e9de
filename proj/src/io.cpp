#include "fbrooks/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace fbrooks {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = 65535;

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
  return true;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  put_order(out, n);
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text, std::size_t line) {
  text = trim_line_end(text);
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", line, base);
  if (text[0] == ':' || text[0] == ';')
    throw ParseError("sparse6 input is not supported", line, base);
  if (text[0] == '&')
    throw ParseError("digraph6 input is not supported", line, base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("byte outside the graph6 range 63..126", line, base + i);
  }
  auto val = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("truncated order field", line, base + text.size());
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    if (n <= 62) throw ParseError("non-canonical order field", line, base);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated order field", line, base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    if (n <= 258047) throw ParseError("non-canonical order field", line, base);
    pos = 8;
  }
  if (n > kMaxOrder) throw ParseError("graph order too large", line, base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw ParseError("truncated adjacency data", line, base + text.size());
  if (text.size() - pos > bytes)
    throw ParseError("trailing bytes after adjacency data", line, base + pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  if (bits % 6 != 0) {
    std::uint64_t last = val(pos + bytes - 1);
    std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (last & pad_mask)
      throw ParseError("nonzero padding bits", line, base + pos + bytes - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

void read_graph6_stream(
    std::istream& in,
    const std::function<void(const Graph&, const std::string&, std::size_t)>& on_graph,
    const std::function<void(const ParseError&, const std::string&)>& on_error) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (is_blank(text)) continue;
    Graph g;
    try {
      g = from_graph6(text, line);
    } catch (const ParseError& e) {
      if (!on_error) throw;
      on_error(e, text);
      continue;
    }
    on_graph(g, text, line);
  }
}

std::string to_edge_list(const Graph& g, std::string_view header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) {
    std::istringstream lines{std::string(header_comment)};
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

// Reads whitespace-separated non-negative integers from one line.
std::vector<long long> integers(std::string_view s, std::size_t line) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() || v < 0) throw ParseError("expected a non-negative integer", line, i);
    std::size_t next = static_cast<std::size_t>(p - s.data());
    if (next < s.size() && s[next] != ' ' && s[next] != '\t' && s[next] != '\r')
      throw ParseError("unexpected character", line, next);
    out.push_back(v);
    i = next;
  }
  return out;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string l;
  std::size_t line = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, l)) {
    ++line;
    if (is_blank(l) || l[0] == '#') continue;
    auto nums = integers(l, line);
    if (nums.size() != 2) throw ParseError("expected two integers", line, 0);
    if (n < 0) {
      n = nums[0];
      m = nums[1];
      if (n > static_cast<long long>(kMaxOrder))
        throw ParseError("graph order too large", line, 0);
      continue;
    }
    if (nums[0] >= n || nums[1] >= n) throw ParseError("vertex id out of range", line, 0);
    if (nums[0] == nums[1]) throw ParseError("self-loop", line, 0);
    Edge e{static_cast<Vertex>(std::min(nums[0], nums[1])),
           static_cast<Vertex>(std::max(nums[0], nums[1]))};
    if (!seen.insert(e).second) throw ParseError("repeated edge", line, 0);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing \"n m\" header", line + 1, 0);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("edge count does not match header", line + 1, 0);
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string l;
  std::size_t line = 0;
  while (std::getline(in, l)) {
    ++line;
    if (is_blank(l) || l[0] == '#') continue;
    if (!l.empty() && l.back() == '\r') l.pop_back();
    if (l.find_first_of(" \t") != std::string::npos) return from_edge_list(text);
    return from_graph6(l, line);
  }
  throw ParseError("no graph found", line + 1, 0);
}

}  // namespace fbrooks
