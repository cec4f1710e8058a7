#include "sfc/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sfc/error.hpp"

namespace sfc {
namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

long long to_int(std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

EdgeList parse_edge_list(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.size() < 2) throw Error(ErrorKind::ParseError, "missing \"n m\" header");
  long long n = to_int(tokens[0]);
  long long m = to_int(tokens[1]);
  if (n < 1 || n > 100'000'000) throw Error(ErrorKind::ParseError, "vertex count out of range: " + std::to_string(n));
  if (m < 0) throw Error(ErrorKind::ParseError, "negative edge count");
  if (tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw Error(ErrorKind::ParseError, "header announces " + std::to_string(m) + " edges but found " +
                                           std::to_string((tokens.size() - 2) / 2.0) + " pairs");
  }
  EdgeList out;
  out.n = static_cast<int>(n);
  out.edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = to_int(tokens[2 + 2 * i]);
    long long v = to_int(tokens[3 + 2 * i]);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::ParseError,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    }
    if (u > v) std::swap(u, v);
    out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

std::string format_edge_list(int n, const std::vector<Edge>& edges, bool single_line) {
  std::ostringstream os;
  os << n << ' ' << edges.size();
  for (auto [u, v] : edges) {
    if (single_line) {
      os << "  " << u << ' ' << v;
    } else {
      os << '\n' << u << ' ' << v;
    }
  }
  os << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sfc
