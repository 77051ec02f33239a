#include "sgspec/sg_format.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace sgspec {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return x;
}

}  // namespace

SignedGraph parse_sg(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<SignedEdge> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok.size() != 3 || tok[0] != "sg") {
        throw ParseError(line_no, "expected header 'sg <n> <m>'");
      }
      n = parse_int(tok[1], line_no, "vertex count");
      m = parse_int(tok[2], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      if (n > 1'000'000) throw ParseError(line_no, "vertex count too large");
      if (m > n * (n - 1) / 2) throw ParseError(line_no, "more edges than a simple graph allows");
      have_header = true;
      continue;
    }

    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "content after the declared " + std::to_string(m) + " edges");
    }
    if (tok.size() != 3) throw ParseError(line_no, "expected '<u> <v> <+1|-1>'");
    const long long u = parse_int(tok[0], line_no, "vertex");
    const long long v = parse_int(tok[1], line_no, "vertex");
    Sign sign;
    if (tok[2] == "+1") {
      sign = Sign::positive;
    } else if (tok[2] == "-1") {
      sign = Sign::negative;
    } else {
      throw ParseError(line_no, "sign must be +1 or -1, got '" + std::string(tok[2]) + "'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), sign});
  }

  if (!have_header) throw ParseError(line_no + 1, "missing header 'sg <n> <m>'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  return SignedGraph::from_edges(static_cast<int>(n), edges);
}

SignedGraph parse_sg(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_sg(in);
}

SignedGraph read_sg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return parse_sg(in);
}

std::string write_sg(const SignedGraph& g) {
  std::string out = "sg " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += e.sign == Sign::positive ? " +1\n" : " -1\n";
  }
  return out;
}

void write_sg_file(const std::filesystem::path& path, const SignedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParams, "cannot write " + path.string());
  out << write_sg(g);
}

}  // namespace sgspec
