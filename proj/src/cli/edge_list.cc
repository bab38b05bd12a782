#include "cli/edge_list.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "hopdom/error.h"

namespace hopdom::cli {

namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

bool IsSkippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Exactly two integers and nothing else.
bool ReadPair(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  std::string rest;
  return static_cast<bool>(in >> a >> b) && !(in >> rest);
}

}  // namespace

Graph ParseEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  int header_line = 0;
  std::vector<Edge> edges;
  std::map<Edge, int> seen;  // edge -> line of first occurrence

  while (std::getline(in, line)) {
    ++line_no;
    if (IsSkippable(line)) continue;
    long long a, b;
    if (!ReadPair(line, a, b)) {
      Fail(line_no, n < 0 ? "expected header \"n m\"" : "expected \"u v\"");
    }
    if (n < 0) {
      if (a < 1 || b < 0 || a > 1'000'000) Fail(line_no, "bad header values");
      n = a;
      m = b;
      header_line = line_no;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      Fail(line_no, "more edge lines than the " + std::to_string(m) + " declared");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      Fail(line_no, "vertex out of range 0.." + std::to_string(n - 1));
    }
    if (a == b) Fail(line_no, "self-loop at vertex " + std::to_string(a));
    const Edge e{static_cast<Vertex>(std::min(a, b)),
                 static_cast<Vertex>(std::max(a, b))};
    auto [it, inserted] = seen.emplace(e, line_no);
    if (!inserted) {
      Fail(line_no, "duplicate edge (first on line " +
                        std::to_string(it->second) + ")");
    }
    edges.push_back(e);
  }
  if (n < 0) Fail(line_no, "missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    Fail(line_no, "header on line " + std::to_string(header_line) + " declares " +
                      std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return BuildGraph(static_cast<int>(n), edges);
}

Graph ParseEdgeList(const std::string& text) {
  std::istringstream in(text);
  return ParseEdgeList(in);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return ParseEdgeList(in);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(g, out);
  return out.str();
}

}  // namespace hopdom::cli
