#include "zhat/plumbing.hpp"

#include "zhat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace zhat {

namespace {

std::size_t findRoot(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<std::int64_t> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const std::size_t s = weights_.size();
  if (s == 0) throw FormatError("plumbing graph needs at least one vertex");
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  std::set<Edge> seen;
  for (const auto& [i, j] : edges_) {
    if (i >= s || j >= s) throw FormatError("edge endpoint out of range");
    if (i == j) throw NotATree("self-loop at vertex " + std::to_string(i + 1));
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) {
      throw NotATree("repeated edge " + std::to_string(i + 1) + "-" + std::to_string(j + 1));
    }
    const std::size_t ri = findRoot(parent, i), rj = findRoot(parent, j);
    if (ri == rj) throw NotATree("edge " + std::to_string(i + 1) + "-" + std::to_string(j + 1) +
                                 " closes a cycle");
    parent[ri] = rj;
  }
  if (edges_.size() != s - 1) {
    throw NotATree("graph is disconnected: " + std::to_string(s) + " vertices but " +
                   std::to_string(edges_.size()) + " edges");
  }
}

std::size_t PlumbingGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [i, j] : edges_) d += (i == v) + (j == v);
  return d;
}

namespace {

std::string normalizeMinus(std::string_view line) {
  // accept U+2212 MINUS SIGN as '-'
  std::string out;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (i + 2 < line.size() && static_cast<unsigned char>(line[i]) == 0xE2 &&
        static_cast<unsigned char>(line[i + 1]) == 0x88 &&
        static_cast<unsigned char>(line[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += line[i];
    }
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::int64_t toInt64(const std::string& token, const char* what) {
  const Integer z = parseInteger(token);
  if (!z.fits_slong_p()) throw FormatError(std::string(what) + " out of range: " + token);
  return z.get_si();
}

}  // namespace

PlumbingGraph parsePlumbing(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = normalizeMinus(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    start = end + 1;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(tokens(line));
  }
  if (lines.empty()) throw FormatError("empty plumbing file");
  if (lines[0].size() != 1) throw FormatError("line 1 must hold the vertex count");
  const std::int64_t s = toInt64(lines[0][0], "vertex count");
  if (s < 1) throw FormatError("vertex count must be positive");
  if (lines.size() < 2) throw FormatError("missing weight line");
  if (lines[1].size() != static_cast<std::size_t>(s)) {
    throw FormatError("expected " + std::to_string(s) + " weights, got " +
                      std::to_string(lines[1].size()));
  }
  std::vector<std::int64_t> weights;
  for (const auto& t : lines[1]) weights.push_back(toInt64(t, "weight"));
  std::vector<PlumbingGraph::Edge> edges;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    if (lines[k].size() != 2) {
      throw FormatError("edge line must hold two vertex indices");
    }
    const std::int64_t i = toInt64(lines[k][0], "vertex index");
    const std::int64_t j = toInt64(lines[k][1], "vertex index");
    if (i < 1 || j < 1 || i > s || j > s) {
      throw FormatError("vertex index out of range 1.." + std::to_string(s));
    }
    edges.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }
  return PlumbingGraph(std::move(weights), std::move(edges));
}

std::string formatPlumbing(const PlumbingGraph& g) {
  std::ostringstream out;
  out << g.vertexCount() << '\n';
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    out << (v ? " " : "") << g.weights()[v];
  }
  out << '\n';
  for (const auto& [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

ExactMatrix linkingMatrix(const PlumbingGraph& g) {
  ExactMatrix m(g.vertexCount());
  for (std::size_t v = 0; v < g.vertexCount(); ++v) m(v, v) = static_cast<long>(g.weights()[v]);
  for (const auto& [i, j] : g.edges()) {
    m(i, j) = 1;
    m(j, i) = 1;
  }
  return m;
}

std::vector<int> degreeVector(const PlumbingGraph& g) {
  std::vector<int> deg(g.vertexCount(), 0);
  for (const auto& [i, j] : g.edges()) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

VertexDeletion deleteVertex(const PlumbingGraph& g, std::size_t v) {
  if (v >= g.vertexCount()) throw std::out_of_range("deleteVertex: no such vertex");
  const std::size_t d = g.degree(v);
  if (d != 1) {
    throw NotALeaf("vertex " + std::to_string(v + 1) + " has degree " + std::to_string(d));
  }
  VertexDeletion out;
  out.oldToNew.assign(g.vertexCount(), static_cast<std::size_t>(-1));
  std::vector<std::int64_t> weights;
  for (std::size_t u = 0; u < g.vertexCount(); ++u) {
    if (u == v) continue;
    out.oldToNew[u] = weights.size();
    weights.push_back(g.weights()[u]);
  }
  std::vector<PlumbingGraph::Edge> edges;
  for (const auto& [i, j] : g.edges()) {
    if (i == v || j == v) continue;
    edges.emplace_back(out.oldToNew[i], out.oldToNew[j]);
  }
  out.graph = PlumbingGraph(std::move(weights), std::move(edges));
  return out;
}

}  // namespace zhat
