#include "beflow/graph.hpp"

#include <algorithm>
#include <sstream>

namespace beflow {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

CubicMultigraph::CubicMultigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ <= 0) throw MalformedInput("vertex count must be positive");
  std::vector<int> deg(n_, 0);
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw MalformedInput("edge endpoint out of range");
    if (e.u == e.v) throw LoopEdge("loop at vertex " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < n_; ++v)
    if (deg[v] != 3)
      throw NotCubic("vertex " + std::to_string(v) + " has degree " +
                     std::to_string(deg[v]));
  // Unreachable when all degrees are 3, kept as a guard for the invariant.
  if (n_ % 2 != 0) throw OddVertexCount("odd vertex count " + std::to_string(n_));
  incident_.assign(n_, {-1, -1, -1});
  std::vector<int> fill(n_, 0);
  for (int e = 0; e < edge_count(); ++e) {
    incident_[edges_[e].u][fill[edges_[e].u]++] = e;
    incident_[edges_[e].v][fill[edges_[e].v]++] = e;
  }
}

int CubicMultigraph::multiplicity(int u, int v) const {
  int m = 0;
  for (int e : incident_[u])
    if (other_end(e, u) == v) ++m;
  return m;
}

bool CubicMultigraph::is_simple() const {
  for (const Edge& e : edges_)
    if (multiplicity(e.u, e.v) > 1) return false;
  return true;
}

std::vector<int> CubicMultigraph::components() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : incident_[v]) {
        int w = other_end(e, v);
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

int CubicMultigraph::component_count() const {
  auto comp = components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool CubicMultigraph::is_connected() const { return component_count() <= 1; }

CubicMultigraph CubicMultigraph::parse_cub(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> data;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) data.push_back(line);
  }
  if (data.empty()) throw MalformedInput("empty input");
  auto parse_ints = [](const std::string& s, int want) {
    std::istringstream ls(s);
    std::vector<int> out;
    long x;
    while (ls >> x) out.push_back(static_cast<int>(x));
    if (!ls.eof() || static_cast<int>(out.size()) != want)
      throw MalformedInput("bad line: '" + s + "'");
    return out;
  };
  auto header = parse_ints(data[0], 2);
  int n = header[0], m = header[1];
  if (m < 0 || static_cast<int>(data.size()) != m + 1)
    throw MalformedInput("expected " + std::to_string(m) + " edge lines");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    auto uv = parse_ints(data[i + 1], 2);
    edges.push_back({uv[0], uv[1]});
  }
  return CubicMultigraph(n, std::move(edges));
}

std::string CubicMultigraph::to_cub() const {
  std::ostringstream out;
  out << n_ << ' ' << edge_count() << '\n';
  for (const Edge& e : edges_) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

CubicMultigraph CubicMultigraph::from_graph6(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw MalformedInput("empty graph6 line");
  size_t pos = 0;
  auto byte = [&](size_t i) -> int {
    if (i >= s.size()) throw MalformedInput("truncated graph6");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw MalformedInput("graph6 byte out of range");
    return c - 63;
  };
  long n;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    if (s.size() >= 8 && byte(1) == 63)
      throw MalformedInput("graph6 order too large");
    n = (long(byte(1)) << 12) | (long(byte(2)) << 6) | byte(3);
    pos = 4;
  }
  if (n < 1 || n > 62 * 62) throw MalformedInput("bad graph6 order");
  std::vector<Edge> edges;
  int bit = 0, cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit == 0) {
        cur = byte(pos++);
        bit = 6;
      }
      --bit;
      if ((cur >> bit) & 1) edges.push_back({i, j});
    }
  }
  if (pos != s.size()) throw MalformedInput("trailing graph6 data");
  return CubicMultigraph(static_cast<int>(n), std::move(edges));
}

int cut_degree(const CubicMultigraph& g, const VertexSet& a) {
  int d = 0;
  for (const Edge& e : g.edges())
    if (a.contains(e.u) != a.contains(e.v)) ++d;
  return d;
}

namespace {

// Lowpoint DFS over edge ids so parallel edges are handled: only the edge
// actually used to reach a vertex is skipped on the way back.
struct BridgeDfs {
  const CubicMultigraph& g;
  std::vector<int> disc, low;
  std::vector<int> out;
  int timer = 0;

  explicit BridgeDfs(const CubicMultigraph& gg)
      : g(gg), disc(gg.n(), -1), low(gg.n(), 0) {}

  void run(int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (int e : g.incident(v)) {
      if (e == parent_edge) continue;
      int w = g.other_end(e, v);
      if (disc[w] == -1) {
        run(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<int> bridges(const CubicMultigraph& g) {
  BridgeDfs dfs(g);
  for (int v = 0; v < g.n(); ++v)
    if (dfs.disc[v] == -1) dfs.run(v, -1);
  std::sort(dfs.out.begin(), dfs.out.end());
  return dfs.out;
}

namespace {

bool match_rest(const CubicMultigraph& g, uint64_t matched) {
  int v = -1;
  for (int i = 0; i < g.n(); ++i)
    if (!((matched >> i) & 1)) {
      v = i;
      break;
    }
  if (v == -1) return true;
  for (int e : g.incident(v)) {
    int w = g.other_end(e, v);
    if ((matched >> w) & 1) continue;
    if (match_rest(g, matched | (uint64_t(1) << v) | (uint64_t(1) << w)))
      return true;
  }
  return false;
}

}  // namespace

bool has_perfect_matching(const CubicMultigraph& g) {
  return match_rest(g, 0);
}

}  // namespace beflow
