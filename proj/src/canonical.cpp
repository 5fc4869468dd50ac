#include "beflow/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace beflow {

namespace {

// Multiplicity matrix, flattened.
struct MultMatrix {
  int n;
  std::vector<int> m;  // n*n entries

  explicit MultMatrix(const CubicMultigraph& g) : n(g.n()), m(g.n() * g.n(), 0) {
    for (const Edge& e : g.edges()) {
      ++m[e.u * n + e.v];
      ++m[e.v * n + e.u];
    }
  }
  int at(int i, int j) const { return m[i * n + j]; }

  // Upper-triangular string under the labeling perm (perm[new] = old).
  std::string encode(const std::vector<int>& perm) const {
    std::string s;
    s.reserve(n * (n - 1) / 2 + 8);
    s += std::to_string(n);
    s += ':';
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += static_cast<char>('0' + at(perm[i], perm[j]));
    return s;
  }
};

// Ordered partition of the vertex set into cells.
using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by the multiset of edge multiplicities
// into every cell, iterating to a fixed point. Subcells are ordered by
// signature so the refined cell order is isomorphism-invariant.
Partition refine(const MultMatrix& mm, Partition p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < p.size(); ++ci) {
      if (p[ci].size() <= 1) continue;
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : p[ci]) {
        std::vector<int> sig;
        sig.reserve(p.size());
        for (const auto& cell : p) {
          int s = 0;
          for (int w : cell) s += mm.at(v, w);
          sig.push_back(s);
        }
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) {
        Partition np;
        np.reserve(p.size() + groups.size());
        for (size_t cj = 0; cj < p.size(); ++cj) {
          if (cj == ci) {
            for (auto& [sig, cell] : groups) np.push_back(cell);
          } else {
            np.push_back(p[cj]);
          }
        }
        p = std::move(np);
        changed = true;
        break;
      }
    }
  }
  return p;
}

void canon_search(const MultMatrix& mm, const Partition& p, std::string& best) {
  // Discrete partition: read off the labeling.
  bool discrete = true;
  for (const auto& cell : p)
    if (cell.size() > 1) {
      discrete = false;
      break;
    }
  if (discrete) {
    std::vector<int> perm(mm.n);
    for (int i = 0; i < mm.n; ++i) perm[i] = p[i][0];
    std::string s = mm.encode(perm);
    if (best.empty() || s < best) best = std::move(s);
    return;
  }
  // Individualize each vertex of the first non-singleton cell.
  size_t ti = 0;
  while (p[ti].size() == 1) ++ti;
  for (int v : p[ti]) {
    Partition q;
    q.reserve(p.size() + 1);
    for (size_t cj = 0; cj < p.size(); ++cj) {
      if (cj == ti) {
        q.push_back({v});
        std::vector<int> rest;
        for (int w : p[cj])
          if (w != v) rest.push_back(w);
        q.push_back(std::move(rest));
      } else {
        q.push_back(p[cj]);
      }
    }
    canon_search(mm, refine(mm, q), best);
  }
}

}  // namespace

std::string canonical_form(const CubicMultigraph& g) {
  MultMatrix mm(g);
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  std::string best;
  canon_search(mm, refine(mm, {all}), best);
  return best;
}

std::string canonical_form_brute(const CubicMultigraph& g) {
  MultMatrix mm(g);
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = mm.encode(perm);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const CubicMultigraph& a, const CubicMultigraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace beflow
