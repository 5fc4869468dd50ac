#include "beflow/bisection.hpp"

#include <algorithm>

#include "beflow/canonical.hpp"
#include "beflow/flow.hpp"
#include "beflow/region.hpp"

namespace beflow {

std::pair<bool, MonochromaticReport> is_k_weak(const CubicMultigraph& g,
                                               const Bisection& bis, int k) {
  if (k < 3) throw BadK("k must be at least 3");
  if (static_cast<int>(bis.color.size()) != g.n())
    throw NotBisection("coloring size mismatch");
  MonochromaticReport rep;
  std::vector<int> comp(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(rep.components.size());
    comp[s] = id;
    MonoComponent mc;
    std::vector<int> stack{s};
    mc.vertices.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int w = g.other_end(e, v);
        if (bis.color[w] != bis.color[v]) continue;
        if (comp[w] == -1) {
          comp[w] = id;
          mc.vertices.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(mc.vertices.begin(), mc.vertices.end());
    rep.components.push_back(std::move(mc));
  }
  for (const Edge& e : g.edges())
    if (bis.color[e.u] == bis.color[e.v]) ++rep.components[comp[e.u]].edge_count;
  bool ok = true;
  for (size_t i = 0; i < rep.components.size(); ++i) {
    MonoComponent& mc = rep.components[i];
    mc.is_tree = mc.edge_count == static_cast<int>(mc.vertices.size()) - 1;
    if (!mc.is_tree || static_cast<int>(mc.vertices.size()) > k - 2) {
      rep.violators.push_back(static_cast<int>(i));
      ok = false;
    }
  }
  return {ok, std::move(rep)};
}

namespace {

// Union-find over the colored prefix; component sizes and an acyclicity
// flag are enough for the pruning.
struct ColorSearch {
  const CubicMultigraph& g;
  int k;
  bool orientable_required;
  std::vector<uint8_t> color;  // 0 = unassigned
  int n1 = 0, n2 = 0;
  std::optional<Bisection> found;

  ColorSearch(const CubicMultigraph& gg, int kk, bool oo)
      : g(gg), k(kk), orientable_required(oo), color(gg.n(), 0) {}

  bool component_ok(int v) {
    // BFS the monochromatic component of v among assigned vertices.
    std::vector<int> seen{v};
    std::vector<int> stack{v};
    int edges = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : g.incident(x)) {
        int w = g.other_end(e, x);
        if (color[w] != color[x]) continue;
        ++edges;
        if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
      }
    }
    edges /= 2;  // every monochromatic edge counted from both ends
    if (static_cast<int>(seen.size()) > k - 2) return false;
    return edges == static_cast<int>(seen.size()) - 1;
  }

  bool run(int v) {
    if (found) return true;
    int n = g.n();
    if (v == n) {
      Bisection bis{color};
      if (orientable_required && !check_orientable(g, bis).orientable())
        return false;
      found = bis;
      return true;
    }
    int rest = n - v;
    for (uint8_t c : {uint8_t(1), uint8_t(2)}) {
      if (v == 0 && c == 2) continue;  // fix the swap class
      int need1 = n / 2 - n1, need2 = n / 2 - n2;
      if ((c == 1 && need1 == 0) || (c == 2 && need2 == 0)) continue;
      if (need1 > rest || need2 > rest) continue;
      color[v] = c;
      (c == 1 ? n1 : n2)++;
      if (component_ok(v) && run(v + 1)) return true;
      (c == 1 ? n1 : n2)--;
      color[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Bisection> find_k_weak(const CubicMultigraph& g, int k,
                                     bool require_orientable,
                                     const SearchLimits& limits) {
  if (k < 3) throw BadK("k must be at least 3");
  if (g.n() > limits.backtrack_max_n)
    throw TooLarge("k-weak search capped at n = " +
                   std::to_string(limits.backtrack_max_n));
  ColorSearch search(g, k, require_orientable);
  search.run(0);
  return search.found;
}

Conjecture parse_conjecture(const std::string& tag) {
  if (tag == "bl3") return Conjecture::bl3;
  if (tag == "simple414") return Conjecture::simple414;
  throw UnknownConjecture("unknown conjecture tag: " + tag);
}

namespace {

const char* kPetersenCub =
    "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n"
    "6 8\n8 5\n";

const std::string& petersen_canonical() {
  static const std::string form =
      canonical_form(CubicMultigraph::parse_cub(kPetersenCub));
  return form;
}

}  // namespace

std::vector<HuntRecord> hunt(const std::vector<CubicMultigraph>& corpus,
                             Conjecture which) {
  std::vector<HuntRecord> out;
  out.reserve(corpus.size());
  for (const CubicMultigraph& g : corpus) {
    HuntRecord rec;
    rec.n = g.n();
    rec.canonical = canonical_form(g);
    if (which == Conjecture::bl3) {
      if (rec.canonical == petersen_canonical()) {
        rec.verdict = "skipped";
        rec.detail = "the Petersen graph is excluded by the conjecture";
      } else if (!has_perfect_matching(g)) {
        rec.verdict = "skipped";
        rec.detail = "no perfect matching";
      } else if (auto bis = find_k_weak(g, 4, true)) {
        rec.verdict = "holds";
        rec.detail = "orientable 4-weak bisection found";
        rec.witness = std::move(bis);
      } else {
        rec.verdict = "counterexample";
        rec.detail = "no orientable 4-weak bisection";
      }
    } else {
      if (!g.is_simple()) {
        rec.verdict = "skipped";
        rec.detail = "parallel edges; the conjecture is about simple graphs";
      } else {
        FlowPoint p(Rat(17, 4), Rat(1, 4));
        auto res = check_flow(g, p);
        if (std::holds_alternative<FlowAssignment>(res)) {
          rec.verdict = "holds";
          rec.detail = "(17/4, 1/4)-flow found";
        } else {
          rec.verdict = "counterexample";
          rec.detail = "(17/4, 1/4) not in bed";
        }
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace beflow
