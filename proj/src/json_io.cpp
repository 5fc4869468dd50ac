#include "beflow/json_io.hpp"

namespace beflow {

Json graph_to_json(const CubicMultigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.n()}, {"edges", edges}};
}

CubicMultigraph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return CubicMultigraph(j.at("n").get<int>(), std::move(edges));
}

static Json orientation_to_json(const CubicMultigraph& g, const Orientation& o) {
  Json arcs = Json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    arcs.push_back({o.tail(g, e), o.head(g, e)});
  return arcs;
}

static Orientation orientation_from_json(const CubicMultigraph& g,
                                         const Json& arcs) {
  Orientation o;
  o.flipped.assign(g.edge_count(), false);
  if (static_cast<int>(arcs.size()) != g.edge_count())
    throw MalformedInput("orientation arc count mismatch");
  for (int e = 0; e < g.edge_count(); ++e) {
    int tail = arcs[e].at(0).get<int>(), head = arcs[e].at(1).get<int>();
    const Edge& ge = g.edge(e);
    if (tail == ge.u && head == ge.v)
      o.flipped[e] = false;
    else if (tail == ge.v && head == ge.u)
      o.flipped[e] = true;
    else
      throw MalformedInput("orientation arc does not match edge " +
                           std::to_string(e));
  }
  return o;
}

Json flow_witness_to_json(const CubicMultigraph& g, const FlowAssignment& fa,
                          const FlowPoint& p) {
  Json values = Json::array();
  for (const Rat& v : fa.value) values.push_back(v.str());
  auto rep = verify_flow(g, fa, p);
  Json excess = Json::array();
  for (const Rat& x : rep.excess) excess.push_back(x.str());
  return Json{{"kind", "flow_witness"},
              {"graph", graph_to_json(g)},
              {"r", p.r.str()},
              {"alpha", p.alpha.str()},
              {"orientation", orientation_to_json(g, fa.orientation)},
              {"values", values},
              {"excess", excess}};
}

Json infeasible_to_json(const CubicMultigraph& g, const Infeasible& inf,
                        const FlowPoint& p) {
  Json per = Json::array();
  for (const CutViolation& cv : inf.per_bisection) {
    Json colors = Json::array();
    for (uint8_t c : cv.bisection.color) colors.push_back(int(c));
    per.push_back(Json{{"bisection", colors},
                       {"violating_set", cv.set.to_vector()},
                       {"alpha_lower_bound", cv.bound.str()}});
  }
  return Json{{"kind", "infeasible"},
              {"graph", graph_to_json(g)},
              {"r", p.r.str()},
              {"alpha", p.alpha.str()},
              {"per_bisection", per}};
}

Json region_to_json(const FlowRegion& reg) {
  Json frontier = Json::array();
  for (const FrontierPoint& fp : reg.frontier) {
    Json entry{{"r", fp.r.str()}, {"alpha", fp.alpha.str()}};
    if (fp.witness) {
      Json colors = Json::array();
      for (uint8_t c : fp.witness->color) colors.push_back(int(c));
      entry["witness_bisection"] = colors;
    } else {
      entry["witness_bisection"] = nullptr;
    }
    Json binding = Json::array();
    for (const VertexSet& vs : fp.binding) binding.push_back(vs.to_vector());
    entry["binding_sets"] = binding;
    frontier.push_back(std::move(entry));
  }
  return Json{
      {"window",
       {{"r", {reg.window.r_lo.str(), reg.window.r_hi.str()}},
        {"alpha", {reg.window.alpha_lo.str(), reg.window.alpha_hi.str()}}}},
      {"frontier", frontier},
      {"alpha_min", reg.alpha_min.str()},
      {"r_min", reg.r_min.str()}};
}

Json weak5_certificate_to_json(const CubicMultigraph& g,
                               const Weak5Certificate& cert) {
  Json colors = Json::array();
  for (uint8_t c : cert.bisection.color) colors.push_back(int(c));
  Json values = Json::array();
  for (const Rat& v : cert.flow_values) values.push_back(v.str());
  Json factors = Json::array();
  for (const FactorDecomposition& f : cert.factors) {
    Json comps = Json::array();
    for (const FactorComponent& c : f.comps) {
      const char* kind = c.kind == CompKind::Path        ? "path"
                         : c.kind == CompKind::EvenCycle ? "even_cycle"
                                                         : "odd_cycle";
      comps.push_back(Json{{"kind", kind},
                           {"vertices", c.vertices},
                           {"edges", c.edges}});
    }
    factors.push_back(
        Json{{"components", comps}, {"critical_edges", f.critical_edges}});
  }
  Json skeletals = Json::array();
  for (const SkeletalStructure& s : cert.skeletals)
    skeletals.push_back(Json{{"tree_edges", s.tree_edges},
                             {"removed_even", s.removed_even},
                             {"kept_edges", s.kept_edges},
                             {"pes_components", s.pes_comps}});
  return Json{{"kind", "weak5_certificate"},
              {"graph", graph_to_json(g)},
              {"colors", colors},
              {"orientation", orientation_to_json(g, cert.orientation)},
              {"flow_r", "7/2"},
              {"flow_alpha", "1/2"},
              {"flow_values", values},
              {"fallback", cert.used_fallback},
              {"factors", factors},
              {"skeletals", skeletals}};
}

Json hunt_record_to_json(const HuntRecord& rec) {
  Json j{{"n", rec.n},
         {"canonical", rec.canonical},
         {"verdict", rec.verdict},
         {"detail", rec.detail}};
  if (rec.witness) {
    Json colors = Json::array();
    for (uint8_t c : rec.witness->color) colors.push_back(int(c));
    j["witness_bisection"] = colors;
  }
  return j;
}

std::string verify_certificate_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "flow_witness") {
    CubicMultigraph g = graph_from_json(j.at("graph"));
    FlowPoint p(Rat::parse(j.at("r").get<std::string>()),
                Rat::parse(j.at("alpha").get<std::string>()));
    FlowAssignment fa;
    fa.orientation = orientation_from_json(g, j.at("orientation"));
    for (const auto& v : j.at("values"))
      fa.value.push_back(Rat::parse(v.get<std::string>()));
    auto rep = verify_flow(g, fa, p);
    if (!rep.ok) return "flow witness violates the exact bounds";
    return "";
  }
  if (kind == "weak5_certificate") {
    CubicMultigraph g = graph_from_json(j.at("graph"));
    Bisection bis;
    for (const auto& c : j.at("colors"))
      bis.color.push_back(static_cast<uint8_t>(c.get<int>()));
    auto [ok, rep] = is_k_weak(g, bis, 5);
    if (!ok) return "coloring is not a 5-weak bisection";
    auto cert = check_orientable(g, bis);
    if (!cert.orientable()) return "coloring is not orientable";
    FlowAssignment fa;
    fa.orientation = orientation_from_json(g, j.at("orientation"));
    for (const auto& v : j.at("flow_values"))
      fa.value.push_back(Rat::parse(v.get<std::string>()));
    FlowPoint p(Rat::parse(j.at("flow_r").get<std::string>()),
                Rat::parse(j.at("flow_alpha").get<std::string>()));
    auto frep = verify_flow(g, fa, p);
    if (!frep.ok) return "attached flow violates the exact bounds";
    return "";
  }
  return "unknown certificate kind: " + kind;
}

}  // namespace beflow
