#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "beflow/cache.hpp"
#include "beflow/generate.hpp"
#include "beflow/json_io.hpp"
#include "beflow/svg.hpp"
#include "helpers.hpp"

using namespace beflow;
using namespace beflow::testing;

TEST_CASE("flow witness round trip and re-verification") {
  auto g = petersen();
  FlowPoint p(Rat(5), Rat(0));
  auto res = check_flow(g, p);
  auto* fa = std::get_if<FlowAssignment>(&res);
  REQUIRE(fa);
  Json j = flow_witness_to_json(g, *fa, p);
  CHECK(j["kind"] == "flow_witness");
  CHECK(j["r"] == "5");
  CHECK(verify_certificate_json(j).empty());

  // corrupt one value: the verifier must reject
  Json broken = j;
  broken["values"][0] = "9999";
  CHECK_FALSE(verify_certificate_json(broken).empty());
}

TEST_CASE("weak5 certificate re-verifies") {
  auto g = petersen();
  auto cert = construct_orientable_5weak(g);
  Json j = weak5_certificate_to_json(g, cert);
  CHECK(j["kind"] == "weak5_certificate");
  CHECK(j["fallback"] == false);
  CHECK(verify_certificate_json(j).empty());

  Json broken = j;
  broken["colors"][0] = broken["colors"][0] == 1 ? 2 : 1;
  CHECK_FALSE(verify_certificate_json(broken).empty());
}

TEST_CASE("region JSON carries exact rationals") {
  auto reg = bed_of_graph(theta());
  Json j = region_to_json(reg);
  CHECK(j["frontier"].size() == 2);
  CHECK(j["frontier"][0]["r"] == "2");
  CHECK(j["frontier"][0]["alpha"] == "1");
  CHECK(j["frontier"][1]["r"] == "3");
  CHECK(j["frontier"][1]["alpha"] == "0");
  CHECK(j["alpha_min"] == "0");
  CHECK(j["r_min"] == "3");
  CHECK(j["window"]["r"][0] == "2");
  CHECK(j["window"]["r"][1] == "8");
}

TEST_CASE("determinism: identical input gives byte-identical JSON") {
  auto g = petersen();
  auto r1 = region_to_json(bed_of_graph(g)).dump();
  auto r2 = region_to_json(bed_of_graph(g)).dump();
  CHECK(r1 == r2);
  auto c1 = weak5_certificate_to_json(g, construct_orientable_5weak(g)).dump();
  auto c2 = weak5_certificate_to_json(g, construct_orientable_5weak(g)).dump();
  CHECK(c1 == c2);
}

TEST_CASE("svg emitter draws the frontier") {
  auto reg = bed_of_graph(k4());
  std::vector<SvgOverlay> ovs{{named_region(NamedRegion::Kind::Mk, 5), "M5"},
                              {named_urd(FlowPoint(Rat(7, 2), Rat(1, 2))), "urd"}};
  std::string svg = region_to_svg(reg, ovs);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("M5") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("result cache persists and reloads") {
  std::string path = "cache_test.jsonl";
  std::remove(path.c_str());
  {
    ResultCache cache(path);
    CHECK_FALSE(cache.lookup("abc", "hunt", "bl3").has_value());
    cache.store("abc", "hunt", "bl3", {"holds", ResultCache::digest("payload")});
    auto hit = cache.lookup("abc", "hunt", "bl3");
    REQUIRE(hit.has_value());
    CHECK(hit->verdict == "holds");
  }
  {
    ResultCache cache(path);
    auto hit = cache.lookup("abc", "hunt", "bl3");
    REQUIRE(hit.has_value());
    CHECK(hit->verdict == "holds");
    CHECK(hit->digest == ResultCache::digest("payload"));
    CHECK_FALSE(cache.lookup("abc", "hunt", "simple414").has_value());
  }
  std::remove(path.c_str());
}

TEST_CASE("cache coherence on a re-run sample") {
  // every 20th corpus entry is recomputed fresh and compared to the stored
  // verdict
  std::string path = "cache_coherence.jsonl";
  std::remove(path.c_str());
  auto corpus = [] {
    std::vector<beflow::CubicMultigraph> out;
    for (int n = 4; n <= 8; n += 2)
      for (auto& g : beflow::generate_cubic(n, false)) out.push_back(std::move(g));
    return out;
  }();
  {
    ResultCache cache(path);
    auto recs = hunt(corpus, Conjecture::bl3);
    for (size_t i = 0; i < corpus.size(); ++i)
      cache.store(recs[i].canonical, "hunt", "bl3", {recs[i].verdict, ""});
  }
  ResultCache cache(path);
  for (size_t i = 0; i < corpus.size(); i += 20) {
    auto fresh = hunt({corpus[i]}, Conjecture::bl3);
    auto hit = cache.lookup(fresh[0].canonical, "hunt", "bl3");
    REQUIRE(hit.has_value());
    CHECK(hit->verdict == fresh[0].verdict);
  }
  std::remove(path.c_str());
}

TEST_CASE("graph json round trip") {
  auto g = dumbbell();
  auto j = graph_to_json(g);
  auto back = graph_from_json(j);
  CHECK(back.n() == g.n());
  CHECK(back.edge_count() == g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(back.edge(e).u == g.edge(e).u);
    CHECK(back.edge(e).v == g.edge(e).v);
  }
}
