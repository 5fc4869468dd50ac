// beflow: bounded-excess flow analysis for cubic multigraphs.
//
// Exit codes: 0 feasible / found / verified, 1 infeasible / not found,
// 2 input or internal error. Hunt findings do not fail the run; they are
// printed as FINDING records.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "beflow/cache.hpp"
#include "beflow/canonical.hpp"
#include "beflow/generate.hpp"
#include "beflow/json_io.hpp"
#include "beflow/svg.hpp"

using namespace beflow;

namespace {

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

CubicMultigraph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text = slurp(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    text = slurp(in);
  }
  bool g6 = path.size() > 3 && path.substr(path.size() - 3) == ".g6";
  if (g6) {
    auto nl = text.find('\n');
    return CubicMultigraph::from_graph6(
        nl == std::string::npos ? text : text.substr(0, nl));
  }
  return CubicMultigraph::parse_cub(text);
}

Window window_from_env() {
  Window w;
  if (const char* rmax = std::getenv("BEFLOW_RMAX")) w.r_hi = Rat::parse(rmax);
  if (w.r_hi <= w.r_lo)
    throw MalformedInput("window needs r_max > 2, got " + w.r_hi.str());
  return w;
}

// Corpus spec: "n<=K" sweeps all even sizes up to K, "n=K" one size.
std::vector<CubicMultigraph> corpus_from_spec(const std::string& spec,
                                              bool allow_parallel) {
  std::string s = spec;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  bool upto = s.rfind("n<=", 0) == 0;
  bool exact = s.rfind("n=", 0) == 0;
  if (!upto && !exact) throw MalformedInput("bad generator spec: " + spec);
  int k = std::stoi(s.substr(upto ? 3 : 2));
  std::vector<CubicMultigraph> out;
  int lo = upto ? 2 : k;
  for (int n = lo; n <= k; n += 2)
    for (auto& g : generate_cubic(n, allow_parallel)) out.push_back(std::move(g));
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  out << text;
}

// Fans a per-graph job out over a small pool, preserving input order.
template <typename Fn>
std::vector<std::string> run_over_corpus(const std::vector<CubicMultigraph>& corpus,
                                         int jobs, Fn fn) {
  std::vector<std::string> results(corpus.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < corpus.size(); ++i) results[i] = fn(corpus[i]);
    return results;
  }
  std::mutex mu;
  size_t next = 0;
  auto worker = [&]() {
    while (true) {
      size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= corpus.size()) return;
        i = next++;
      }
      results[i] = fn(corpus[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-excess flows in cubic multigraphs"};
  app.set_config("--config", "", "key=value file mirroring the flags");
  app.require_subcommand(1);

  std::string graph_path, out_path, svg_path, cert_path, cache_path;
  std::string r_str = "7/2", alpha_str = "1/2", conjecture = "bl3", gen_spec;
  std::vector<std::string> overlays, graph_paths;
  int k = 5, gen_n = 0, jobs = 1;
  bool orientable = false, allow_parallel = false, lenient = false, debug = false;

  auto* c_check = app.add_subcommand("check", "decide (r,alpha)-flow feasibility");
  c_check->add_option("--graph", graph_path)->required();
  c_check->add_option("--r", r_str)->required();
  c_check->add_option("--alpha", alpha_str)->required();
  c_check->add_option("--out", out_path);

  auto* c_bed = app.add_subcommand("bed", "compute the exact bed(G) frontier");
  c_bed->add_option("--graph", graph_path)->required();
  c_bed->add_option("--out", out_path);
  c_bed->add_option("--svg", svg_path);
  c_bed->add_option("--overlay", overlays,
                    "named overlays: M4, M5, L5, A4, urd:R:ALPHA");

  auto* c_bisect = app.add_subcommand("bisect", "search for a k-weak bisection");
  c_bisect->add_option("--graph", graph_path)->required();
  c_bisect->add_option("--k", k)->required();
  c_bisect->add_flag("--orientable", orientable);
  c_bisect->add_option("--cache", cache_path);

  auto* c_weak5 = app.add_subcommand("weak5",
                                     "construct an orientable 5-weak bisection");
  c_weak5->add_option("--graph", graph_path)->required();
  c_weak5->add_option("--out", out_path);
  c_weak5->add_flag("--debug", debug, "full invariant validation");
  c_weak5->add_option("--cache", cache_path);

  auto* c_hunt = app.add_subcommand("hunt", "sweep a corpus against a conjecture");
  c_hunt->add_option("--conjecture", conjecture)->required();
  c_hunt->add_option("--gen", gen_spec, "corpus spec, e.g. n<=10");
  c_hunt->add_option("--graph", graph_paths, "graph files instead of --gen");
  c_hunt->add_flag("--allow-parallel", allow_parallel,
                   "include multigraphs in the generated corpus");
  c_hunt->add_option("--jobs", jobs);
  c_hunt->add_option("--cache", cache_path);
  c_hunt->add_flag("--lenient", lenient);

  auto* c_verify = app.add_subcommand("verify", "re-check a certificate file");
  c_verify->add_option("--cert", cert_path)->required();

  auto* c_gen = app.add_subcommand("gen", "emit a cubic multigraph corpus");
  c_gen->add_option("--n", gen_n)->required();
  c_gen->add_flag("--allow-parallel", allow_parallel);
  c_gen->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_check) {
      auto g = load_graph(graph_path);
      FlowPoint p(Rat::parse(r_str), Rat::parse(alpha_str));
      auto res = check_flow(g, p);
      if (auto* fa = std::get_if<FlowAssignment>(&res)) {
        write_text(out_path, flow_witness_to_json(g, *fa, p).dump(2) + "\n");
        return 0;
      }
      write_text(out_path,
                 infeasible_to_json(g, std::get<Infeasible>(res), p).dump(2) + "\n");
      return 1;
    }

    if (*c_bed) {
      auto g = load_graph(graph_path);
      FlowRegion reg = bed_of_graph(g, window_from_env());
      write_text(out_path, region_to_json(reg).dump(2) + "\n");
      if (!svg_path.empty()) {
        std::vector<SvgOverlay> ovs;
        for (const std::string& ov : overlays) {
          if (ov.rfind("urd:", 0) == 0) {
            auto c1 = ov.find(':'), c2 = ov.find(':', c1 + 1);
            FlowPoint p(Rat::parse(ov.substr(c1 + 1, c2 - c1 - 1)),
                        Rat::parse(ov.substr(c2 + 1)));
            ovs.push_back({named_urd(p), ov});
          } else if (ov.size() >= 2) {
            int kk = std::stoi(ov.substr(1));
            auto kind = ov[0] == 'M'   ? NamedRegion::Kind::Mk
                        : ov[0] == 'L' ? NamedRegion::Kind::Lk
                                       : NamedRegion::Kind::Ak;
            ovs.push_back({named_region(kind, kk), ov});
          }
        }
        write_text(svg_path, region_to_svg(reg, ovs));
      }
      return 0;
    }

    if (*c_bisect) {
      auto g = load_graph(graph_path);
      auto bis = find_k_weak(g, k, orientable);
      Json colors = Json::array();
      if (bis)
        for (uint8_t c : bis->color) colors.push_back(int(c));
      Json rec{{"verdict", bis ? "found" : "none"}, {"colors", colors}};
      std::cout << rec.dump() << "\n";
      if (!cache_path.empty()) {
        std::string params = "k=" + std::to_string(k) +
                             (orientable ? ",orientable" : "");
        ResultCache(cache_path)
            .store(canonical_form(g), "bisect", params,
                   {bis ? "found" : "none", ResultCache::digest(rec.dump())});
      }
      return bis ? 0 : 1;
    }

    if (*c_weak5) {
      auto g = load_graph(graph_path);
      auto cert = construct_orientable_5weak(
          g, debug ? CheckDepth::debug : CheckDepth::release);
      Json j = weak5_certificate_to_json(g, cert);
      write_text(out_path, j.dump(2) + "\n");
      if (!cache_path.empty())
        ResultCache(cache_path)
            .store(canonical_form(g), "weak5", debug ? "debug" : "release",
                   {"constructed", ResultCache::digest(j.dump())});
      return 0;
    }

    if (*c_hunt) {
      Conjecture which = parse_conjecture(conjecture);
      std::vector<CubicMultigraph> corpus;
      if (!gen_spec.empty()) {
        corpus = corpus_from_spec(gen_spec, allow_parallel);
      } else if (!graph_paths.empty()) {
        for (const std::string& path : graph_paths) {
          try {
            corpus.push_back(load_graph(path));
          } catch (const Error& e) {
            if (!lenient) throw;
            std::cerr << "warning: skipping " << path << ": " << e.what()
                      << "\n";
          }
        }
      } else {
        throw MalformedInput("hunt needs --gen or --graph");
      }
      std::optional<ResultCache> cache;
      if (!cache_path.empty()) cache.emplace(cache_path);
      std::mutex cache_mu;
      auto job = [&](const CubicMultigraph& g) {
        std::string canon = canonical_form(g);
        if (cache) {
          std::lock_guard<std::mutex> lock(cache_mu);
          if (auto hit = cache->lookup(canon, "hunt", conjecture))
            return Json{{"n", g.n()},
                        {"canonical", canon},
                        {"verdict", hit->verdict},
                        {"detail", "cached"},
                        {"digest", hit->digest}}
                .dump();
        }
        auto recs = hunt({g}, which);
        Json j = hunt_record_to_json(recs[0]);
        if (cache) {
          std::lock_guard<std::mutex> lock(cache_mu);
          cache->store(canon, "hunt", conjecture,
                       {recs[0].verdict, ResultCache::digest(j.dump())});
        }
        return j.dump();
      };
      auto lines = run_over_corpus(corpus, jobs, job);
      bool finding = false;
      for (const std::string& line : lines) {
        std::cout << line << "\n";
        if (line.find("\"counterexample\"") != std::string::npos) {
          finding = true;
          std::cout << "FINDING: counterexample candidate above\n";
        }
      }
      (void)finding;  // findings are reported, never a failure exit
      return 0;
    }

    if (*c_verify) {
      std::ifstream in(cert_path);
      if (!in) throw MalformedInput("cannot open " + cert_path);
      auto j = Json::parse(in);
      std::string problem = verify_certificate_json(j);
      if (problem.empty()) {
        std::cout << "certificate verified\n";
        return 0;
      }
      std::cout << "certificate rejected: " << problem << "\n";
      return 1;
    }

    if (*c_gen) {
      auto graphs = generate_cubic(gen_n, allow_parallel);
      std::ostringstream out;
      for (size_t i = 0; i < graphs.size(); ++i) {
        out << "# graph " << i << "\n" << graphs[i].to_cub() << "\n";
      }
      write_text(out_path, out.str());
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
