#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beflow/generate.hpp"
#include "beflow/orientation.hpp"
#include "helpers.hpp"

using namespace beflow;
using namespace beflow::testing;

TEST_CASE("delta bookkeeping") {
  auto g = theta();
  Bisection bis{{1, 2}};
  CHECK(delta(bis, VertexSet::full(2)) == 0);
  CHECK(delta(bis, VertexSet::single(1)) == 1);
  CHECK(delta(bis, VertexSet::single(0)) == -1);
  CHECK(Delta(bis, VertexSet::single(0)) == 1);

  auto p = petersen();
  for (const Bisection& b : all_bisections(p))
    CHECK(delta(b, VertexSet::full(10)) == 0);
}

TEST_CASE("check_orientable on the theta graph") {
  auto g = theta();
  auto cert = check_orientable(g, Bisection{{1, 2}});
  REQUIRE(cert.orientable());
  CHECK(outdegree(g, *cert.orientation, 0) == 1);
  CHECK(outdegree(g, *cert.orientation, 1) == 2);
  CHECK_THROWS_AS(check_orientable(g, Bisection{{1, 1}}), NotBisection);
  CHECK_THROWS_AS(check_orientable(g, Bisection{{1, 3}}), NotBisection);
}

TEST_CASE("all K4 bisections are orientable") {
  auto g = k4();
  int count = 0;
  for (const Bisection& b : all_bisections(g)) {
    auto cert = check_orientable(g, b);
    CHECK(cert.orientable());
    ++count;
  }
  CHECK(count == 3);
}

TEST_CASE("a balloon side gives a violating set") {
  auto g = dumbbell();
  // color the first balloon 2 and the second 1
  Bisection bis{{2, 2, 2, 1, 1, 1}};
  auto cert = check_orientable(g, bis);
  REQUIRE_FALSE(cert.orientable());
  REQUIRE(cert.violating.has_value());
  CHECK(cut_degree(g, *cert.violating) < Delta(bis, *cert.violating));
}

TEST_CASE("matching test agrees with the subset oracle everywhere") {
  for (int n : {2, 4, 6}) {
    for (const auto& g : generate_cubic(n, true)) {
      for (const Bisection& b : all_bisections(g)) {
        auto cert = check_orientable(g, b);
        CHECK(cert.orientable() == orientable_by_subsets(g, b));
        if (cert.orientable()) {
          for (int v = 0; v < g.n(); ++v)
            CHECK(outdegree(g, *cert.orientation, v) == b.color[v]);
        } else {
          CHECK(cut_degree(g, *cert.violating) < Delta(b, *cert.violating));
        }
      }
    }
  }
}

TEST_CASE("balanced orientations always exist") {
  for (const auto& g : {theta(), k4(), necklace4(), k33(), prism(), petersen(),
                        dumbbell(), bridged_k4_pair()}) {
    auto o = balanced_orientation(g);
    CHECK(is_balanced(g, o));
  }
  // disconnected input works too
  CubicMultigraph two(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}});
  CHECK(is_balanced(two, balanced_orientation(two)));
}

TEST_CASE("cut identities for realized bisections") {
  // d+(A) - d-(A) = delta(A) and d+(A) + d-(A) = d(A), checked exhaustively
  for (const auto& g : generate_cubic(8, true)) {
    for (auto& [bis, o] : enumerate_orientable_bisections(g)) {
      for (uint64_t bits = 0; bits < (uint64_t(1) << g.n()); ++bits) {
        VertexSet a{bits};
        int dplus = 0, dminus = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
          bool tin = a.contains(o.tail(g, e)), hin = a.contains(o.head(g, e));
          if (tin && !hin) ++dplus;
          if (!tin && hin) ++dminus;
        }
        CHECK(dplus - dminus == delta(bis, a));
        CHECK(dplus + dminus == cut_degree(g, a));
      }
    }
  }
}

TEST_CASE("enumerate_orientable_bisections counts") {
  CHECK(enumerate_orientable_bisections(theta()).size() == 1);
  CHECK(enumerate_orientable_bisections(k4()).size() == 3);
  auto ps = enumerate_orientable_bisections(petersen());
  // oracle: count orientable swap-classes by subsets
  int oracle = 0;
  for (const Bisection& b : all_bisections(petersen()))
    if (orientable_by_subsets(petersen(), b)) ++oracle;
  CHECK(static_cast<int>(ps.size()) == oracle);
  CHECK_THROWS_AS(enumerate_orientable_bisections(petersen(), 8), TooLarge);
}

TEST_CASE("bisection_of inverts a realized orientation") {
  auto g = petersen();
  for (auto& [bis, o] : enumerate_orientable_bisections(g)) {
    Bisection back = bisection_of(g, o);
    CHECK(back.color == bis.color);
  }
}
