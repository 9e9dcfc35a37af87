#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "amoeba/families.hpp"
#include "amoeba/graph.hpp"

using namespace amoeba;

namespace {

std::vector<int> range(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

Permutation random_perm(std::vector<int> domain, std::mt19937& rng) {
  std::vector<int> img = domain;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(domain), std::move(img));
}

LabeledGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return LabeledGraph(range(n), std::move(edges));
}

// Independent oracle: count edge-preserving bijections by enumerating all
// n! label permutations directly.
unsigned long long brute_force_witness_count(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return 0;
  std::vector<int> img = h.labels();
  std::sort(img.begin(), img.end());
  unsigned long long count = 0;
  do {
    const auto& from = g.labels();
    auto image_of = [&](int x) {
      auto it = std::lower_bound(from.begin(), from.end(), x);
      return img[it - from.begin()];
    };
    bool ok = true;
    for (const auto& e : g.edges())
      if (!h.has_edge(image_of(e.first), image_of(e.second))) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

const LabeledGraph alt_t3({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});

}  // namespace

TEST_CASE("copy under the identity") {
  LabeledGraph path(range(3), {{0, 1}, {1, 2}});
  CHECK(copy_under(path, Permutation::identity(range(3))) == path);
}

TEST_CASE("copy of the four-vertex path under a transposition") {
  // (1 2) realizes replacing edge {3,2} by {3,1} in the path 1-2-3-4.
  Permutation s = Permutation::transposition({1, 2, 3, 4}, 1, 2);
  LabeledGraph moved = copy_under(alt_t3, s);
  LabeledGraph expected({1, 2, 3, 4}, {{1, 2}, {1, 3}, {3, 4}});
  CHECK(moved == expected);
  CHECK(moved == apply_replacement(alt_t3, EdgeReplacement::move({2, 3}, {1, 3})));
}

TEST_CASE("complete graphs are fixed by every copy") {
  LabeledGraph triangle(range(3), {{0, 1}, {0, 2}, {1, 2}});
  std::mt19937 rng(3);
  for (int rep = 0; rep < 10; ++rep) CHECK(copy_under(triangle, random_perm(range(3), rng)) == triangle);
}

TEST_CASE("copy composition convention") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 15; ++rep) {
      LabeledGraph g = random_graph(n, 0.4, rng);
      Permutation s = random_perm(range(n), rng);
      Permutation t = random_perm(range(n), rng);
      CHECK(copy_under(g, compose(s, t)) == copy_under(copy_under(g, t), s));
    }
  }
}

TEST_CASE("copy under preserves the edge count") {
  std::mt19937 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    LabeledGraph g = random_graph(7, 0.5, rng);
    Permutation s = random_perm(range(7), rng);
    CHECK(copy_under(g, s).size() == g.size());
  }
}

TEST_CASE("copy under rejects a wrong domain") {
  LabeledGraph g(range(4), {{0, 1}});
  CHECK_THROWS_AS(copy_under(g, Permutation::identity(range(3))), std::invalid_argument);
}

TEST_CASE("apply_replacement basics") {
  CHECK(apply_replacement(alt_t3, EdgeReplacement::move({2, 3}, {1, 3})) ==
        LabeledGraph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {3, 4}}));
  CHECK(apply_replacement(alt_t3, EdgeReplacement::neutral()) == alt_t3);
  CHECK(apply_replacement(alt_t3, EdgeReplacement::move({1, 2}, {1, 2})) == alt_t3);
  CHECK_THROWS_AS(apply_replacement(alt_t3, EdgeReplacement::move({1, 3}, {2, 4})), std::invalid_argument);
  CHECK_THROWS_AS(apply_replacement(alt_t3, EdgeReplacement::move({1, 2}, {3, 4})), std::invalid_argument);
}

TEST_CASE("replacing an edge of canonical T_5") {
  LabeledGraph t5 = build(Family::T, 5).graph;
  LabeledGraph moved = apply_replacement(t5, EdgeReplacement::move({0, 6}, {4, 6}));
  CHECK_FALSE(moved.has_edge(0, 6));
  CHECK(moved.has_edge(4, 6));
  CHECK(moved.size() == t5.size());
  CHECK(is_forest(moved));
}

TEST_CASE("isomorphism of equal paths yields exactly the two witnesses") {
  LabeledGraph path(range(3), {{0, 1}, {1, 2}});
  auto all = isomorphism_all(path, path);
  CHECK(all.size() == 2);
  for (const auto& w : all) {
    for (const auto& e : path.edges()) CHECK(path.has_edge(w.map.at(e.first), w.map.at(e.second)));
  }
}

TEST_CASE("star and path are not isomorphic") {
  LabeledGraph star(range(4), {{0, 1}, {0, 2}, {0, 3}});
  LabeledGraph path(range(4), {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(is_isomorphic(star, path));
  CHECK_FALSE(isomorphism_first(star, path).has_value());
}

TEST_CASE("canonical T_4 has exactly two self-witnesses") {
  LabeledGraph t4 = build(Family::T, 4).graph;
  CHECK(isomorphism_all(t4, t4).size() == 2);
  CHECK(brute_force_witness_count(t4, t4) == 2);
}

TEST_CASE("witness validity and counts against the brute-force oracle") {
  std::mt19937 rng(21);
  for (int n = 2; n <= 7; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      LabeledGraph g = random_graph(n, 0.45, rng);
      CHECK(isomorphism_all(g, g).size() == brute_force_witness_count(g, g));
      Permutation s = random_perm(range(n), rng);
      LabeledGraph h = copy_under(g, s);
      auto w = isomorphism_first(g, h);
      REQUIRE(w.has_value());
      for (const auto& e : g.edges()) CHECK(h.has_edge(w->map.at(e.first), w->map.at(e.second)));
      CHECK(isomorphism_all(g, h).size() == brute_force_witness_count(g, h));
    }
  }
}

TEST_CASE("forest isomorphism agrees with the generic path") {
  std::mt19937 rng(33);
  for (int rep = 0; rep < 40; ++rep) {
    LabeledGraph g = random_graph(7, 0.25, rng);
    LabeledGraph h = random_graph(7, 0.25, rng);
    if (!is_forest(g) || !is_forest(h)) continue;
    CHECK(is_isomorphic(g, h) == isomorphism_first(g, h).has_value());
  }
}

TEST_CASE("degree profile of family trees") {
  auto p5 = degree_profile(build(Family::T, 5).graph);
  CHECK(p5.counts == std::vector<long long>{0, 5, 3, 1, 1});
  auto pa4 = degree_profile(build(Family::A, 4).graph);
  CHECK(pa4.counts == std::vector<long long>{0, 4, 2, 2});
  auto pk2 = degree_profile(LabeledGraph(range(2), {{0, 1}}));
  CHECK(pk2.counts == std::vector<long long>{0, 2});
}

TEST_CASE("degree profile handshake") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 30; ++rep) {
    LabeledGraph g = random_graph(8, 0.4, rng);
    auto p = degree_profile(g);
    long long twice_edges = 0, total = 0;
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
      twice_edges += static_cast<long long>(i) * p.counts[i];
      total += p.counts[i];
    }
    CHECK(twice_edges == 2ll * g.size());
    CHECK(total == g.order());
  }
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(LabeledGraph(range(2), {{0, 1}})) == "A_");
  CHECK(to_graph6(LabeledGraph(range(3), {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
  CHECK(from_graph6("A_") == LabeledGraph(range(2), {{0, 1}}));
  CHECK(from_graph6("Bw").size() == 3);
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(55);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      LabeledGraph g = random_graph(n, 0.4, rng);
      CHECK(from_graph6(to_graph6(g)).edges() == g.edges());
    }
  }
  // larger order uses the long form
  LabeledGraph big(range(70), {{0, 69}, {1, 2}});
  CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("json round trip keeps arbitrary labels") {
  LabeledGraph g({2, 5, 9, 11}, {{2, 5}, {5, 11}});
  CHECK(graph_from_json(to_json(g)) == g);
}

TEST_CASE("canonical keys separate and join classes") {
  std::mt19937 rng(77);
  for (int rep = 0; rep < 25; ++rep) {
    LabeledGraph g = random_graph(6, 0.4, rng);
    Permutation s = random_perm(range(6), rng);
    CHECK(canonical_key(g) == canonical_key(copy_under(g, s)));
  }
  LabeledGraph star(range(4), {{0, 1}, {0, 2}, {0, 3}});
  LabeledGraph path(range(4), {{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_key(star) != canonical_key(path));
}

TEST_CASE("subgraph embedding") {
  LabeledGraph host = build(Family::T, 5).graph;
  LabeledGraph star4(range(5), {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto w = subgraph_embedding(star4, host);
  REQUIRE(w.has_value());
  for (const auto& e : star4.edges()) CHECK(host.has_edge(w->at(e.first), w->at(e.second)));
  LabeledGraph star5(range(6), {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK_FALSE(subgraph_embedding(star5, host).has_value());
}
