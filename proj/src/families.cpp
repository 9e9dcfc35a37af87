#include "amoeba/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace amoeba {

long long fib(int k) {
  if (k < 0) throw std::invalid_argument("fib: negative index");
  if (k > 90) throw std::overflow_error("fib: index too large for 64 bits");
  long long a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < k; ++i) {
    long long next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Family family_from_string(const std::string& s) {
  if (s == "T" || s == "t") return Family::T;
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::T: return "T";
    case Family::A: return "A";
    case Family::B: return "B";
  }
  return "?";
}

namespace {

std::vector<Edge> tree_edges_T(int k) {
  if (k <= 2) return {{0, 1}};
  std::vector<Edge> h = tree_edges_T(k - 1);
  std::vector<Edge> j = tree_edges_T(k - 2);
  int c = static_cast<int>(2 * fib(k - 1));
  for (const auto& e : j) h.push_back({e.first + c, e.second + c});
  h.push_back({0, c});
  return h;
}

std::vector<Edge> tree_edges_A(int k) {
  if (k == 1) return {};
  std::vector<Edge> h = tree_edges_A(k - 1);
  int c = 1 << (k - 2);
  std::vector<Edge> out = h;
  for (const auto& e : h) out.push_back({e.first + c, e.second + c});
  out.push_back({0, c});
  return out;
}

std::vector<int> range_labels(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

CanonicalTree build(Family family, int k) {
  if (k < 1) throw std::invalid_argument("build: k must be >= 1");
  CanonicalTree t;
  t.family = family;
  t.k = k;
  switch (family) {
    case Family::T: {
      int n = static_cast<int>(2 * fib(k));
      t.graph = LabeledGraph(range_labels(n), tree_edges_T(k));
      if (k >= 5) {
        int a = static_cast<int>(2 * fib(k - 2));
        int c = static_cast<int>(2 * fib(k - 1));
        int d = c + static_cast<int>(2 * fib(k - 3));
        t.roots = TreeRoots{a, 0, c, d};
        t.regions = TreeRegions{{a, c - 1}, {0, a - 1}, {c, d - 1}, {d, n - 1}};
      }
      break;
    }
    case Family::A: {
      int n = 1 << (k - 1);
      t.graph = LabeledGraph(range_labels(n), tree_edges_A(k));
      if (k >= 3) {
        int a = 1 << (k - 3);
        int c = 1 << (k - 2);
        int d = c + a;
        t.roots = TreeRoots{a, 0, c, d};
        t.regions = TreeRegions{{a, c - 1}, {0, a - 1}, {c, d - 1}, {d, n - 1}};
      }
      break;
    }
    case Family::B: {
      int n = (1 << (k - 1)) + 1;
      std::vector<Edge> edges = tree_edges_A(k);
      edges.push_back({0, n - 1});  // pendant leaf at the root, last label
      t.graph = LabeledGraph(range_labels(n), std::move(edges));
      if (k >= 3) {
        int a = 1 << (k - 3);
        int c = 1 << (k - 2);
        int d = c + a;
        t.roots = TreeRoots{a, 0, c, d};
        t.regions = TreeRegions{{a, c - 1}, {0, a - 1}, {c, d - 1}, {d, n - 2}};
      }
      break;
    }
  }
  return t;
}

std::vector<long long> profile_closed_form(Family family, int k) {
  if (family == Family::T) {
    if (k < 4) throw std::invalid_argument("profile_closed_form: T requires k >= 4");
    std::vector<long long> counts(k, 0);  // degrees 0..k-1
    counts[1] = fib(k);
    counts[2] = fib(k - 1);
    for (int i = 3; i <= k - 2; ++i) counts[i] = fib(k - 1 - i);
    counts[k - 1] = 1;
    return counts;
  }
  if (family == Family::A) {
    if (k < 2) throw std::invalid_argument("profile_closed_form: A requires k >= 2");
    std::vector<long long> counts(k, 0);
    for (int i = 1; i <= k - 2; ++i) counts[i] = 1ll << (k - i - 1);
    counts[k - 1] = 2;
    return counts;
  }
  throw std::invalid_argument("profile_closed_form: only families T and A have closed forms here");
}

namespace {

std::vector<int> star_degrees_of(ForestFamily f, int k) {
  std::vector<int> out;
  auto push = [&out](long long count, int deg) {
    for (long long i = 0; i < count; ++i) out.push_back(deg);
  };
  switch (f) {
    case ForestFamily::S:
    case ForestFamily::SPlus: {
      if (k < 5) throw std::invalid_argument("star_forest: S/S+ require k >= 5");
      push(fib(k - 4), 4);
      push(fib(k - 3) - fib(k - 4), 3);
      push(fib(k - 2) - 1 - fib(k - 3), 1);
      if (f == ForestFamily::SPlus) out.push_back(1);
      break;
    }
    case ForestFamily::R: {
      if (k < 4) throw std::invalid_argument("star_forest: R requires k >= 4");
      push(1ll << (k - 4), 3);
      push(1ll << (k - 4), 1);
      break;
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

StarForest star_forest(ForestFamily f, int k) {
  StarForest sf;
  sf.star_degrees = star_degrees_of(f, k);
  std::vector<Edge> edges;
  int next = 0;
  for (int d : sf.star_degrees) {
    int center = next++;
    for (int i = 0; i < d; ++i) edges.push_back({center, next++});
  }
  sf.graph = LabeledGraph(range_labels(next), std::move(edges));
  return sf;
}

std::optional<std::map<int, int>> embeds_in(const StarForest& forest, const CanonicalTree& host) {
  return subgraph_embedding(forest.graph, host.graph);
}

bool verify_embedding(const LabeledGraph& pattern, const LabeledGraph& host,
                      const std::map<int, int>& map) {
  std::set<int> images;
  for (int v : pattern.labels()) {
    auto it = map.find(v);
    if (it == map.end()) return false;
    if (!host.has_label(it->second)) return false;
    if (!images.insert(it->second).second) return false;
  }
  for (const auto& e : pattern.edges())
    if (!host.has_edge(map.at(e.first), map.at(e.second))) return false;
  return true;
}

namespace {

// One placed star: host center plus host leaves.
struct Placement {
  int center;
  std::vector<int> leaves;
  int degree() const { return static_cast<int>(leaves.size()); }
};

void shift_placements(std::vector<Placement>& ps, int offset) {
  for (auto& p : ps) {
    p.center += offset;
    for (int& l : p.leaves) l += offset;
  }
}

// Star placements realizing S_k / S_k^+ inside canonical T_k, following the
// recursions S_k = S_{k-1} u S^+_{k-2} and S^+_k = S^+_{k-1} u S^+_{k-2}
// (sub-copies shifted into the J-interval).
std::vector<Placement> place_S(int k, bool plus) {
  if (k == 5) {
    std::vector<Placement> ps{{0, {1, 2, 4, 6}}};
    if (plus) ps.push_back({8, {9}});
    return ps;
  }
  if (k == 6) {
    std::vector<Placement> ps{{0, {1, 2, 4, 6}}, {10, {11, 12, 14}}};
    if (plus) ps.push_back({8, {9}});
    return ps;
  }
  std::vector<Placement> ps = place_S(k - 1, plus);
  std::vector<Placement> sub = place_S(k - 2, true);
  shift_placements(sub, static_cast<int>(2 * fib(k - 1)));
  ps.insert(ps.end(), sub.begin(), sub.end());
  return ps;
}

// R_k inside canonical A_k: R_k = R_{k-1} u R_{k-1} with the second copy in
// the shifted half.
std::vector<Placement> place_R(int k) {
  if (k == 4) return {{0, {1, 2, 4}}, {6, {7}}};
  std::vector<Placement> ps = place_R(k - 1);
  std::vector<Placement> sub = ps;
  shift_placements(sub, 1 << (k - 2));
  ps.insert(ps.end(), sub.begin(), sub.end());
  return ps;
}

}  // namespace

std::map<int, int> family_embedding(ForestFamily f, int k) {
  std::vector<Placement> ps = f == ForestFamily::R ? place_R(k) : place_S(k, f == ForestFamily::SPlus);
  std::stable_sort(ps.begin(), ps.end(),
                   [](const Placement& x, const Placement& y) { return x.degree() > y.degree(); });
  StarForest sf = star_forest(f, k);
  if (ps.size() != sf.star_degrees.size())
    throw std::logic_error("family_embedding: placement count mismatch");
  std::map<int, int> out;
  int next = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].degree() != sf.star_degrees[i])
      throw std::logic_error("family_embedding: star degree mismatch");
    out[next++] = ps[i].center;
    for (int leaf : ps[i].leaves) out[next++] = leaf;
  }
  return out;
}

}  // namespace amoeba
