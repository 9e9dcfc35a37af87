#include "amoeba/balancing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace amoeba {

long long binom2(long long x) { return x * (x - 1) / 2; }

SubgraphFamily half_family(const LabeledGraph& g) {
  if (g.size() < 2) throw std::invalid_argument("half_family: graph needs at least 2 edges");
  const int h = g.size() / 2;
  const auto& edges = g.edges();
  std::map<std::string, LabeledGraph> seen;
  std::vector<int> pick(h);
  // enumerate h-subsets of the edge set
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == h) {
      std::vector<Edge> sub;
      sub.reserve(h);
      for (int i = 0; i < h; ++i) sub.push_back(edges[pick[i]]);
      LabeledGraph member = LabeledGraph::from_edges(std::move(sub));  // strips isolated labels
      seen.emplace(canonical_key(member), member);
      return;
    }
    for (int i = start; i <= static_cast<int>(edges.size()) - (h - chosen); ++i) {
      pick[chosen] = i;
      rec(i + 1, chosen + 1);
    }
  };
  rec(0, 0);
  SubgraphFamily out;
  for (auto& [key, member] : seen) out.members.push_back(std::move(member));
  return out;
}

namespace {

bool family_free(const LabeledGraph& g, const SubgraphFamily& family) {
  for (const auto& member : family.members)
    if (contains_subgraph(g, member)) return false;
  return true;
}

}  // namespace

ExResult ex_bruteforce(int n, const SubgraphFamily& family, const ExOptions& opts) {
  if (n < 1) throw std::invalid_argument("ex_bruteforce: n must be positive");
  if (n > opts.guard_n && !opts.force)
    throw GuardError("ex_bruteforce: n exceeds the brute-force guard (use force to override)");
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  LabeledGraph empty(labels, {});
  if (family.members.empty())
    throw std::invalid_argument("ex_bruteforce: empty family");
  for (const auto& m : family.members)
    if (m.size() == 0) return {0, empty};  // the empty member embeds everywhere

  std::map<std::string, LabeledGraph> level{{canonical_key(empty), empty}};
  long long edge_count = 0;
  while (true) {
    std::map<std::string, LabeledGraph> next;
    for (const auto& [key, g] : level) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (g.has_edge(i, j)) continue;
          std::vector<Edge> edges = g.edges();
          edges.push_back({i, j});
          LabeledGraph h(labels, std::move(edges));
          std::string hkey = canonical_key(h);
          if (next.count(hkey)) continue;
          if (!family_free(h, family)) continue;
          next.emplace(std::move(hkey), std::move(h));
          if (next.size() > opts.state_cap)
            throw std::runtime_error("ex_bruteforce: state cap exceeded; family admits too many free graphs");
        }
      }
    }
    if (next.empty()) break;
    level = std::move(next);
    ++edge_count;
  }
  return {edge_count, level.begin()->second};
}

namespace {

// All copies of g inside K_n as edge bitmasks (each copy once).
std::vector<std::uint64_t> copy_masks(int n, const LabeledGraph& g,
                                      const std::vector<std::vector<int>>& edge_index) {
  const int v = g.order();
  const auto& labels = g.labels();
  std::vector<std::vector<int>> adj(v);
  auto idx = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<std::pair<int, int>> pattern_edges;
  for (const auto& e : g.edges()) pattern_edges.push_back({idx(e.first), idx(e.second)});

  std::set<std::uint64_t> masks;
  std::vector<int> map(v, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == v) {
      std::uint64_t mask = 0;
      for (const auto& [a, b] : pattern_edges) mask |= 1ull << edge_index[map[a]][map[b]];
      masks.insert(mask);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      map[pos] = t;
      used[t] = 1;
      rec(pos + 1);
      used[t] = 0;
    }
  };
  rec(0);
  return {masks.begin(), masks.end()};
}

}  // namespace

long long bal_bruteforce(int n, const LabeledGraph& g, const BalOptions& opts) {
  if (g.size() < 1) throw std::invalid_argument("bal_bruteforce: graph needs at least one edge");
  if (n < g.order())
    throw std::invalid_argument("bal_bruteforce: host K_n is smaller than the graph");
  const int total_edges = n * (n - 1) / 2;
  if (total_edges > opts.guard_edges && !opts.force)
    throw GuardError("bal_bruteforce: C(n,2) exceeds the enumeration guard (use force to override)");
  if (total_edges > 62) throw std::invalid_argument("bal_bruteforce: host too large for 64-bit masks");

  std::vector<std::vector<int>> edge_index(n, std::vector<int>(n, -1));
  int next_index = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      edge_index[i][j] = edge_index[j][i] = next_index++;
    }

  const std::vector<std::uint64_t> masks = copy_masks(n, g, edge_index);
  const int m = g.size();
  const int lo = m / 2, hi = (m + 1) / 2;

  // Fix the last edge blue: complements cover the other half of the space.
  const std::uint64_t space = 1ull << (total_edges - 1);
  const int threads = std::max(1, opts.threads);

  auto worker = [&](std::uint64_t begin, std::uint64_t end) -> long long {
    long long best = 0;
    for (std::uint64_t red = begin; red < end; ++red) {
      int reds = __builtin_popcountll(red);
      long long minrb = std::min<long long>(reds, total_edges - reds);
      if (minrb <= best) continue;
      bool balanced = false;
      for (std::uint64_t mask : masks) {
        int r = __builtin_popcountll(red & mask);
        if (r == lo || r == hi) {
          balanced = true;
          break;
        }
      }
      if (!balanced) best = minrb;
    }
    return best;
  };

  if (threads == 1) return worker(0, space);
  std::vector<long long> results(threads, 0);
  std::vector<std::thread> pool;
  std::uint64_t chunk = (space + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t begin = chunk * t;
    std::uint64_t end = std::min(space, begin + chunk);
    pool.emplace_back([&, t, begin, end]() { results[t] = worker(begin, end); });
  }
  for (auto& th : pool) th.join();
  return *std::max_element(results.begin(), results.end());
}

namespace {

// best_by_size[s] = max cut over subsets of size exactly s (s <= n/2; larger
// sizes follow by complement symmetry).
std::vector<long long> best_cut_by_size(const LabeledGraph& g) {
  const int n = g.order();
  if (n > 30) throw std::invalid_argument("cuts: graph too large for subset enumeration");
  const auto& labels = g.labels();
  auto idx = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    int a = idx(e.first), b = idx(e.second);
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = __builtin_popcount(adj[i]);

  const int half = n / 2;
  std::vector<long long> best(n + 1, -1);
  best[0] = 0;
  std::uint32_t in_set = 0;
  std::function<void(int, int, long long)> rec = [&](int start, int size, long long cut) {
    if (size > 0) best[size] = std::max(best[size], cut);
    if (size == half) return;
    for (int v = start; v < n; ++v) {
      long long delta = deg[v] - 2ll * __builtin_popcount(adj[v] & in_set);
      in_set |= 1u << v;
      rec(v + 1, size + 1, cut + delta);
      in_set &= ~(1u << v);
    }
  };
  rec(0, 0, 0);
  for (int s = half + 1; s <= n; ++s) best[s] = best[n - s];
  for (int s = 1; s <= n; ++s) best[s] = std::max(best[s], best[s - 1]);  // monotone in the bound
  return best;
}

}  // namespace

long long max_cut_bounded(const LabeledGraph& g, int l) {
  if (l < 0 || l > g.order()) throw std::invalid_argument("max_cut_bounded: bad subset bound");
  return best_cut_by_size(g)[l];
}

int cut_threshold(const LabeledGraph& g) {
  if (g.size() < 1) throw std::invalid_argument("cut_threshold: graph needs at least one edge");
  auto best = best_cut_by_size(g);
  const long long target = g.size() / 2;
  int ell = 0;
  for (int s = 0; s <= g.order(); ++s) {
    if (best[s] < target)
      ell = s;
    else
      break;
  }
  return ell;
}

CutsResult cuts(const LabeledGraph& g, int l) { return {max_cut_bounded(g, l), cut_threshold(g)}; }

LowerBounds lower_bounds(const LabeledGraph& g, long long n) {
  LowerBounds out;
  auto profile = degree_profile(g);
  const long long m = g.size();
  const long long order = g.order();
  long long sum = 0;
  for (std::size_t i = 0; i < profile.sequence.size(); ++i) {
    sum += profile.sequence[i];
    if (sum < m / 2)
      out.partial_sum_ell = static_cast<int>(i + 1);
    else
      break;
  }
  out.partial_sum_bound = static_cast<long long>(out.partial_sum_ell) * (n - out.partial_sum_ell);
  out.generic_ell = (m - 1) / (2 * order + 1);
  out.generic_bound = out.generic_ell * (n - out.generic_ell);
  out.cut_ell = cut_threshold(g);
  out.cut_bound = static_cast<long long>(out.cut_ell) * (n - out.cut_ell);
  return out;
}

long long lidicky_ex(const StarForest& forest, long long n) {
  const auto& d = forest.star_degrees;
  if (d.empty()) throw std::invalid_argument("lidicky_ex: empty star forest");
  long long best = 0;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    long long li = static_cast<long long>(i);
    long long term = (li - 1) * (n - li + 1) + binom2(li - 1) + (d[i - 1] - 1) * (n - li + 1) / 2;
    best = std::max(best, term);
  }
  return best;
}

BoundsReport bounds_report(Family family, int k, long long n) {
  BoundsReport out;
  auto fmt_lower = [](long long ell) {
    if (ell == 1) return std::string("n-1");
    return std::to_string(ell) + "(n-" + std::to_string(ell) + ")";
  };
  auto fmt_linear = [](long long coef, long long constant) {
    std::string s = (coef == 1 ? "n" : std::to_string(coef) + "n");
    if (constant > 0) s += "-" + std::to_string(constant);
    if (constant < 0) s += "+" + std::to_string(-constant);
    return s;
  };
  switch (family) {
    case Family::T: {
      if (k < 6) throw std::invalid_argument("bounds_report: family T requires k >= 6");
      if (k == 6) {
        out.lower_formula = "n-1";
        out.lower_value = n - 1;
        out.upper_formula = "2n-2";
        out.upper_value = 2 * n - 2;
      } else {
        long long ell = fib(k - 4);
        out.lower_formula = fmt_lower(ell);
        out.lower_value = ell * (n - ell);
        long long coef = fib(k - 2) - 2;
        long long constant = binom2(fib(k - 2) - 1) - (k == 7 ? 1 : 0);
        out.upper_formula = fmt_linear(coef, constant);
        out.upper_value = coef * n - constant;
      }
      break;
    }
    case Family::A:
    case Family::B: {
      if (k < 5) throw std::invalid_argument("bounds_report: families A and B require k >= 5");
      long long ell = 1ll << (k - 5);
      out.lower_formula = fmt_lower(ell);
      out.lower_value = ell * (n - ell);
      long long q = 1ll << (k - 3);
      out.upper_formula = fmt_linear(q - 1, binom2(q));
      out.upper_value = (q - 1) * n - binom2(q);
      break;
    }
  }
  return out;
}

}  // namespace amoeba
