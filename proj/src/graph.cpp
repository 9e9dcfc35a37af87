#include "amoeba/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace amoeba {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("make_edge: loops are not allowed");
  if (a < 0 || b < 0) throw std::invalid_argument("make_edge: labels must be non-negative");
  return a < b ? Edge{a, b} : Edge{b, a};
}

LabeledGraph::LabeledGraph(std::vector<int> labels, std::vector<Edge> edges) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("LabeledGraph: duplicate labels");
  if (!labels.empty() && labels.front() < 0)
    throw std::invalid_argument("LabeledGraph: labels must be non-negative");
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges) {
    if (!std::binary_search(labels.begin(), labels.end(), e.first) ||
        !std::binary_search(labels.begin(), labels.end(), e.second))
      throw std::invalid_argument("LabeledGraph: edge endpoint outside the label set");
  }
  labels_ = std::move(labels);
  edges_ = std::move(edges);
}

LabeledGraph LabeledGraph::from_edges(std::vector<Edge> edges) {
  std::vector<int> labels;
  for (const auto& e : edges) {
    labels.push_back(e.first);
    labels.push_back(e.second);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return LabeledGraph(std::move(labels), std::move(edges));
}

bool LabeledGraph::has_label(int x) const {
  return std::binary_search(labels_.begin(), labels_.end(), x);
}

bool LabeledGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

int LabeledGraph::degree(int label) const {
  if (!has_label(label)) throw std::out_of_range("degree: label not in graph");
  int d = 0;
  for (const auto& e : edges_) d += (e.first == label) + (e.second == label);
  return d;
}

int LabeledGraph::min_degree() const {
  if (labels_.empty()) throw std::logic_error("min_degree: empty graph");
  int best = order();
  for (int v : labels_) best = std::min(best, degree(v));
  return best;
}

int LabeledGraph::max_degree() const {
  if (labels_.empty()) throw std::logic_error("max_degree: empty graph");
  int best = 0;
  for (int v : labels_) best = std::max(best, degree(v));
  return best;
}

std::vector<int> LabeledGraph::max_degree_labels() const {
  int d = max_degree();
  std::vector<int> out;
  for (int v : labels_)
    if (degree(v) == d) out.push_back(v);
  return out;
}

std::vector<int> LabeledGraph::neighbors(int label) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.first == label) out.push_back(e.second);
    if (e.second == label) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph LabeledGraph::with_isolated_label(int x) const {
  std::vector<int> labels = labels_;
  labels.push_back(x);
  return LabeledGraph(std::move(labels), edges_);
}

LabeledGraph LabeledGraph::shifted(int offset) const {
  std::vector<int> labels;
  labels.reserve(labels_.size());
  for (int v : labels_) labels.push_back(v + offset);
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({e.first + offset, e.second + offset});
  return LabeledGraph(std::move(labels), std::move(edges));
}

LabeledGraph copy_under(const LabeledGraph& g, const Permutation& sigma) {
  if (sigma.domain() != g.labels())
    throw std::invalid_argument("copy_under: permutation domain differs from the label set");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  Permutation inv = sigma.inverse();
  for (const auto& e : g.edges()) edges.push_back(make_edge(inv.apply(e.first), inv.apply(e.second)));
  return LabeledGraph(g.labels(), std::move(edges));
}

LabeledGraph apply_replacement(const LabeledGraph& g, const EdgeReplacement& r) {
  if (r.is_neutral()) return g;
  const Edge rem = make_edge(r.removed->first, r.removed->second);
  const Edge add = make_edge(r.added->first, r.added->second);
  if (!g.has_edge(rem.first, rem.second))
    throw std::invalid_argument("apply_replacement: removed edge is absent");
  if (rem == add) return g;
  if (g.has_edge(add.first, add.second))
    throw std::invalid_argument("apply_replacement: added edge is already present");
  if (!g.has_label(add.first) || !g.has_label(add.second))
    throw std::invalid_argument("apply_replacement: added edge endpoint outside the label set");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges())
    if (e != rem) edges.push_back(e);
  edges.push_back(add);
  return LabeledGraph(g.labels(), std::move(edges));
}

DegreeProfile degree_profile(const LabeledGraph& g) {
  std::unordered_map<int, int> deg;
  for (int v : g.labels()) deg[v] = 0;
  for (const auto& e : g.edges()) {
    ++deg[e.first];
    ++deg[e.second];
  }
  DegreeProfile p;
  p.sequence.reserve(g.order());
  for (int v : g.labels()) p.sequence.push_back(deg[v]);
  std::sort(p.sequence.rbegin(), p.sequence.rend());
  int maxd = p.sequence.empty() ? 0 : p.sequence.front();
  p.counts.assign(maxd + 1, 0);
  for (int d : p.sequence) ++p.counts[d];
  return p;
}

namespace {

// Dense adjacency view used by the iso/embedding algorithms.
struct Dense {
  std::vector<int> labels;                  // index -> label
  std::vector<std::vector<int>> adj;        // index -> neighbor indices
  std::vector<std::vector<char>> mat;       // adjacency matrix
  std::vector<int> deg;

  explicit Dense(const LabeledGraph& g) : labels(g.labels()) {
    int n = g.order();
    adj.assign(n, {});
    mat.assign(n, std::vector<char>(n, 0));
    deg.assign(n, 0);
    auto idx = [&](int label) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    for (const auto& e : g.edges()) {
      int a = idx(e.first), b = idx(e.second);
      adj[a].push_back(b);
      adj[b].push_back(a);
      mat[a][b] = mat[b][a] = 1;
      ++deg[a];
      ++deg[b];
    }
  }
};

// Lightweight adjacency-list view; no matrix, suitable for the large trees
// the replay verifier walks through.
struct ListView {
  std::vector<int> labels;
  std::vector<std::vector<int>> adj;

  explicit ListView(const LabeledGraph& g) : labels(g.labels()) {
    adj.assign(labels.size(), {});
    auto idx = [&](int label) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    for (const auto& e : g.edges()) {
      int a = idx(e.first), b = idx(e.second);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
};

std::vector<std::vector<int>> list_components(const ListView& v) {
  int n = static_cast<int>(v.labels.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int w : v.adj[x])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::string rooted_string(const ListView& v, int root, int parent) {
  std::vector<std::string> kids;
  for (int w : v.adj[root])
    if (w != parent) kids.push_back(rooted_string(v, w, root));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& s : kids) out += s;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const ListView& v, const std::vector<int>& members) {
  if (members.size() <= 2) return members;
  std::vector<int> deg(v.labels.size(), 0);
  std::vector<char> removed(v.labels.size(), 0);
  for (int x : members) deg[x] = static_cast<int>(v.adj[x].size());
  std::vector<int> cur;
  for (int x : members)
    if (deg[x] <= 1) cur.push_back(x);
  std::size_t alive = members.size();
  while (alive > 2 && !cur.empty()) {
    std::vector<int> next;
    for (int x : cur) {
      removed[x] = 1;
      --alive;
      for (int w : v.adj[x]) {
        if (removed[w]) continue;
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    if (alive <= 2) break;
    cur = std::move(next);
  }
  std::vector<int> centers;
  for (int x : members)
    if (!removed[x]) centers.push_back(x);
  return centers;
}

// ---- generic backtracking isomorphism ----

struct IsoSearch {
  const Dense& g;
  const Dense& h;
  std::vector<int> order;        // g-vertex visit order
  std::vector<int> mapping;      // g index -> h index or -1
  std::vector<char> used;        // h index used
  const std::function<bool(const IsoWitness&)>& cb;
  bool stopped = false;

  IsoSearch(const Dense& g_, const Dense& h_, const std::function<bool(const IsoWitness&)>& cb_)
      : g(g_), h(h_), cb(cb_) {}

  // Both directions: placed pairs must agree on adjacency and non-adjacency.
  bool feasible(int gv, int hv, std::size_t pos) const {
    if (g.deg[gv] != h.deg[hv]) return false;
    for (std::size_t i = 0; i < pos; ++i) {
      int w = order[i];
      if (g.mat[w][gv] != h.mat[mapping[w]][hv]) return false;
    }
    return true;
  }

  void run() {
    int n = static_cast<int>(g.labels.size());
    mapping.assign(n, -1);
    used.assign(n, 0);
    // visit order: BFS from highest-degree vertices, component by component
    std::vector<char> seen(n, 0);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return g.deg[a] > g.deg[b]; });
    for (int s : verts) {
      if (seen[s]) continue;
      std::vector<int> queue{s};
      seen[s] = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        order.push_back(v);
        std::vector<int> nb = g.adj[v];
        std::sort(nb.begin(), nb.end(), [&](int a, int b) { return g.deg[a] > g.deg[b]; });
        for (int w : nb)
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
    extend(0);
  }

  void extend(std::size_t pos) {
    if (stopped) return;
    if (pos == order.size()) {
      IsoWitness w;
      for (std::size_t i = 0; i < mapping.size(); ++i) w.map[g.labels[i]] = h.labels[mapping[i]];
      if (!cb(w)) stopped = true;
      return;
    }
    int gv = order[pos];
    for (int hv = 0; hv < static_cast<int>(h.labels.size()); ++hv) {
      if (used[hv] || !feasible(gv, hv, pos)) continue;
      mapping[gv] = hv;
      used[hv] = 1;
      extend(pos + 1);
      mapping[gv] = -1;
      used[hv] = 0;
      if (stopped) return;
    }
  }
};

bool quick_invariants_differ(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return true;
  auto pg = degree_profile(g), ph = degree_profile(h);
  return pg.sequence != ph.sequence;
}

}  // namespace

bool is_forest(const LabeledGraph& g) {
  ListView v(g);
  auto comps = list_components(v);
  std::size_t edges = g.edges().size();
  std::size_t n = g.labels().size();
  return edges + comps.size() == n;
}

std::optional<std::string> try_forest_certificate(const LabeledGraph& g) {
  ListView v(g);
  auto comps = list_components(v);
  if (g.edges().size() + comps.size() != g.labels().size()) return std::nullopt;
  std::vector<std::string> codes;
  codes.reserve(comps.size());
  for (const auto& members : comps) {
    std::string best;
    for (int c : tree_centers(v, members)) {
      std::string code = rooted_string(v, c, -1);
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

std::string forest_certificate(const LabeledGraph& g) {
  auto cert = try_forest_certificate(g);
  if (!cert) throw std::invalid_argument("forest_certificate: graph has a cycle");
  return *cert;
}

void for_each_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                          const std::function<bool(const IsoWitness&)>& cb) {
  if (quick_invariants_differ(g, h)) return;
  Dense dg(g), dh(h);
  IsoSearch search(dg, dh, cb);
  search.run();
}

std::optional<IsoWitness> isomorphism_first(const LabeledGraph& g, const LabeledGraph& h) {
  std::optional<IsoWitness> out;
  for_each_isomorphism(g, h, [&](const IsoWitness& w) {
    out = w;
    return false;
  });
  return out;
}

std::vector<IsoWitness> isomorphism_all(const LabeledGraph& g, const LabeledGraph& h) {
  std::vector<IsoWitness> out;
  for_each_isomorphism(g, h, [&](const IsoWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (quick_invariants_differ(g, h)) return false;
  if (is_forest(g)) {
    if (!is_forest(h)) return false;
    return forest_certificate(g) == forest_certificate(h);
  }
  return isomorphism_first(g, h).has_value();
}

unsigned long long automorphism_count(const LabeledGraph& g) {
  unsigned long long count = 0;
  for_each_isomorphism(g, g, [&](const IsoWitness&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<std::map<int, int>> subgraph_embedding(const LabeledGraph& pattern, const LabeledGraph& host) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  Dense dp(pattern), dh(host);
  int np = pattern.order(), nh = host.order();

  // visit pattern vertices component by component, high degree first
  std::vector<int> order;
  std::vector<char> seen(np, 0);
  std::vector<int> verts(np);
  std::iota(verts.begin(), verts.end(), 0);
  std::sort(verts.begin(), verts.end(), [&](int a, int b) { return dp.deg[a] > dp.deg[b]; });
  for (int s : verts) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      order.push_back(v);
      for (int w : dp.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }

  std::vector<int> mapping(np, -1);
  std::vector<char> used(nh, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    int pv = order[pos];
    for (int hv = 0; hv < nh; ++hv) {
      if (used[hv] || dh.deg[hv] < dp.deg[pv]) continue;
      bool ok = true;
      for (int w : dp.adj[pv])
        if (mapping[w] >= 0 && !dh.mat[hv][mapping[w]]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      mapping[pv] = hv;
      used[hv] = 1;
      if (extend(pos + 1)) return true;
      mapping[pv] = -1;
      used[hv] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::map<int, int> out;
  for (int i = 0; i < np; ++i) out[dp.labels[i]] = dh.labels[mapping[i]];
  return out;
}

bool contains_subgraph(const LabeledGraph& host, const LabeledGraph& pattern) {
  return subgraph_embedding(pattern, host).has_value();
}

namespace {

// Minimal adjacency bit string over all vertex orderings, with degree-based
// pruning. Exponential in the worst case; fine at the intended n <= ~12.
struct Canonizer {
  const Dense& d;
  int n;
  std::vector<int> best;       // best adjacency bits so far (flattened rows)
  std::vector<int> current;
  std::vector<int> perm;       // position -> vertex
  std::vector<char> used;
  bool have_best = false;

  explicit Canonizer(const Dense& dd) : d(dd), n(static_cast<int>(dd.labels.size())) {}

  void run() {
    perm.assign(n, -1);
    used.assign(n, 0);
    current.clear();
    place(0);
  }

  void place(int pos) {
    if (pos == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      // new row: adjacency of v against already placed vertices
      std::vector<int> row;
      row.reserve(pos);
      for (int i = 0; i < pos; ++i) row.push_back(d.mat[v][perm[i]] ? 0 : 1);
      // prefix pruning: compare with best's row at this position
      std::size_t base_len = current.size();
      current.insert(current.end(), row.begin(), row.end());
      bool prune = false;
      if (have_best) {
        for (std::size_t i = 0; i < current.size() && i < best.size(); ++i) {
          if (current[i] < best[i]) break;
          if (current[i] > best[i]) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) {
        perm[pos] = v;
        used[v] = 1;
        place(pos + 1);
        used[v] = 0;
      }
      current.resize(base_len);
    }
  }
};

}  // namespace

std::string canonical_key(const LabeledGraph& g) {
  // Isolated vertices only contribute their count.
  std::vector<int> active;
  for (int v : g.labels())
    if (g.degree(v) > 0) active.push_back(v);
  LabeledGraph core(active, g.edges());
  Dense d(core);
  Canonizer canon(d);
  canon.run();
  std::ostringstream os;
  os << g.order() << '|' << core.order() << '|';
  for (int b : canon.best) os << (b == 0 ? '1' : '0');
  return os.str();
}

}  // namespace amoeba
