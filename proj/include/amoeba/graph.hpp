#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amoeba/perm.hpp"

namespace amoeba {

using Edge = std::pair<int, int>;  // always normalized: first < second

Edge make_edge(int a, int b);  // throws on a == b (no loops) or negative labels

/// Simple undirected graph on an explicit set of non-negative integer
/// labels. Labels need not be contiguous; isolated labels are allowed.
/// Immutable after construction; all operations return new values.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(std::vector<int> labels, std::vector<Edge> edges);

  /// Graph whose label set is exactly the endpoints of `edges`.
  static LabeledGraph from_edges(std::vector<Edge> edges);

  const std::vector<int>& labels() const { return labels_; }  // sorted
  const std::vector<Edge>& edges() const { return edges_; }   // sorted
  int order() const { return static_cast<int>(labels_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  bool has_label(int x) const;
  bool has_edge(int a, int b) const;
  int degree(int label) const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> max_degree_labels() const;
  std::vector<int> neighbors(int label) const;

  LabeledGraph with_isolated_label(int x) const;  // G plus one fresh label
  LabeledGraph shifted(int offset) const;         // all labels += offset

  bool operator==(const LabeledGraph& o) const { return labels_ == o.labels_ && edges_ == o.edges_; }
  bool operator!=(const LabeledGraph& o) const { return !(*this == o); }

 private:
  std::vector<int> labels_;
  std::vector<Edge> edges_;
};

/// One edge replacement: remove one edge, add one non-edge. The neutral
/// replacement changes nothing; remove == add is the trivial replacement on
/// an existing edge and is always feasible.
struct EdgeReplacement {
  std::optional<Edge> removed;
  std::optional<Edge> added;

  static EdgeReplacement neutral() { return {}; }
  static EdgeReplacement move(Edge r, Edge a) { return {r, a}; }

  bool is_neutral() const { return !removed.has_value(); }
  bool is_trivial() const { return is_neutral() || *removed == *added; }

  auto operator<=>(const EdgeReplacement&) const = default;
};

struct IsoWitness {
  std::map<int, int> map;  // bijection: labels of the source -> labels of the target
};

/// The copy G_sigma of G on the same label set: {i,j} is an edge of the copy
/// iff {sigma(i), sigma(j)} is an edge of G. Requires sigma to be a
/// bijection on labels(G).
LabeledGraph copy_under(const LabeledGraph& g, const Permutation& sigma);

/// G - removed + added. Requires: removed is an edge, added is not (unless
/// equal to removed), and both pairs stay inside the label set.
LabeledGraph apply_replacement(const LabeledGraph& g, const EdgeReplacement& r);

bool is_forest(const LabeledGraph& g);

/// Canonical certificate of a forest: equal strings iff isomorphic.
/// Throws std::invalid_argument on graphs with cycles.
std::string forest_certificate(const LabeledGraph& g);

/// Certificate when g is a forest, nullopt otherwise.
std::optional<std::string> try_forest_certificate(const LabeledGraph& g);

std::optional<IsoWitness> isomorphism_first(const LabeledGraph& g, const LabeledGraph& h);
std::vector<IsoWitness> isomorphism_all(const LabeledGraph& g, const LabeledGraph& h);
/// Streams witnesses; stop early by returning false from the callback.
void for_each_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                          const std::function<bool(const IsoWitness&)>& cb);
bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h);
unsigned long long automorphism_count(const LabeledGraph& g);

/// Injective map pattern -> host preserving pattern edges (subgraph, not
/// induced). Returns a witness map or nullopt.
std::optional<std::map<int, int>> subgraph_embedding(const LabeledGraph& pattern, const LabeledGraph& host);
bool contains_subgraph(const LabeledGraph& host, const LabeledGraph& pattern);

struct DegreeProfile {
  std::vector<int> sequence;       // non-increasing
  std::vector<long long> counts;   // counts[i] = number of vertices of degree i
};
DegreeProfile degree_profile(const LabeledGraph& g);

/// Label-independent canonical key; equal keys iff isomorphic.
/// Intended for small graphs (n <= ~12 on the non-trivial part).
std::string canonical_key(const LabeledGraph& g);

// --- serialization (graph_io.cpp) ---

std::string to_graph6(const LabeledGraph& g);       // on sorted labels re-indexed 0..n-1
LabeledGraph from_graph6(const std::string& text);  // labels 0..n-1
std::string to_dot(const LabeledGraph& g);
std::string to_json(const LabeledGraph& g);               // {"labels":[...],"edges":[[i,j],...]}
LabeledGraph graph_from_json(const std::string& text);

}  // namespace amoeba
