#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amoeba/graph.hpp"

namespace amoeba {

/// Fibonacci numbers with F_1 = F_2 = 1. fib(0) = 0.
long long fib(int k);

enum class Family { T, A, B };
Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

struct TreeRoots {
  int a = -1, b = -1, c = -1, d = -1;
};

struct Interval {
  int lo = 0, hi = -1;  // inclusive; empty if hi < lo
  bool contains(int x) const { return lo <= x && x <= hi; }
  int size() const { return hi - lo + 1; }
};

struct TreeRegions {
  Interval A, B, C, D;
};

/// A member of one of the recursive tree families with its canonical
/// labeling. Labels are 0..n-1. Each recursive sub-copy occupies a
/// contiguous interval carrying the canonical labeling of the smaller tree
/// shifted by the interval start, so every sub-copy root has local label 0
/// and label 1 is adjacent to label 0. The four-part decomposition (roots
/// a, b, c, d and regions A, B, C, D) is populated when the recursion depth
/// allows it (T: k >= 5, A/B: k >= 3). For family B the pendant leaf
/// attached to the root carries the last label and sits outside the four
/// intervals.
struct CanonicalTree {
  Family family = Family::T;
  int k = 0;
  LabeledGraph graph;
  std::optional<TreeRoots> roots;
  std::optional<TreeRegions> regions;
};

CanonicalTree build(Family family, int k);  // throws for k < 1

/// Closed-form profile; entry i (1-based via index) is |V_i|.
/// Valid for T with k >= 4 and A with k >= 2.
std::vector<long long> profile_closed_form(Family family, int k);

enum class ForestFamily { S, SPlus, R };

/// Star forest given by its multiset of star degrees (non-increasing;
/// degree-1 entries are independent edges) plus a graph realization on
/// labels 0..v-1 with consecutive star blocks.
struct StarForest {
  std::vector<int> star_degrees;
  LabeledGraph graph;
};

/// S_k (k >= 5), S_k^+ (k >= 5), R_k (k >= 4).
StarForest star_forest(ForestFamily f, int k);

/// Subgraph embedding decision with witness (injective, edge-preserving).
std::optional<std::map<int, int>> embeds_in(const StarForest& forest, const CanonicalTree& host);

/// Structured embedding witness following the recursive constructions:
/// S_k and S_k^+ into T_k, R_k into A_k (hence into B_k). The returned map
/// sends forest labels into host labels; verify with verify_embedding.
std::map<int, int> family_embedding(ForestFamily f, int k);

bool verify_embedding(const LabeledGraph& pattern, const LabeledGraph& host,
                      const std::map<int, int>& map);

}  // namespace amoeba
