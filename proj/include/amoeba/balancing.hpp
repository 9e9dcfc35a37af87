#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "amoeba/families.hpp"
#include "amoeba/graph.hpp"

namespace amoeba {

/// Thrown when a brute-force guard would be exceeded (CLI maps it to a
/// distinct exit code; --force lifts it).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SubgraphFamily {
  std::vector<LabeledGraph> members;  // pairwise non-isomorphic, no isolated vertices
};

/// All subgraphs of G with floor(e(G)/2) edges and no isolated vertices,
/// deduplicated up to isomorphism. Requires e(G) >= 2.
SubgraphFamily half_family(const LabeledGraph& g);

struct ExOptions {
  int guard_n = 10;
  bool force = false;
  std::size_t state_cap = 2000000;
};

struct ExResult {
  long long value = 0;
  LabeledGraph witness;  // an extremal graph on n labels
};

/// Exact Turan number ex(n, F): the maximum edge count of an n-vertex graph
/// containing no member of F, by breadth-first enumeration of F-free graphs
/// up to isomorphism (edge count ascending, canonical-form rejection).
ExResult ex_bruteforce(int n, const SubgraphFamily& family, const ExOptions& opts = {});

struct BalOptions {
  int guard_edges = 28;  // C(n,2) <= 28, i.e. n <= 8
  bool force = false;
  int threads = 1;
};

/// Exact balancing value at finite n: the maximum of min(|R|,|B|) over the
/// 2-edge-colorings of K_n containing no copy of G with floor(m/2) or
/// ceil(m/2) red edges; 0 when every coloring contains one. Enumeration is
/// halved by color-swap symmetry and may be chunked across threads.
long long bal_bruteforce(int n, const LabeledGraph& g, const BalOptions& opts = {});

/// MaxCut(G, l): the largest cut e(S, V-S) over |S| <= l (exact, subset
/// enumeration).
long long max_cut_bounded(const LabeledGraph& g, int l);

/// Largest l >= 0 with MaxCut(G, l) < floor(e(G)/2); always 0 <= l < n/2.
int cut_threshold(const LabeledGraph& g);

struct CutsResult {
  long long max_cut = 0;
  int threshold = 0;
};
CutsResult cuts(const LabeledGraph& g, int l);

struct LowerBounds {
  int partial_sum_ell = 0;      // largest l with d_1+...+d_l < floor(m/2)
  long long partial_sum_bound = 0;
  long long generic_ell = 0;    // floor((m-1)/(2k+1)), k = order
  long long generic_bound = 0;
  int cut_ell = 0;
  long long cut_bound = 0;
};

/// Lower bounds on bal(n, G) for a global amoeba G (caller asserts that).
LowerBounds lower_bounds(const LabeledGraph& g, long long n);

/// Extremal number of a star forest for large n: the maximum over i of
/// (i-1)(n-i+1) + C(i-1,2) + floor((d_i-1)(n-i+1)/2).
long long lidicky_ex(const StarForest& forest, long long n);

struct BoundsReport {
  std::string lower_formula, upper_formula;
  long long lower_value = 0, upper_value = 0;
};

/// Closed-form balancing bounds: T with k >= 6, A/B with k >= 5.
BoundsReport bounds_report(Family family, int k, long long n);

long long binom2(long long x);

}  // namespace amoeba
