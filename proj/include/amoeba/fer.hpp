#pragma once

#include <string>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/perm.hpp"
#include "amoeba/perm_group.hpp"

namespace amoeba {

/// The set of label permutations realizing one feasible edge replacement.
/// Under the exact-copy convention (copy_under(G, s) equals G - e + e'),
/// this set is the coset {representative * a : a in Aut-copies of G} and has
/// size |A_G|.
struct FerCoset {
  EdgeReplacement replacement;
  Permutation representative;
};

/// All feasible edge replacements of G: every (e in E, e' in non-edges or
/// e' == e) whose replacement gives a graph isomorphic to G, plus the
/// neutral replacement. Deterministically ordered.
std::vector<EdgeReplacement> enumerate_feasible(const LabeledGraph& g);

bool is_feasible(const LabeledGraph& g, const EdgeReplacement& r);

/// Throws std::invalid_argument if r is not feasible.
FerCoset fer_coset(const LabeledGraph& g, const EdgeReplacement& r);

/// Exact membership: copy_under(g, p) == apply_replacement(g, c.replacement).
bool coset_contains(const LabeledGraph& g, const FerCoset& c, const Permutation& p);

/// Generators of A_G (the permutations whose copy equals G itself).
std::vector<Permutation> aut_generators(const LabeledGraph& g);
PermGroup aut_group(const LabeledGraph& g);

/// Generators of the group generated by all feasible-replacement
/// permutations: A_G generators plus one representative per non-trivial
/// feasible replacement (one per coset suffices).
std::vector<Permutation> fer_generators(const LabeledGraph& g);
PermGroup fer_group(const LabeledGraph& g);

bool is_local_amoeba(const LabeledGraph& g);
bool is_global_amoeba(const LabeledGraph& g);

/// Generators of the subgroup generated by the feasible-replacement
/// permutations fixing the given label.
std::vector<Permutation> point_fixing_generators(const LabeledGraph& g, int label);
PermGroup point_fixing_group(const LabeledGraph& g, int label);

/// True iff the group above has order (n-1)!.
bool is_stem_symmetric(const LabeledGraph& g, int label);

struct RecognitionReport {
  LabeledGraph graph;
  std::vector<EdgeReplacement> feasible;
  unsigned long long aut_order = 0;
  unsigned long long fer_order = 0;
  bool local = false;
  bool global = false;
  std::vector<int> stem_symmetric_at;  // max-degree labels where stem symmetry holds
};

RecognitionReport recognize(const LabeledGraph& g);

}  // namespace amoeba
