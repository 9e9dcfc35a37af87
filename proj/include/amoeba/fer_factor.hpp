#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "amoeba/families.hpp"
#include "amoeba/graph.hpp"
#include "amoeba/perm.hpp"

namespace amoeba {

/// A permutation of the canonical T_k label set together with a chain of
/// edge replacements realizing it: replaying the chain from the canonical
/// tree yields copy_under(tree, perm), and every intermediate graph is
/// isomorphic to the tree.
struct FerObject {
  Permutation perm;
  std::vector<EdgeReplacement> chain;
  std::size_t length() const { return chain.size(); }
};

/// Left-to-right product: perm = compose(f.perm, g.perm); g's chain is
/// appended with every endpoint rewritten through f.perm^{-1} (the unique
/// rewriting under which validity is closed under products).
FerObject fer_product(const FerObject& f, const FerObject& g);

/// Complete lookup table for T_k with k <= 4: every permutation of the
/// label set mapped to a valid FerObject. Transposition entries (1 x) with
/// x != 0 additionally keep label 0 on a maximum-degree vertex throughout
/// their replay, which is what allows them to be reused inside bigger
/// trees. Built once per k and cached.
class BaseTable {
 public:
  static const BaseTable& get(int k);  // k in 1..4

  const FerObject& entry(const Permutation& p) const;
  const FerObject& transposition_entry(int x) const;  // the (1 x) entry
  std::size_t size() const { return map_.size(); }
  const LabeledGraph& tree() const { return tree_; }

 private:
  explicit BaseTable(int k);
  int k_;
  LabeledGraph tree_;
  std::unordered_map<Permutation, FerObject, PermHash> map_;
};

/// One factorization session for the Fibonacci-type tree T_k: holds the
/// per-level roots, the two single-replacement interval swaps, and the
/// memo table. A session is single-threaded; distinct sessions are
/// independent.
class FactorSession {
 public:
  explicit FactorSession(int k, bool memoize = true);

  int k() const { return k_; }
  const LabeledGraph& tree() const { return trees_[k_]; }
  const LabeledGraph& tree(int j) const { return trees_[j]; }

  /// FerObject for the transposition (1 x); x may be any label except 1.
  FerObject transposition_fer(int x);

  /// Factors an arbitrary permutation of labels(T_k): writes it as a
  /// product of transpositions (1 x), finds a FerObject per transposition
  /// and multiplies them.
  FerObject factor(const Permutation& p);

  void clear_memo() { memo_.clear(); }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Level {
    int a = 0, c = 0, d = 0, n = 0;  // b = 0; B=[0,a) A=[a,c) C=[c,d) D=[d,n)
    FerObject swap_b_cd;             // single replacement ab -> ac
    FerObject swap_a_c;              // single replacement cd -> ad
  };

  int k_;
  bool memoize_;
  std::vector<LabeledGraph> trees_;  // index j = 1..k
  std::vector<Level> levels_;        // index j = 5..k (entries below unused)
  std::map<std::pair<int, int>, FerObject> memo_;
  int depth_ = 0;

  FerObject recursive_fer(int x, int j);
  FerObject extend_to_level(FerObject obj, int j) const;          // from T_{j-1} labels
  FerObject shift_into_block(FerObject obj, int c, int j) const;  // from T_{j-2} labels, +c
};

struct ReplayResult {
  bool ok = false;
  std::size_t failed_index = 0;  // == chain length for a final-copy mismatch
  std::string reason;
};

/// Replays the chain on canonical T_k, checking that every intermediate is
/// isomorphic to T_k and that the final edge set equals the exact copy
/// under the object's permutation.
ReplayResult replay_verify(const FerObject& f, int k);

/// Peephole shortening: drops trivial steps and merges consecutive steps
/// where the first step's added edge is the second step's removed edge.
/// The permutation is unchanged and validity is preserved.
FerObject simplify(const FerObject& f);

/// Max chain length of transposition_fer(x) over all x (pre-simplification).
std::size_t length_audit(int k);

/// (0 1)(2 3)...(n-2 n-1): the input shape maximizing the transposition
/// count in factor().
Permutation worst_case_permutation(int k);

}  // namespace amoeba
