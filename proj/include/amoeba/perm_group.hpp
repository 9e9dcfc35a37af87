#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "amoeba/perm.hpp"

namespace amoeba {

unsigned long long factorial(int n);  // throws for n > 20 (would overflow)

/// Permutation group on a finite label set, given by generators.
///
/// Order, membership, stabilizers and transversals go through a
/// deterministic base/strong-generating-set chain built lazily. The chain
/// build is not thread safe; build (by querying once) before sharing.
class PermGroup {
 public:
  PermGroup(std::vector<int> domain, std::vector<Permutation> generators);
  static PermGroup trivial(std::vector<int> domain);

  const std::vector<int>& domain() const { return domain_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  unsigned long long order() const;
  bool contains(const Permutation& p) const;

  /// Subgroup of elements fixing the given label.
  PermGroup stabilizer(int label) const;

  /// Some element g with g(i) = j, or nullopt if j is not in the orbit of i.
  std::optional<Permutation> transversal_element(int i, int j) const;

  std::vector<int> orbit(int label) const;

  /// True iff the group is the full symmetric group on `labels`.
  /// Precondition: every generator fixes all points outside `labels`.
  bool is_symmetric_on(const std::vector<int>& labels) const;

 private:
  std::vector<int> domain_;  // sorted
  std::vector<Permutation> gens_;

  struct Chain;
  mutable std::shared_ptr<Chain> chain_;  // default-base chain, built lazily

  std::shared_ptr<Chain> build_chain(const std::vector<int>& base_prefix) const;
  const Chain& default_chain() const;
};

}  // namespace amoeba
