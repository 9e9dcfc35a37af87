#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace amoeba {

/// A bijection on a finite set of non-negative integer labels.
///
/// The global composition convention is left-to-right:
/// compose(s, t) applies s first, so compose(s, t)(x) == t(s(x)).
/// Every module composes through compose(); no ad hoc map chaining.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::vector<int> domain);
  static Permutation from_images(std::vector<int> domain, std::vector<int> images);
  static Permutation transposition(std::vector<int> domain, int a, int b);
  // cycles: list of cycles over the domain; unlisted points are fixed.
  static Permutation from_cycles(std::vector<int> domain, const std::vector<std::vector<int>>& cycles);

  const std::vector<int>& domain() const { return dom_; }
  const std::vector<int>& images() const { return img_; }

  int apply(int x) const;  // throws std::out_of_range if x is not in the domain
  bool in_domain(int x) const;

  Permutation inverse() const;
  bool is_identity() const;
  std::vector<int> moved_points() const;
  bool fixes(int x) const { return apply(x) == x; }

  /// Disjoint cycles of length >= 2, each rotated to start at its least
  /// element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  std::string cycle_string() const;  // "(0 3)(1 5)", "()" for the identity

  bool operator==(const Permutation& o) const { return dom_ == o.dom_ && img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  std::uint64_t hash() const;

 private:
  std::vector<int> dom_;  // sorted ascending
  std::vector<int> img_;  // img_[i] = image of dom_[i]
  bool contiguous_ = true;

  void init_flags();
  int index_of(int x) const;  // -1 if absent
};

/// Left-to-right product: (s * t)(x) = t(s(x)). Domains must coincide.
Permutation compose(const Permutation& s, const Permutation& t);

/// Pasting of two bijections that agree on the overlap of their domains:
/// acts as s on s's domain and as t elsewhere on t's domain.
Permutation paste(const Permutation& s, const Permutation& t);

/// Parse cycle notation like "(0 3)(1 5)" or "(1 2 3)" over the given domain.
/// Commas and whitespace both separate entries. "()" and "" give the identity.
Permutation parse_cycles(const std::string& text, std::vector<int> domain);

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace amoeba
