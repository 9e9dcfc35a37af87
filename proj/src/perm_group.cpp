#include "amoeba/perm_group.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace amoeba {

unsigned long long factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n > 20) throw std::overflow_error("factorial: argument too large for 64 bits");
  unsigned long long r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long long>(i);
  return r;
}

/// Stabilizer chain with explicit transversals (deterministic Schreier-Sims).
/// level_gens[l] generates the pointwise stabilizer of base[0..l-1]; after
/// complete(0) every level is Schreier-closed, so the order is the product
/// of orbit sizes and sifting is an exact membership test. Left-to-right
/// composition throughout: a transversal element u for point p satisfies
/// u(base[l]) = p.
struct PermGroup::Chain {
  std::vector<int> domain;
  std::vector<int> base;
  std::vector<std::vector<Permutation>> level_gens;
  std::vector<std::vector<std::optional<Permutation>>> trans;

  int idx(int label) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), label);
    return static_cast<int>(it - domain.begin());
  }

  void add_level(int base_point) {
    base.push_back(base_point);
    level_gens.emplace_back();
    trans.emplace_back();
  }

  void recompute_orbit(std::size_t l) {
    auto& tr = trans[l];
    tr.assign(domain.size(), std::nullopt);
    int b = base[l];
    tr[idx(b)] = Permutation::identity(domain);
    std::vector<int> queue{b};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int p = queue[qi];
      const Permutation up = *tr[idx(p)];
      for (const Permutation& s : level_gens[l]) {
        int q = s.apply(p);
        if (!tr[idx(q)]) {
          tr[idx(q)] = compose(up, s);  // maps base[l] -> p -> q
          queue.push_back(q);
        }
      }
    }
  }

  // Sift g through levels >= from; identity residue means membership in the
  // subgroup at `from` (exact once the chain is complete).
  Permutation sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < base.size(); ++l) {
      int p = g.apply(base[l]);
      if (p == base[l]) continue;
      const auto& u = trans[l][idx(p)];
      if (!u) return g;
      g = compose(g, u->inverse());
    }
    return g;
  }

  void complete(std::size_t l) {
    if (l >= base.size()) return;
    recompute_orbit(l);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t pi = 0; pi < domain.size() && !again; ++pi) {
        if (!trans[l][pi]) continue;
        const Permutation up = *trans[l][pi];
        for (const Permutation& s : level_gens[l]) {
          int q = s.apply(domain[pi]);
          Permutation schreier = compose(compose(up, s), trans[l][idx(q)]->inverse());
          if (schreier.is_identity()) continue;
          Permutation residue = sift(std::move(schreier), l + 1);
          if (residue.is_identity()) continue;
          if (l + 1 == base.size()) {
            add_level(residue.moved_points().front());
          }
          level_gens[l + 1].push_back(std::move(residue));
          complete(l + 1);
          again = true;  // rescan this level against the grown chain
          break;
        }
      }
    }
  }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (std::size_t l = 0; l < base.size(); ++l) {
      unsigned long long cnt = 0;
      for (const auto& t : trans[l])
        if (t) ++cnt;
      o *= cnt;
    }
    return o;
  }
};

PermGroup::PermGroup(std::vector<int> domain, std::vector<Permutation> generators) {
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end())
    throw std::invalid_argument("PermGroup: duplicate labels in domain");
  domain_ = std::move(domain);
  for (auto& g : generators) {
    if (g.domain() == domain_) {
      gens_.push_back(std::move(g));
    } else {
      for (int x : g.domain())
        if (!std::binary_search(domain_.begin(), domain_.end(), x))
          throw std::invalid_argument("PermGroup: generator acts outside the domain");
      gens_.push_back(paste(g, Permutation::identity(domain_)));
    }
  }
}

PermGroup PermGroup::trivial(std::vector<int> domain) { return PermGroup(std::move(domain), {}); }

std::shared_ptr<PermGroup::Chain> PermGroup::build_chain(const std::vector<int>& base_prefix) const {
  auto chain = std::make_shared<Chain>();
  chain->domain = domain_;
  std::vector<Permutation> gens;
  for (const auto& g : gens_)
    if (!g.is_identity()) gens.push_back(g);

  for (int b : base_prefix)
    if (std::find(chain->base.begin(), chain->base.end(), b) == chain->base.end()) chain->add_level(b);
  for (const auto& g : gens) {
    bool moves_base = false;
    for (int b : chain->base) moves_base = moves_base || g.apply(b) != b;
    if (!moves_base) chain->add_level(g.moved_points().front());
  }
  if (chain->base.empty()) chain->add_level(domain_.empty() ? 0 : domain_.front());

  chain->level_gens[0] = std::move(gens);
  for (std::size_t l = 0; l < chain->base.size(); ++l) chain->recompute_orbit(l);
  chain->complete(0);
  return chain;
}

const PermGroup::Chain& PermGroup::default_chain() const {
  if (!chain_) chain_ = build_chain({});
  return *chain_;
}

unsigned long long PermGroup::order() const {
  if (domain_.empty()) return 1;
  return default_chain().order();
}

bool PermGroup::contains(const Permutation& p) const {
  Permutation q = p.domain() == domain_ ? p : paste(p, Permutation::identity(domain_));
  if (q.domain() != domain_) throw std::invalid_argument("contains: domain mismatch");
  if (q.is_identity()) return true;
  return default_chain().sift(std::move(q), 0).is_identity();
}

PermGroup PermGroup::stabilizer(int label) const {
  if (!std::binary_search(domain_.begin(), domain_.end(), label))
    throw std::invalid_argument("stabilizer: label not in domain");
  auto chain = build_chain({label});
  std::vector<Permutation> sub;
  for (std::size_t l = 1; l < chain->level_gens.size(); ++l)
    for (const auto& g : chain->level_gens[l]) sub.push_back(g);
  return PermGroup(domain_, std::move(sub));
}

std::optional<Permutation> PermGroup::transversal_element(int i, int j) const {
  if (!std::binary_search(domain_.begin(), domain_.end(), i) ||
      !std::binary_search(domain_.begin(), domain_.end(), j))
    throw std::invalid_argument("transversal_element: label not in domain");
  auto chain = build_chain({i});
  const auto& u = chain->trans[0][chain->idx(j)];
  if (!u) return std::nullopt;
  return *u;
}

std::vector<int> PermGroup::orbit(int label) const {
  auto chain = build_chain({label});
  std::vector<int> out;
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (chain->trans[0][i]) out.push_back(domain_[i]);
  return out;
}

bool PermGroup::is_symmetric_on(const std::vector<int>& labels) const {
  return order() == factorial(static_cast<int>(labels.size()));
}

}  // namespace amoeba
