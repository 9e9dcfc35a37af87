#include "amoeba/fer_factor.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "amoeba/fer.hpp"

namespace amoeba {

namespace {

// In-place product: appends g's rewritten chain to f and updates the
// permutation. Keeps the left fold in factor() free of quadratic copying.
void fer_product_append(FerObject& f, const FerObject& g) {
  if (f.perm.domain() != g.perm.domain())
    throw std::invalid_argument("fer_product: objects live on different label sets");
  Permutation inv = f.perm.inverse();
  f.chain.reserve(f.chain.size() + g.chain.size());
  for (const auto& step : g.chain) {
    if (step.is_neutral()) {
      f.chain.push_back(step);
      continue;
    }
    f.chain.push_back(EdgeReplacement::move(
        make_edge(inv.apply(step.removed->first), inv.apply(step.removed->second)),
        make_edge(inv.apply(step.added->first), inv.apply(step.added->second))));
  }
  f.perm = compose(f.perm, g.perm);
}

}  // namespace

FerObject fer_product(const FerObject& f, const FerObject& g) {
  FerObject out = f;
  fer_product_append(out, g);
  return out;
}

namespace {

FerObject product_chain(std::initializer_list<const FerObject*> parts) {
  FerObject out;
  bool first = true;
  for (const FerObject* p : parts) {
    if (first) {
      out = *p;
      first = false;
    } else {
      fer_product_append(out, *p);
    }
  }
  return out;
}

Permutation perm_from_witness(const std::map<int, int>& w) {
  std::vector<int> dom, img;
  dom.reserve(w.size());
  img.reserve(w.size());
  for (const auto& [from, to] : w) {
    dom.push_back(from);
    img.push_back(to);
  }
  return Permutation::from_images(std::move(dom), std::move(img));
}

}  // namespace

// ---- base tables ----

BaseTable::BaseTable(int k) : k_(k) {
  if (k < 1 || k > 4) throw std::invalid_argument("BaseTable: k must be in 1..4");
  tree_ = build(Family::T, k).graph;
  const auto& labels = tree_.labels();
  const int n = tree_.order();

  std::vector<Permutation> auts;
  for_each_isomorphism(tree_, tree_, [&](const IsoWitness& w) {
    auts.push_back(perm_from_witness(w.map));
    return true;
  });

  std::vector<FerObject> atoms;
  for (const auto& a : auts)
    if (!a.is_identity()) atoms.push_back({a, {}});
  for (const auto& r : enumerate_feasible(tree_)) {
    if (r.is_trivial()) continue;
    Permutation rep = fer_coset(tree_, r).representative;
    for (const auto& a : auts) atoms.push_back({compose(rep, a), {r}});
  }

  std::vector<char> root_ok(n + 1, 0);
  for (int v : tree_.max_degree_labels()) root_ok[v] = 1;
  auto in_restricted = [&](const Permutation& p) { return root_ok[p.apply(0)] != 0; };

  // Shortest chains by uniform-cost search, in two phases. Phase one stays
  // inside the states keeping label 0 on a maximum-degree vertex, so every
  // partial replay of those chains does too; phase two fills the remaining
  // permutations without touching phase-one entries.
  using QItem = std::pair<std::size_t, Permutation>;
  auto cmp = [](const QItem& x, const QItem& y) { return x.first > y.first; };
  auto run_phase = [&](std::unordered_map<Permutation, FerObject, PermHash>& table, bool restricted,
                       const std::unordered_map<Permutation, FerObject, PermHash>& frozen) {
    std::priority_queue<QItem, std::vector<QItem>, decltype(cmp)> pq(cmp);
    for (const auto& [p, obj] : table) pq.push({obj.length(), p});
    while (!pq.empty()) {
      auto [len, p] = pq.top();
      pq.pop();
      auto it = table.find(p);
      if (it == table.end() || it->second.length() != len) continue;  // stale
      for (const auto& atom : atoms) {
        FerObject next = fer_product(it->second, atom);
        if (restricted && !in_restricted(next.perm)) continue;
        if (frozen.count(next.perm)) continue;
        auto found = table.find(next.perm);
        if (found == table.end() || next.length() < found->second.length()) {
          table[next.perm] = next;
          pq.push({next.length(), next.perm});
        }
      }
    }
  };

  std::unordered_map<Permutation, FerObject, PermHash> empty_frozen;
  std::unordered_map<Permutation, FerObject, PermHash> phase1;
  phase1[Permutation::identity(labels)] = FerObject{Permutation::identity(labels), {}};
  run_phase(phase1, true, empty_frozen);

  map_ = phase1;
  run_phase(map_, false, phase1);

  if (map_.size() != factorial(n))
    throw std::logic_error("BaseTable: table is incomplete (expected all permutations)");
}

const BaseTable& BaseTable::get(int k) {
  static const BaseTable t1(1), t2(2), t3(3), t4(4);
  switch (k) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
  }
  throw std::invalid_argument("BaseTable::get: k must be in 1..4");
}

const FerObject& BaseTable::entry(const Permutation& p) const {
  auto it = map_.find(p);
  if (it == map_.end()) throw std::invalid_argument("BaseTable: permutation not on this label set");
  return it->second;
}

const FerObject& BaseTable::transposition_entry(int x) const {
  return entry(Permutation::transposition(tree_.labels(), 1, x));
}

// ---- factor session ----

FactorSession::FactorSession(int k, bool memoize) : k_(k), memoize_(memoize) {
  if (k < 1) throw std::invalid_argument("FactorSession: k must be >= 1");
  trees_.resize(k + 1);
  for (int j = 1; j <= k; ++j) trees_[j] = build(Family::T, j).graph;
  levels_.resize(k + 1);
  for (int j = 5; j <= k; ++j) {
    Level lv;
    lv.n = static_cast<int>(2 * fib(j));
    lv.a = static_cast<int>(2 * fib(j - 2));
    lv.c = static_cast<int>(2 * fib(j - 1));
    lv.d = lv.c + static_cast<int>(2 * fib(j - 3));
    const auto& labels = trees_[j].labels();

    std::vector<std::vector<int>> b_cd_cycles, a_c_cycles;
    for (int t = 0; t < lv.a; ++t) b_cd_cycles.push_back({t, t + lv.c});
    for (int t = 0; t < lv.d - lv.c; ++t) a_c_cycles.push_back({lv.a + t, lv.c + t});
    lv.swap_b_cd = FerObject{Permutation::from_cycles(labels, b_cd_cycles),
                             {EdgeReplacement::move(make_edge(lv.a, 0), make_edge(lv.a, lv.c))}};
    lv.swap_a_c = FerObject{Permutation::from_cycles(labels, a_c_cycles),
                            {EdgeReplacement::move(make_edge(lv.c, lv.d), make_edge(lv.a, lv.d))}};
    for (const FerObject* obj : {&lv.swap_b_cd, &lv.swap_a_c}) {
      ReplayResult rr = replay_verify(*obj, j);
      if (!rr.ok) throw std::logic_error("FactorSession: interval swap failed replay at level " + std::to_string(j));
    }
    levels_[j] = std::move(lv);
  }
}

FerObject FactorSession::extend_to_level(FerObject obj, int j) const {
  const auto& labels = trees_[j].labels();
  std::vector<int> img(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int x = labels[i];
    img[i] = obj.perm.in_domain(x) ? obj.perm.apply(x) : x;
  }
  obj.perm = Permutation::from_images(labels, std::move(img));
  return obj;
}

FerObject FactorSession::shift_into_block(FerObject obj, int c, int j) const {
  const auto& labels = trees_[j].labels();
  std::vector<int> img(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int x = labels[i];
    img[i] = obj.perm.in_domain(x - c) ? obj.perm.apply(x - c) + c : x;
  }
  obj.perm = Permutation::from_images(labels, std::move(img));
  for (auto& step : obj.chain) {
    if (step.is_neutral()) continue;
    step = EdgeReplacement::move(make_edge(step.removed->first + c, step.removed->second + c),
                                 make_edge(step.added->first + c, step.added->second + c));
  }
  return obj;
}

FerObject FactorSession::recursive_fer(int x, int j) {
  if (x == 1) throw std::invalid_argument("recursive_fer: x must differ from the anchor label 1");
  if (x < 0 || x >= trees_[j].order()) throw std::invalid_argument("recursive_fer: x is not a label of T_k");
  if (memoize_) {
    auto it = memo_.find({x, j});
    if (it != memo_.end()) return it->second;
  }
  if (++depth_ > 8 * (k_ + 1)) throw std::logic_error("recursive_fer: recursion depth guard tripped");

  FerObject result;
  if (j <= 4) {
    result = BaseTable::get(j).transposition_entry(x);
  } else {
    const Level& lv = levels_[j];
    if (x == 0) {
      // The anchored transposition (1 0) moves the root, which no chain of
      // sub-block objects can do. Conjugating through the B <-> C u D swap:
      // (1 0) = swap * (1 c) * (1 c+1) * (1 c) * swap, all factors known.
      FerObject rc = recursive_fer(lv.c, j);
      FerObject rx0 = recursive_fer(lv.c + 1, j);
      result = product_chain({&lv.swap_b_cd, &rc, &rx0, &rc, &lv.swap_b_cd});
    } else if (x < lv.c) {  // A u B: same label inside T_{j-1}
      result = extend_to_level(recursive_fer(x, j - 1), j);
    } else if (x < lv.d) {  // C: conjugate by the A <-> C swap into A
      FerObject inner = recursive_fer(lv.swap_a_c.perm.apply(x), j);
      result = product_chain({&lv.swap_a_c, &inner, &lv.swap_a_c});
    } else {  // D: route through x0 = c+1 and the shifted T_{j-2} block
      FerObject via = recursive_fer(lv.c + 1, j);
      FerObject inner = shift_into_block(recursive_fer(x - lv.c, j - 2), lv.c, j);
      result = product_chain({&via, &inner, &via});
    }
  }
  --depth_;

  if (result.perm != Permutation::transposition(trees_[j].labels(), 1, x))
    throw std::logic_error("recursive_fer: produced object does not realize the transposition");
  if (memoize_) memo_[{x, j}] = result;
  return result;
}

FerObject FactorSession::transposition_fer(int x) { return recursive_fer(x, k_); }

FerObject FactorSession::factor(const Permutation& p) {
  if (p.domain() != tree().labels()) throw std::invalid_argument("factor: permutation domain must be labels(T_k)");
  std::vector<int> targets;
  for (const auto& cyc : p.cycles()) {
    auto at = std::find(cyc.begin(), cyc.end(), 1);
    if (at != cyc.end()) {
      // rotate so the anchor label leads, then peel from the left
      std::vector<int> rot(at, cyc.end());
      rot.insert(rot.end(), cyc.begin(), at);
      for (std::size_t i = 1; i < rot.size(); ++i) targets.push_back(rot[i]);
    } else {
      for (int v : cyc) targets.push_back(v);
      targets.push_back(cyc.front());
    }
  }

  // validate the transposition list by recomposition before resolving it
  Permutation check = Permutation::identity(tree().labels());
  for (int x : targets) check = compose(check, Permutation::transposition(tree().labels(), 1, x));
  if (check != p) throw std::logic_error("factor: transposition decomposition failed recomposition");

  FerObject out{Permutation::identity(tree().labels()), {}};
  for (int x : targets) {
    FerObject piece = transposition_fer(x);
    fer_product_append(out, piece);
  }
  if (out.perm != p) throw std::logic_error("factor: product does not realize the input permutation");
  return out;
}

// ---- verification, simplification, audits ----

ReplayResult replay_verify(const FerObject& f, int k) {
  LabeledGraph base = build(Family::T, k).graph;
  if (f.perm.domain() != base.labels()) return {false, 0, "permutation domain is not labels(T_k)"};
  const std::string base_cert = forest_certificate(base);
  LabeledGraph cur = base;
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    const auto& step = f.chain[i];
    if (!step.is_neutral()) {
      if (!cur.has_edge(step.removed->first, step.removed->second))
        return {false, i, "removed edge absent at step"};
      if (*step.removed != *step.added && cur.has_edge(step.added->first, step.added->second))
        return {false, i, "added edge already present at step"};
      cur = apply_replacement(cur, step);
    }
    auto cert = try_forest_certificate(cur);
    if (!cert || *cert != base_cert) return {false, i, "intermediate graph not isomorphic"};
  }
  if (cur != copy_under(base, f.perm)) return {false, f.chain.size(), "final graph is not the exact copy"};
  return {true, 0, ""};
}

FerObject simplify(const FerObject& f) {
  FerObject out{f.perm, f.chain};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EdgeReplacement> next;
    next.reserve(out.chain.size());
    for (const auto& step : out.chain) {
      if (step.is_trivial()) {
        changed = true;
        continue;
      }
      next.push_back(step);
    }
    std::vector<EdgeReplacement> merged;
    merged.reserve(next.size());
    for (std::size_t i = 0; i < next.size();) {
      if (i + 1 < next.size() && *next[i].added == *next[i + 1].removed) {
        // remove a add b, then remove b add c: together remove a add c
        merged.push_back(EdgeReplacement::move(*next[i].removed, *next[i + 1].added));
        i += 2;
        changed = true;
      } else if (i + 1 < next.size() && *next[i].removed == *next[i + 1].added) {
        // remove a add b, then remove c add a: together remove c add b
        merged.push_back(EdgeReplacement::move(*next[i + 1].removed, *next[i].added));
        i += 2;
        changed = true;
      } else {
        merged.push_back(next[i]);
        i += 1;
      }
    }
    out.chain = std::move(merged);
  }
  return out;
}

std::size_t length_audit(int k) {
  FactorSession session(k);
  std::size_t max_len = 0;
  for (int x : session.tree().labels()) {
    if (x == 1) continue;
    max_len = std::max(max_len, session.transposition_fer(x).length());
  }
  return max_len;
}

Permutation worst_case_permutation(int k) {
  LabeledGraph tree = build(Family::T, k).graph;
  std::vector<std::vector<int>> cycles;
  const auto& labels = tree.labels();
  for (std::size_t i = 0; i + 1 < labels.size(); i += 2) cycles.push_back({labels[i], labels[i + 1]});
  return Permutation::from_cycles(labels, cycles);
}

}  // namespace amoeba
