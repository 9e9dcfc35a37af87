#include "amoeba/fer.hpp"

#include <algorithm>
#include <stdexcept>

namespace amoeba {

std::vector<EdgeReplacement> enumerate_feasible(const LabeledGraph& g) {
  std::vector<EdgeReplacement> out;
  out.push_back(EdgeReplacement::neutral());
  std::vector<Edge> candidates;  // non-edges
  const auto& labels = g.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (!g.has_edge(labels[i], labels[j])) candidates.push_back({labels[i], labels[j]});
  for (const auto& e : g.edges()) {
    out.push_back(EdgeReplacement::move(e, e));  // trivially feasible
    for (const auto& ne : candidates) {
      EdgeReplacement r = EdgeReplacement::move(e, ne);
      if (is_isomorphic(apply_replacement(g, r), g)) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_feasible(const LabeledGraph& g, const EdgeReplacement& r) {
  if (r.is_neutral()) return true;
  if (!g.has_edge(r.removed->first, r.removed->second)) return false;
  if (*r.removed == *r.added) return true;
  if (g.has_edge(r.added->first, r.added->second)) return false;
  return is_isomorphic(apply_replacement(g, r), g);
}

FerCoset fer_coset(const LabeledGraph& g, const EdgeReplacement& r) {
  if (!is_feasible(g, r)) throw std::invalid_argument("fer_coset: replacement is not feasible");
  if (r.is_trivial()) return {r, Permutation::identity(g.labels())};
  LabeledGraph h = apply_replacement(g, r);
  // A permutation s with copy_under(g, s) == h is exactly an isomorphism
  // from h onto g (edge {i,j} of h iff edge {s(i), s(j)} of g).
  auto w = isomorphism_first(h, g);
  if (!w) throw std::logic_error("fer_coset: no witness for a feasible replacement");
  std::vector<int> dom, img;
  for (const auto& [from, to] : w->map) {
    dom.push_back(from);
    img.push_back(to);
  }
  Permutation rep = Permutation::from_images(std::move(dom), std::move(img));
  return {r, std::move(rep)};
}

bool coset_contains(const LabeledGraph& g, const FerCoset& c, const Permutation& p) {
  if (p.domain() != g.labels()) return false;
  return copy_under(g, p) == apply_replacement(g, c.replacement);
}

std::vector<Permutation> aut_generators(const LabeledGraph& g) {
  const auto& labels = g.labels();
  // Degenerate fully symmetric cases: avoid enumerating n! witnesses.
  if (g.size() == 0 ||
      g.size() == static_cast<int>(labels.size()) * (static_cast<int>(labels.size()) - 1) / 2) {
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < labels.size(); ++i)
      gens.push_back(Permutation::transposition(labels, labels[0], labels[i]));
    return gens;
  }
  std::vector<Permutation> out;
  for_each_isomorphism(g, g, [&](const IsoWitness& w) {
    std::vector<int> dom, img;
    for (const auto& [from, to] : w.map) {
      dom.push_back(from);
      img.push_back(to);
    }
    Permutation p = Permutation::from_images(std::move(dom), std::move(img));
    if (!p.is_identity()) out.push_back(std::move(p));
    return true;
  });
  return out;
}

PermGroup aut_group(const LabeledGraph& g) { return PermGroup(g.labels(), aut_generators(g)); }

std::vector<Permutation> fer_generators(const LabeledGraph& g) {
  std::vector<Permutation> gens = aut_generators(g);
  for (const auto& r : enumerate_feasible(g)) {
    if (r.is_trivial()) continue;
    gens.push_back(fer_coset(g, r).representative);
  }
  return gens;
}

PermGroup fer_group(const LabeledGraph& g) { return PermGroup(g.labels(), fer_generators(g)); }

bool is_local_amoeba(const LabeledGraph& g) {
  if (g.order() <= 1) return true;
  return fer_group(g).is_symmetric_on(g.labels());
}

bool is_global_amoeba(const LabeledGraph& g) {
  if (g.order() == 0) return true;
  if (g.min_degree() <= 1 && is_local_amoeba(g)) return true;  // local with a vertex of degree <= 1
  int fresh = g.labels().back() + 1;
  return is_local_amoeba(g.with_isolated_label(fresh));
}

std::vector<Permutation> point_fixing_generators(const LabeledGraph& g, int label) {
  if (!g.has_label(label)) throw std::invalid_argument("point_fixing_generators: label not in graph");
  PermGroup aut = aut_group(g);
  std::vector<Permutation> gens = aut.stabilizer(label).generators();
  for (const auto& r : enumerate_feasible(g)) {
    if (r.is_trivial()) continue;
    Permutation rep = fer_coset(g, r).representative;
    int image = rep.apply(label);
    if (image == label) {
      gens.push_back(std::move(rep));
      continue;
    }
    // Some element of the coset rep*A_G fixes the label iff A_G can pull the
    // image back: (rep*b)(label) = b(rep(label)) = label.
    auto back = aut.transversal_element(image, label);
    if (back) gens.push_back(compose(rep, *back));
  }
  return gens;
}

PermGroup point_fixing_group(const LabeledGraph& g, int label) {
  return PermGroup(g.labels(), point_fixing_generators(g, label));
}

bool is_stem_symmetric(const LabeledGraph& g, int label) {
  return point_fixing_group(g, label).order() == factorial(g.order() - 1);
}

RecognitionReport recognize(const LabeledGraph& g) {
  RecognitionReport rep;
  rep.graph = g;
  rep.feasible = enumerate_feasible(g);
  rep.aut_order = aut_group(g).order();
  PermGroup fer = fer_group(g);
  rep.fer_order = fer.order();
  rep.local = fer.is_symmetric_on(g.labels());
  if (rep.local && g.order() > 0 && g.min_degree() <= 1)
    rep.global = true;  // a local amoeba with a vertex of degree <= 1 is global
  else
    rep.global = is_global_amoeba(g);
  for (int v : g.max_degree_labels())
    if (is_stem_symmetric(g, v)) rep.stem_symmetric_at.push_back(v);
  return rep;
}

}  // namespace amoeba
