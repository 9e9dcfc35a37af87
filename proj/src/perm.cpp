#include "amoeba/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace amoeba {

void Permutation::init_flags() {
  contiguous_ = dom_.empty() || dom_.back() - dom_.front() + 1 == static_cast<int>(dom_.size());
}

int Permutation::index_of(int x) const {
  if (contiguous_) {
    if (dom_.empty() || x < dom_.front() || x > dom_.back()) return -1;
    return x - dom_.front();
  }
  auto it = std::lower_bound(dom_.begin(), dom_.end(), x);
  if (it == dom_.end() || *it != x) return -1;
  return static_cast<int>(it - dom_.begin());
}

Permutation Permutation::identity(std::vector<int> domain) {
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end())
    throw std::invalid_argument("Permutation: duplicate labels in domain");
  Permutation p;
  p.dom_ = domain;
  p.img_ = std::move(domain);
  p.init_flags();
  return p;
}

Permutation Permutation::from_images(std::vector<int> domain, std::vector<int> images) {
  if (domain.size() != images.size())
    throw std::invalid_argument("Permutation: domain/image size mismatch");
  std::vector<std::size_t> order(domain.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  Permutation p;
  p.dom_.reserve(domain.size());
  p.img_.reserve(domain.size());
  for (std::size_t i : order) {
    p.dom_.push_back(domain[i]);
    p.img_.push_back(images[i]);
  }
  if (std::adjacent_find(p.dom_.begin(), p.dom_.end()) != p.dom_.end())
    throw std::invalid_argument("Permutation: duplicate labels in domain");
  std::vector<int> check = p.img_;
  std::sort(check.begin(), check.end());
  if (check != p.dom_) throw std::invalid_argument("Permutation: images are not a bijection on the domain");
  p.init_flags();
  return p;
}

Permutation Permutation::transposition(std::vector<int> domain, int a, int b) {
  Permutation p = identity(std::move(domain));
  int ia = p.index_of(a), ib = p.index_of(b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("transposition: labels not in domain");
  std::swap(p.img_[ia], p.img_[ib]);
  return p;
}

Permutation Permutation::from_cycles(std::vector<int> domain, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(std::move(domain));
  std::unordered_set<int> seen;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      int idx = p.index_of(from);
      if (idx < 0 || p.index_of(to) < 0) throw std::invalid_argument("from_cycles: label not in domain");
      if (!seen.insert(from).second) throw std::invalid_argument("from_cycles: cycles are not disjoint");
      p.img_[idx] = to;
    }
  }
  return p;
}

int Permutation::apply(int x) const {
  int idx = index_of(x);
  if (idx < 0) throw std::out_of_range("Permutation::apply: label not in domain");
  return img_[idx];
}

bool Permutation::in_domain(int x) const { return index_of(x) >= 0; }

Permutation Permutation::inverse() const {
  Permutation p;
  p.dom_ = dom_;
  p.img_.resize(img_.size());
  p.contiguous_ = contiguous_;
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    int idx = index_of(img_[i]);
    p.img_[idx] = dom_[i];
  }
  return p;
}

bool Permutation::is_identity() const { return dom_ == img_; }

std::vector<int> Permutation::moved_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < dom_.size(); ++i)
    if (dom_[i] != img_[i]) out.push_back(dom_[i]);
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::unordered_set<int> done;
  for (int start : dom_) {
    if (done.count(start) || apply(start) == start) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      cyc.push_back(x);
      done.insert(x);
      x = apply(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::uint64_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  for (int v : dom_) mix(v);
  for (int v : img_) mix(~v);
  return h;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.domain() != t.domain()) throw std::invalid_argument("compose: domain mismatch");
  std::vector<int> img(s.domain().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = t.apply(s.images()[i]);
  return Permutation::from_images(s.domain(), std::move(img));
}

Permutation paste(const Permutation& s, const Permutation& t) {
  std::vector<int> dom = s.domain();
  std::vector<int> img = s.images();
  for (std::size_t i = 0; i < t.domain().size(); ++i) {
    int x = t.domain()[i];
    if (s.in_domain(x)) {
      if (s.apply(x) != t.images()[i])
        throw std::invalid_argument("paste: functions disagree on the domain overlap");
    } else {
      dom.push_back(x);
      img.push_back(t.images()[i]);
    }
  }
  return Permutation::from_images(std::move(dom), std::move(img));
}

Permutation parse_cycles(const std::string& text, std::vector<int> domain) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  bool open = false;
  std::string num;
  auto flush_num = [&]() {
    if (!num.empty()) {
      if (!open) throw std::invalid_argument("parse_cycles: token outside cycles");
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw std::invalid_argument("parse_cycles: nested '('");
      open = true;
      cur.clear();
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("parse_cycles: unmatched ')'");
      flush_num();
      if (cur.size() >= 2) cycles.push_back(cur);
      open = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      num.push_back(ch);
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      flush_num();
    } else {
      throw std::invalid_argument(std::string("parse_cycles: unexpected character '") + ch + "'");
    }
  }
  if (open) throw std::invalid_argument("parse_cycles: unclosed '('");
  flush_num();
  if (!num.empty()) throw std::invalid_argument("parse_cycles: stray token outside cycles");
  return Permutation::from_cycles(std::move(domain), cycles);
}

}  // namespace amoeba
