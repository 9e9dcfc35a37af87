#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "amoeba/graph.hpp"
#include "json.hpp"

namespace amoeba {

namespace {

void append_n(std::string& out, int n) {
  if (n < 0) throw std::invalid_argument("graph6: negative order");
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6: order too large");
  }
}

int read_n(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("graph6: empty input");
  unsigned char c = s[pos];
  if (c == 126) {
    if (pos + 3 >= s.size()) throw std::invalid_argument("graph6: truncated order");
    if (static_cast<unsigned char>(s[pos + 1]) == 126)
      throw std::invalid_argument("graph6: order beyond supported range");
    int n = 0;
    for (int k = 1; k <= 3; ++k) {
      int v = static_cast<unsigned char>(s[pos + k]) - 63;
      if (v < 0 || v > 63) throw std::invalid_argument("graph6: bad order byte");
      n = (n << 6) | v;
    }
    pos += 4;
    return n;
  }
  if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad order byte");
  pos += 1;
  return c - 63;
}

}  // namespace

std::string to_graph6(const LabeledGraph& g) {
  int n = g.order();
  std::string out;
  append_n(out, n);
  const auto& labels = g.labels();
  auto index_of = [&](int label) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<char> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    int a = index_of(e.first), b = index_of(e.second);
    mat[a][b] = mat[b][a] = 1;
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(mat[i][j]);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = (v << 1) | bits[k + t];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

LabeledGraph from_graph6(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  std::size_t pos = 0;
  int n = read_n(s, pos);
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes) throw std::invalid_argument("graph6: wrong payload length");
  std::vector<char> bits;
  bits.reserve(nbytes * 6);
  for (std::size_t k = pos; k < s.size(); ++k) {
    int v = static_cast<unsigned char>(s[k]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: bad payload byte");
    for (int t = 5; t >= 0; --t) bits.push_back((v >> t) & 1);
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits[k]) edges.push_back({i, j});
  return LabeledGraph(std::move(labels), std::move(edges));
}

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v : g.labels())
    if (g.degree(v) == 0) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) os << "  " << e.first << " -- " << e.second << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["labels"] = g.labels();
  auto arr = nlohmann::json::array();
  for (const auto& e : g.edges()) arr.push_back({e.first, e.second});
  j["edges"] = arr;
  return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<int> labels = j.at("labels").get<std::vector<int>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge entry");
    edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
  }
  return LabeledGraph(std::move(labels), std::move(edges));
}

}  // namespace amoeba
