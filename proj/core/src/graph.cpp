#include "graphcord/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace graphcord {

namespace {

struct VertexPair {
  std::uint8_t i, j;
};

// idx -> (i, j) for idx = j*(j-1)/2 + i; independent of n.
constexpr auto kPairTable = [] {
  std::array<VertexPair, Graph::pair_count(Graph::kMaxVertices)> t{};
  for (int j = 1; j < Graph::kMaxVertices; ++j) {
    for (int i = 0; i < j; ++i) {
      t[static_cast<std::size_t>(Graph::pair_index(i, j))] = {
          static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
    }
  }
  return t;
}();

// Permutations of {0..n-1} plus, for each, the induced map on pair-bit
// indices. Built once; canonical_form is called in tight loops.
struct PermTable {
  std::vector<Permutation> perms;
  std::vector<std::array<std::uint8_t, 15>> pair_maps;
};

const PermTable& perm_table(int n) {
  static const auto tables = [] {
    std::array<PermTable, Graph::kMaxVertices + 1> t;
    for (int n = 1; n <= Graph::kMaxVertices; ++n) {
      std::vector<int> map(static_cast<std::size_t>(n));
      std::iota(map.begin(), map.end(), 0);
      do {
        Permutation p(map);
        std::array<std::uint8_t, 15> pm{};
        for (int idx = 0; idx < Graph::pair_count(n); ++idx) {
          const auto [i, j] = kPairTable[static_cast<std::size_t>(idx)];
          pm[static_cast<std::size_t>(idx)] =
              static_cast<std::uint8_t>(Graph::pair_index(p(i), p(j)));
        }
        t[static_cast<std::size_t>(n)].perms.push_back(std::move(p));
        t[static_cast<std::size_t>(n)].pair_maps.push_back(pm);
      } while (std::next_permutation(map.begin(), map.end()));
    }
    return t;
  }();
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::domain_error("permutations: vertex count out of range");
  }
  return tables[static_cast<std::size_t>(n)];
}

std::uint32_t permute_code(std::uint32_t code, int pairs,
                           const std::array<std::uint8_t, 15>& pair_map) {
  std::uint32_t out = 0;
  for (int idx = 0; idx < pairs; ++idx) {
    if (code >> idx & 1u) out |= 1u << pair_map[static_cast<std::size_t>(idx)];
  }
  return out;
}

}  // namespace

Graph::Graph(int n, std::uint32_t code) : n_(n), code_(code) {
  if (n < 1 || n > kMaxVertices) {
    throw std::domain_error("Graph: vertex count must be in 1..6, got " + std::to_string(n));
  }
  if (pair_count(n) < 32 && code >> pair_count(n) != 0) {
    throw std::domain_error("Graph: edge code out of range for n=" + std::to_string(n));
  }
}

int Graph::edge_count() const { return std::popcount(code_); }

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::domain_error("Graph: vertex index " + std::to_string(v) + " out of range");
  }
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return false;
  return (code_ >> pair_index(i, j)) & 1u;
}

void Graph::set_edge(int i, int j, bool present) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::domain_error("Graph: self-loops are not representable");
  const std::uint32_t bit = 1u << pair_index(i, j);
  code_ = present ? code_ | bit : code_ & ~bit;
}

void Graph::toggle_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::domain_error("Graph: self-loops are not representable");
  code_ ^= 1u << pair_index(i, j);
}

std::uint32_t Graph::neighborhood(int v) const {
  check_vertex(v);
  std::uint32_t mask = 0;
  for (int u = 0; u < n_; ++u) {
    if (u != v && (code_ >> pair_index(u, v) & 1u)) mask |= 1u << u;
  }
  return mask;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (code_ >> pair_index(i, j) & 1u) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string Graph::to_text() const {
  std::ostringstream os;
  os << "n=" << n_ << ";edges=";
  bool first = true;
  for (const auto& [i, j] : edges()) {
    if (!first) os << ',';
    os << i + 1 << '-' << j + 1;
    first = false;
  }
  return os.str();
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("graph text: bad ") + what + " '" + std::string(s) +
                                "'");
  }
  return value;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
  std::string stripped;
  stripped.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') stripped += c;
  }
  const std::string_view s = stripped;

  const auto semi = s.find(';');
  if (semi == std::string_view::npos || !s.starts_with("n=")) {
    throw std::invalid_argument("graph text: expected 'n=<int>;edges=...' or 'n=<int>;code=...'");
  }
  const int n = parse_int(s.substr(2, semi - 2), "vertex count");
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph text: vertex count must be in 1..6");
  }

  const std::string_view rest = s.substr(semi + 1);
  if (rest.starts_with("code=")) {
    const int code = parse_int(rest.substr(5), "code");
    if (code < 0) throw std::invalid_argument("graph text: negative code");
    return Graph(n, static_cast<std::uint32_t>(code));
  }
  if (!rest.starts_with("edges=")) {
    throw std::invalid_argument("graph text: expected 'edges=' or 'code=' after 'n=<int>;'");
  }

  Graph g(n);
  std::string_view list = rest.substr(6);
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("graph text: bad edge '" + std::string(item) + "'");
    }
    const int i = parse_int(item.substr(0, dash), "edge endpoint");
    const int j = parse_int(item.substr(dash + 1), "edge endpoint");
    if (i < 1 || i > n || j < 1 || j > n) {
      throw std::invalid_argument("graph text: edge endpoint out of range in '" +
                                  std::string(item) + "'");
    }
    if (i == j) {
      throw std::invalid_argument("graph text: self-loop '" + std::string(item) + "'");
    }
    g.set_edge(i - 1, j - 1, true);
  }
  return g;
}

std::vector<Graph> enumerate_labeled_graphs(int n) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::domain_error("enumerate_labeled_graphs: vertex count must be in 1..6");
  }
  const std::uint32_t total = 1u << Graph::pair_count(n);
  std::vector<Graph> out;
  out.reserve(total);
  for (std::uint32_t code = 0; code < total; ++code) out.emplace_back(n, code);
  return out;
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = size();
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::domain_error("Permutation: size must be in 1..6");
  }
  std::uint32_t seen = 0;
  for (int v : map_) {
    if (v < 0 || v >= n || (seen >> v & 1u)) {
      throw std::domain_error("Permutation: mapping is not a bijection on {0..n-1}");
    }
    seen |= 1u << v;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int v = 0; v < size(); ++v) inv[static_cast<std::size_t>(map_[static_cast<std::size_t>(v)])] = v;
  return Permutation(std::move(inv));
}

const std::vector<Permutation>& Permutation::all(int n) { return perm_table(n).perms; }

Graph permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) {
    throw std::domain_error("permute: permutation size does not match vertex count");
  }
  Graph out(g.vertex_count());
  for (const auto& [i, j] : g.edges()) out.set_edge(p(i), p(j), true);
  return out;
}

Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  const int pairs = Graph::pair_count(n);
  std::uint32_t best = g.code();
  for (const auto& pm : perm_table(n).pair_maps) {
    best = std::min(best, permute_code(g.code(), pairs, pm));
  }
  return Graph(n, best);
}

std::size_t Partition::total_members() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  return total;
}

void Partition::validate(std::size_t universe_size) const {
  std::unordered_set<std::uint32_t> seen;
  for (const auto& c : classes) {
    bool rep_found = false;
    for (std::uint32_t code : c.members) {
      if (!seen.insert(code).second) {
        throw std::logic_error("Partition: classes are not disjoint");
      }
      rep_found |= code == c.representative.code();
    }
    if (!rep_found) {
      throw std::logic_error("Partition: class does not contain its representative");
    }
  }
  if (seen.size() != universe_size) {
    throw std::logic_error("Partition: classes do not cover the universe");
  }
}

Partition isomorphism_classes(int n) {
  const auto graphs = enumerate_labeled_graphs(n);
  std::vector<std::vector<std::uint32_t>> members(graphs.size());
  for (const auto& g : graphs) {
    members[canonical_form(g).code()].push_back(g.code());
  }
  Partition part{PartitionKind::isomorphism, n, {}};
  for (std::uint32_t canon = 0; canon < members.size(); ++canon) {
    if (!members[canon].empty()) {
      part.classes.push_back({Graph(n, canon), std::move(members[canon])});
    }
  }
  return part;
}

}  // namespace graphcord
