#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphcord {

// Labeled simple undirected graph on 1..6 vertices, stored as an edge bitset.
// The bit index of the unordered pair (i, j) with 0 <= i < j < n is
// j*(j-1)/2 + i; the resulting integer is the graph's stable external code.
// Vertices are 0-based internally; the text format uses 1-based labels.
class Graph {
 public:
  static constexpr int kMaxVertices = 6;

  explicit Graph(int n, std::uint32_t code = 0);

  int vertex_count() const { return n_; }
  std::uint32_t code() const { return code_; }
  int edge_count() const;

  static constexpr int pair_count(int n) { return n * (n - 1) / 2; }
  static constexpr int pair_index(int i, int j) {
    return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
  }

  bool has_edge(int i, int j) const;
  void set_edge(int i, int j, bool present);
  void toggle_edge(int i, int j);

  // Bitmask over vertices: bit u set iff {v, u} is an edge.
  std::uint32_t neighborhood(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // (i, j) with i < j, ascending

  // "n=<int>;edges=<i>-<j>,..." with 1-based vertices; empty graph prints
  // "n=<int>;edges=". parse() also accepts "n=<int>;code=<unsigned>".
  std::string to_text() const;
  static Graph parse(std::string_view text);

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::uint32_t code_;
};

// All 2^(n(n-1)/2) labeled graphs in ascending edge-bitset order.
std::vector<Graph> enumerate_labeled_graphs(int n);

// Bijection on {0, ..., n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& mapping() const { return map_; }
  Permutation inverse() const;

  // All n! permutations in lexicographic order (cached, n <= 6).
  static const std::vector<Permutation>& all(int n);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

// Relabels vertices: edge {i, j} of g becomes edge {p(i), p(j)}.
Graph permute(const Graph& g, const Permutation& p);

// Minimum edge-bitset code over all n! vertex relabelings; equal canonical
// forms iff isomorphic. Brute force is intentional, n <= 6.
Graph canonical_form(const Graph& g);

enum class PartitionKind { isomorphism, concurrence, lc_orbit, lc_orbit_mod_isomorphism };

struct GraphClass {
  Graph representative;
  std::vector<std::uint32_t> members;  // edge-bitset codes, ascending
};

// Grouping of labeled graphs into disjoint classes covering a stated universe.
struct Partition {
  PartitionKind kind;
  int n = 0;
  std::vector<GraphClass> classes;

  std::size_t total_members() const;
  // Throws std::logic_error unless classes are disjoint, cover exactly
  // universe_size codes, and each class contains its own representative.
  void validate(std::size_t universe_size) const;
};

// Partition of all labeled graphs on n vertices by canonical form, ordered by
// representative code.
Partition isomorphism_classes(int n);

}  // namespace graphcord
