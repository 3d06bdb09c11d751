#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace curling {

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
// sorted and the structure is immutable once built; self loops and
// duplicate edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edge_list);

  int order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return m_; }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// --- generators ---------------------------------------------------------

Graph path(int n);                       // n >= 1
Graph cycle(int n);                      // n >= 3
Graph complete(int n);                   // n >= 1
Graph complete_bipartite(int m, int n);  // m, n >= 1; parts 0..m-1 and m..m+n-1
Graph wheel(int n);                      // n >= 4; hub joined to an (n-1)-cycle
Graph ladder(int n);                     // n >= 2; path(n) x path(2)
Graph tadpole(int m, int n);             // m >= 3 cycle, n >= 1 path, bridge 0--m
Graph complete_kary_tree(int k, int h);  // k >= 2, h >= 0; root 0, level order
Graph caterpillar(std::span<const int> leaf_counts);  // spine 0..n-1, leaves after

// --- queries ------------------------------------------------------------

std::vector<int> degree_sequence(const Graph& g);  // ascending

struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major n*n, -1 for unreachable
  int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

DistanceMatrix all_pairs_distances(const Graph& g);         // BFS per source, parallel
DistanceMatrix all_pairs_distances_serial(const Graph& g);  // reference version

// nullopt means the graph is disconnected. Graphs on 0 or 1 vertices have
// diameter 0.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
bool is_complete(const Graph& g);

// --- operations ---------------------------------------------------------

// r-th power: u ~ v iff 0 < dist(u, v) <= r. Requires r >= 1. Values of r
// at or beyond the diameter are allowed and give a complete graph on each
// component.
Graph power(const Graph& g, int r);

// Vertex (a, b) of the product gets id a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

// Disjoint union plus all edges between the two sides; h's vertices are
// shifted by g.order().
Graph join(const Graph& g, const Graph& h);

// One pendant vertex attached to every vertex; leaf for u gets id n + u.
Graph corona_k1(const Graph& g);

// Components keep their internal ids, shifted by the orders of the
// components before them.
Graph disjoint_union(std::span<const Graph> graphs);

// --- edge-list serialization --------------------------------------------
//
// Format: first line "n m", then m lines "u v" with 0-based endpoints.

Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace curling
