#include "curling/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace curling {

namespace {

void check_vertex_count(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
}

}  // namespace

Graph::Graph(int n) {
  check_vertex_count(n);
  n_ = n;
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) : Graph(n) {
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  m_ = static_cast<std::int64_t>(edge_list.size());
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

// --- generators ---------------------------------------------------------

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return {n, es};
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return {n, es};
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return {n, es};
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("complete bipartite graph requires m, n >= 1");
  }
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) es.emplace_back(u, m + v);
  return {m + n, es};
}

Graph wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
  return join(cycle(n - 1), complete(1));
}

Graph ladder(int n) {
  if (n < 2) throw std::invalid_argument("ladder requires n >= 2");
  return cartesian_product(path(n), path(2));
}

Graph tadpole(int m, int n) {
  if (m < 3) throw std::invalid_argument("tadpole requires cycle length m >= 3");
  if (n < 1) throw std::invalid_argument("tadpole requires path length n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
  for (int j = 0; j + 1 < n; ++j) es.emplace_back(m + j, m + j + 1);
  es.emplace_back(0, m);  // bridge from cycle vertex 0 to path vertex 0
  return {m + n, es};
}

Graph complete_kary_tree(int k, int h) {
  if (k < 2) throw std::invalid_argument("k-ary tree requires k >= 2");
  if (h < 0) throw std::invalid_argument("k-ary tree requires h >= 0");
  std::int64_t total = 1, level = 1;
  for (int i = 0; i < h; ++i) {
    level *= k;
    total += level;
    if (total > 4'000'000) {
      throw std::invalid_argument("k-ary tree would exceed 4e6 vertices");
    }
  }
  const int n = static_cast<int>(total);
  std::vector<std::pair<int, int>> es;
  // heap numbering: children of v are k*v+1 .. k*v+k
  for (int v = 1; v < n; ++v) es.emplace_back((v - 1) / k, v);
  return {n, es};
}

Graph caterpillar(std::span<const int> leaf_counts) {
  if (leaf_counts.empty()) {
    throw std::invalid_argument("caterpillar requires a nonempty spine");
  }
  const int n = static_cast<int>(leaf_counts.size());
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  int next = n;
  for (int i = 0; i < n; ++i) {
    if (leaf_counts[static_cast<std::size_t>(i)] < 0) {
      throw std::invalid_argument("leaf counts must be >= 0");
    }
    for (int j = 0; j < leaf_counts[static_cast<std::size_t>(i)]; ++j) {
      es.emplace_back(i, next++);
    }
  }
  return {next, es};
}

// --- queries ------------------------------------------------------------

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u) deg[static_cast<std::size_t>(u)] = g.degree(u);
  std::sort(deg.begin(), deg.end());
  return deg;
}

namespace {

void bfs_row(const Graph& g, int src, int* row, std::vector<int>& queue) {
  const int n = g.order();
  std::fill(row, row + n, -1);
  queue.clear();
  row[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (row[v] < 0) {
        row[v] = row[u] + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.order();
  dm.d.assign(static_cast<std::size_t>(dm.n) * static_cast<std::size_t>(dm.n), -1);
#pragma omp parallel
  {
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(dm.n));
#pragma omp for schedule(dynamic, 8)
    for (int s = 0; s < dm.n; ++s) {
      bfs_row(g, s, dm.d.data() + static_cast<std::size_t>(s) * dm.n, queue);
    }
  }
  return dm;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.order();
  dm.d.assign(static_cast<std::size_t>(dm.n) * static_cast<std::size_t>(dm.n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(dm.n));
  for (int s = 0; s < dm.n; ++s) {
    bfs_row(g, s, dm.d.data() + static_cast<std::size_t>(s) * dm.n, queue);
  }
  return dm;
}

std::optional<int> diameter(const Graph& g) {
  if (g.order() <= 1) return 0;
  const DistanceMatrix dm = all_pairs_distances(g);
  int best = 0;
  for (int u = 0; u < dm.n; ++u) {
    for (int v = u + 1; v < dm.n; ++v) {
      const int d = dm.at(u, v);
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> row(static_cast<std::size_t>(g.order()));
  std::vector<int> queue;
  bfs_row(g, 0, row.data(), queue);
  return std::none_of(row.begin(), row.end(), [](int d) { return d < 0; });
}

bool is_regular(const Graph& g) {
  for (int u = 1; u < g.order(); ++u) {
    if (g.degree(u) != g.degree(0)) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  const std::int64_t n = g.order();
  return g.size() == n * (n - 1) / 2;
}

// --- operations ---------------------------------------------------------

Graph power(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("power requires r >= 1");
  const DistanceMatrix dm = all_pairs_distances(g);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < dm.n; ++u) {
    for (int v = u + 1; v < dm.n; ++v) {
      const int d = dm.at(u, v);
      if (d > 0 && d <= r) es.emplace_back(u, v);
    }
  }
  return {g.order(), es};
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < nh; ++b) {
      const int id = a * nh + b;
      for (int b2 : h.neighbors(b)) {
        if (b2 > b) es.emplace_back(id, a * nh + b2);
      }
      for (int a2 : g.neighbors(a)) {
        if (a2 > a) es.emplace_back(id, a2 * nh + b);
      }
    }
  }
  return {ng * nh, es};
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) es.emplace_back(u, v);
  for (auto [u, v] : h.edges()) es.emplace_back(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) es.emplace_back(u, ng + v);
  return {ng + nh, es};
}

Graph corona_k1(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> es = g.edges();
  for (int u = 0; u < n; ++u) es.emplace_back(u, n + u);
  return {2 * n, es};
}

Graph disjoint_union(std::span<const Graph> graphs) {
  int total = 0;
  std::vector<std::pair<int, int>> es;
  for (const Graph& g : graphs) {
    for (auto [u, v] : g.edges()) es.emplace_back(total + u, total + v);
    total += g.order();
  }
  return {total, es};
}

// --- edge-list serialization ----------------------------------------------

Graph read_edge_list(std::istream& in) {
  int n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: expected header 'n m'");
  if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header value");
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    }
    es.emplace_back(u, v);
  }
  try {
    return {n, es};
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace curling
