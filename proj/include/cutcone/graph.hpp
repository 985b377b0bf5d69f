#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutcone {

/// Undirected simple graph on vertices 1..n with a dense symmetric adjacency matrix.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0) {
    if (n == 0) throw std::invalid_argument("SimpleGraph: need at least one vertex");
  }

  SimpleGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : SimpleGraph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
  }

  std::size_t n() const { return n_; }

  bool has_edge(std::size_t i, std::size_t j) const { return adj_[(i - 1) * n_ + (j - 1)] != 0; }

  void add_edge(std::size_t i, std::size_t j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("SimpleGraph: self-loop at vertex " + std::to_string(i));
    adj_[(i - 1) * n_ + (j - 1)] = 1;
    adj_[(j - 1) * n_ + (i - 1)] = 1;
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 1; j <= n_; ++j) d += has_edge(i, j);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 1; i <= n_; ++i) e += degree(i);
    return e / 2;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// BFS hop distances from `source`; unreachable vertices get SIZE_MAX.
  std::vector<std::size_t> distances_from(std::size_t source) const {
    check_vertex(source);
    std::vector<std::size_t> dist(n_, SIZE_MAX);
    std::queue<std::size_t> frontier;
    dist[source - 1] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t v = 1; v <= n_; ++v)
        if (has_edge(u, v) && dist[v - 1] == SIZE_MAX) {
          dist[v - 1] = dist[u - 1] + 1;
          frontier.push(v);
        }
    }
    return dist;
  }

  bool connected() const {
    for (std::size_t d : distances_from(1))
      if (d == SIZE_MAX) return false;
    return true;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(std::size_t v) const {
    if (v < 1 || v > n_)
      throw std::out_of_range("SimpleGraph: vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

namespace families {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline SimpleGraph complete(std::size_t n) {
  require(n >= 1, "K_n needs n >= 1");
  SimpleGraph g(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

inline SimpleGraph cycle(std::size_t n) {
  require(n >= 3, "C_n needs n >= 3");
  SimpleGraph g(n);
  for (std::size_t i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

/// Q_k: vertex x+1 for each bit string x in [0, 2^k); edges join strings at Hamming distance 1.
inline SimpleGraph hypercube(std::size_t k) {
  require(k >= 1 && k <= 12, "Q_k needs 1 <= k <= 12");
  const std::size_t n = std::size_t{1} << k;
  SimpleGraph g(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t y = x ^ (std::size_t{1} << b);
      if (x < y) g.add_edge(x + 1, y + 1);
    }
  return g;
}

/// B_{m,n}: vertices 1..m on one side, m+1..m+n on the other.
inline SimpleGraph complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "B_{m,n} needs m, n >= 1");
  SimpleGraph g(m + n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = m + 1; j <= m + n; ++j) g.add_edge(i, j);
  return g;
}

/// L_n: the path 1 - 2 - ... - n.
inline SimpleGraph linear(std::size_t n) {
  require(n >= 2, "L_n needs n >= 2");
  SimpleGraph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// CP_n: K_{2n} minus the perfect matching {i, i+n}.
inline SimpleGraph cocktail_party(std::size_t n) {
  require(n >= 2, "CP_n needs n >= 2");
  SimpleGraph g(2 * n);
  for (std::size_t i = 1; i <= 2 * n; ++i)
    for (std::size_t j = i + 1; j <= 2 * n; ++j)
      if (j != i + n) g.add_edge(i, j);
  return g;
}

/// S(n): center 0 is vertex 1, peripheral vertex i is vertex i+1.
inline SimpleGraph star(std::size_t n) {
  require(n >= 1, "S(n) needs n >= 1");
  SimpleGraph g(n + 1);
  for (std::size_t i = 2; i <= n + 1; ++i) g.add_edge(1, i);
  return g;
}

/// Circulant k-regular graph on n vertices: offsets 1..k/2, plus n/2 when k is odd.
inline SimpleGraph circulant_regular(std::size_t n, std::size_t k) {
  require(n >= 3 && k >= 2 && k < n, "R_{n,k} needs n >= 3 and 2 <= k < n");
  require(k % 2 == 0 || n % 2 == 0, "R_{n,k} with odd k needs even n");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t off = 1; off <= k / 2; ++off) g.add_edge(i + 1, (i + off) % n + 1);
    if (k % 2) g.add_edge(i + 1, (i + n / 2) % n + 1);
  }
  return g;
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `density`.
template <class Rng>
SimpleGraph random_connected(std::size_t n, double density, Rng& rng) {
  require(n >= 1, "random_connected needs n >= 1");
  SimpleGraph g(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 1; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    g.add_edge(order[k], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!g.has_edge(i, j) && coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace families

/// Builds a family member by id: K n | C n | Q k | B m n | L n | CP n | S n | R n k.
inline SimpleGraph family(const std::string& name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "K") {
    need(1);
    return families::complete(params[0]);
  }
  if (name == "C") {
    need(1);
    return families::cycle(params[0]);
  }
  if (name == "Q") {
    need(1);
    return families::hypercube(params[0]);
  }
  if (name == "B") {
    need(2);
    return families::complete_bipartite(params[0], params[1]);
  }
  if (name == "L") {
    need(1);
    return families::linear(params[0]);
  }
  if (name == "CP") {
    need(1);
    return families::cocktail_party(params[0]);
  }
  if (name == "S") {
    need(1);
    return families::star(params[0]);
  }
  if (name == "R") {
    need(2);
    return families::circulant_regular(params[0], params[1]);
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

}  // namespace cutcone
