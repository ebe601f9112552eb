// Copyright 2026 The dpco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpco/rng.hpp"

namespace dpco {

namespace detail {
inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Graph

/// Simple undirected graph. Edges are stored canonically as (low, high)
/// pairs, sorted and de-duplicated; the private unit is a single edge.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    detail::require(n >= 0, "graph: vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
      detail::require(u >= 0 && u < n && v >= 0 && v < n,
                      "graph: edge endpoint out of range");
      detail::require(u != v, "graph: self-loops not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& [u, v] : edges_) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
  }

  /// Edge-adjacent neighbor: the same graph with one edge added or removed.
  Graph with_edge_toggled(int u, int v) const {
    detail::require(u != v, "graph: cannot toggle a self-loop");
    if (u > v) std::swap(u, v);
    auto edges = edges_;
    auto it = std::lower_bound(edges.begin(), edges.end(),
                               std::make_pair(u, v));
    if (it != edges.end() && *it == std::make_pair(u, v)) {
      edges.erase(it);
    } else {
      edges.insert(it, {u, v});
    }
    return Graph(n_, std::move(edges));
  }

  /// Union with another edge set over the same vertices (simple-graph
  /// union: duplicates absorbed).
  Graph with_edges_added(const std::vector<std::pair<int, int>>& extra) const {
    auto edges = edges_;
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(n_, std::move(edges));
  }

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Graph with positive per-vertex weights, all at least 1.
struct WeightedGraph {
  Graph graph;
  std::vector<double> vertex_weights;

  WeightedGraph() = default;
  WeightedGraph(Graph g, std::vector<double> weights)
      : graph(std::move(g)), vertex_weights(std::move(weights)) {
    detail::require(
        vertex_weights.size() == static_cast<std::size_t>(graph.n()),
        "weighted graph: weight count must match vertex count");
    for (double w : vertex_weights) {
      detail::require(std::isfinite(w) && w >= 1.0,
                      "weighted graph: weights must be finite and >= 1");
    }
  }
};

// ---------------------------------------------------------------------------
// Metric instances

/// Finite metric with an explicit distance matrix. Off-diagonal
/// distances are at least 1 and the triangle inequality is checked with
/// slack 1e-9 to absorb text round-trip error. Demands are the private
/// unit (multiplicity-1 subset of points).
class MetricInstance {
 public:
  static constexpr double kTriangleSlack = 1e-9;

  MetricInstance() = default;
  MetricInstance(int n, std::vector<double> dist, std::vector<int> demands)
      : n_(n), dist_(std::move(dist)) {
    detail::require(n >= 1, "metric: need at least one point");
    detail::require(dist_.size() == static_cast<std::size_t>(n) *
                                        static_cast<std::size_t>(n),
                    "metric: distance matrix must be n x n");
    for (int i = 0; i < n; ++i) {
      detail::require(at(i, i) == 0.0, "metric: diagonal must be zero");
      for (int j = i + 1; j < n; ++j) {
        detail::require(std::isfinite(at(i, j)),
                        "metric: distances must be finite");
        detail::require(at(i, j) == at(j, i), "metric: must be symmetric");
        detail::require(at(i, j) >= 1.0,
                        "metric: off-diagonal distances must be >= 1");
        diameter_ = std::max(diameter_, at(i, j));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          detail::require(at(i, j) <= at(i, k) + at(k, j) + kTriangleSlack,
                          "metric: triangle inequality violated");
        }
      }
    }
    set_demands(std::move(demands));
  }

  int n() const { return n_; }
  double at(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
  }
  double diameter() const { return diameter_; }
  const std::vector<double>& raw() const { return dist_; }
  const std::vector<int>& demands() const { return demands_; }

  void set_demands(std::vector<int> demands) {
    std::sort(demands.begin(), demands.end());
    demands.erase(std::unique(demands.begin(), demands.end()), demands.end());
    for (int d : demands) {
      detail::require(d >= 0 && d < n_, "metric: demand point out of range");
    }
    demands_ = std::move(demands);
  }

  MetricInstance with_demands(std::vector<int> demands) const {
    MetricInstance copy = *this;
    copy.set_demands(std::move(demands));
    return copy;
  }

  /// Demand-adjacent neighbor: one point added to or removed from D.
  MetricInstance with_demand_toggled(int point) const {
    auto demands = demands_;
    auto it = std::lower_bound(demands.begin(), demands.end(), point);
    if (it != demands.end() && *it == point) {
      demands.erase(it);
    } else {
      demands.insert(it, point);
    }
    return with_demands(std::move(demands));
  }

 private:
  int n_ = 0;
  std::vector<double> dist_;
  std::vector<int> demands_;
  double diameter_ = 0.0;
};

/// Source-sink terminal pairs over a metric's points.
struct TerminalPairs {
  std::vector<std::pair<int, int>> pairs;

  TerminalPairs() = default;
  TerminalPairs(const MetricInstance& metric,
                std::vector<std::pair<int, int>> p)
      : pairs(std::move(p)) {
    for (const auto& [u, v] : pairs) {
      detail::require(u >= 0 && u < metric.n() && v >= 0 && v < metric.n(),
                      "terminal pairs: point out of range");
      detail::require(u != v, "terminal pairs: endpoints must differ");
    }
  }
};

// ---------------------------------------------------------------------------
// Set systems

/// Set system (U, S) with an optional cost function and the private
/// subset R of elements to cover. Costs are normalized on construction
/// so the cheapest set costs 1; `cost_unit` records the divisor so
/// reported costs can be mapped back to original units.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(int universe_size, std::vector<std::vector<int>> sets,
            std::optional<std::vector<double>> costs,
            std::vector<int> covered_elements)
      : n_(universe_size), sets_(std::move(sets)) {
    detail::require(universe_size >= 0,
                    "set system: universe size must be nonnegative");
    for (auto& set : sets_) {
      for (int e : set) {
        detail::require(e >= 0 && e < n_,
                        "set system: element out of range");
      }
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    if (costs.has_value()) {
      detail::require(costs->size() == sets_.size(),
                      "set system: cost count must match set count");
      double min_cost = std::numeric_limits<double>::infinity();
      for (double c : *costs) {
        detail::require(std::isfinite(c) && c > 0.0,
                        "set system: costs must be finite and positive");
        min_cost = std::min(min_cost, c);
      }
      cost_unit_ = sets_.empty() ? 1.0 : min_cost;
      costs_ = std::move(*costs);
      for (double& c : *costs_) c /= cost_unit_;
    }
    set_covered_elements(std::move(covered_elements));
  }

  int universe_size() const { return n_; }
  std::size_t set_count() const { return sets_.size(); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<int>& covered_elements() const { return covered_; }
  bool has_costs() const { return costs_.has_value(); }
  const std::vector<double>& costs() const { return *costs_; }
  double cost_unit() const { return cost_unit_; }
  double cost_of(std::size_t set_index) const {
    return costs_ ? (*costs_)[set_index] : 1.0;
  }
  double max_cost() const {
    if (!costs_ || costs_->empty()) return 1.0;
    return *std::max_element(costs_->begin(), costs_->end());
  }

  void set_covered_elements(std::vector<int> covered) {
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    for (int e : covered) {
      detail::require(e >= 0 && e < n_,
                      "set system: covered element out of range");
      bool coverable = false;
      for (const auto& set : sets_) {
        if (std::binary_search(set.begin(), set.end(), e)) {
          coverable = true;
          break;
        }
      }
      detail::require(coverable,
                      "set system: covered element " + std::to_string(e) +
                          " is not contained in any set");
    }
    covered_ = std::move(covered);
  }

  SetSystem with_covered_elements(std::vector<int> covered) const {
    SetSystem copy = *this;
    copy.set_covered_elements(std::move(covered));
    return copy;
  }

  /// Element-adjacent neighbor: one element added to or removed from R.
  SetSystem with_element_toggled(int element) const {
    auto covered = covered_;
    auto it = std::lower_bound(covered.begin(), covered.end(), element);
    if (it != covered.end() && *it == element) {
      covered.erase(it);
    } else {
      covered.insert(it, element);
    }
    return with_covered_elements(std::move(covered));
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> sets_;
  std::optional<std::vector<double>> costs_;
  double cost_unit_ = 1.0;
  std::vector<int> covered_;
};

// ---------------------------------------------------------------------------
// Submodular coverage instances (CPP)

/// Coverage-valuation CPP instance: m resources each cover a subset of
/// an item universe; each agent holds a nonempty target set A_i fully
/// coverable by the resources, and values a selection S at
/// f_i(S) = |covered(S) & A_i| / |A_i|, so max_S f_i(S) = 1. Coverage
/// functions are nondecreasing and submodular by construction. The
/// private unit is an agent.
class SubmodularInstance {
 public:
  SubmodularInstance() = default;
  SubmodularInstance(int item_universe, std::vector<std::vector<int>> resources,
                     std::vector<std::vector<int>> agent_targets)
      : items_(item_universe),
        resources_(std::move(resources)),
        agents_(std::move(agent_targets)) {
    detail::require(items_ >= 0, "cpp: item universe must be nonnegative");
    std::vector<bool> coverable(static_cast<std::size_t>(items_), false);
    for (auto& r : resources_) {
      for (int e : r) {
        detail::require(e >= 0 && e < items_, "cpp: resource item out of range");
        coverable[static_cast<std::size_t>(e)] = true;
      }
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
    }
    for (auto& a : agents_) {
      detail::require(!a.empty(), "cpp: agent target set must be nonempty");
      for (int e : a) {
        detail::require(e >= 0 && e < items_, "cpp: agent item out of range");
        detail::require(coverable[static_cast<std::size_t>(e)],
                        "cpp: agent target item not coverable by any resource");
      }
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  int item_universe() const { return items_; }
  std::size_t resource_count() const { return resources_.size(); }
  std::size_t agent_count() const { return agents_.size(); }
  const std::vector<std::vector<int>>& resources() const { return resources_; }
  const std::vector<std::vector<int>>& agent_targets() const { return agents_; }

  /// Agent-adjacent neighbor: one agent removed.
  SubmodularInstance with_agent_removed(std::size_t agent_index) const {
    auto agents = agents_;
    agents.erase(agents.begin() + static_cast<std::ptrdiff_t>(agent_index));
    SubmodularInstance copy = *this;
    copy.agents_ = std::move(agents);
    return copy;
  }

 private:
  int items_ = 0;
  std::vector<std::vector<int>> resources_;
  std::vector<std::vector<int>> agents_;
};

// ---------------------------------------------------------------------------
// Generators

inline Graph gen_random_graph(int n, double edge_probability, RngStream& rng) {
  detail::require(n >= 1, "gen_random_graph: n must be >= 1");
  detail::require(edge_probability >= 0.0 && edge_probability <= 1.0,
                  "gen_random_graph: probability must be in [0, 1]");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < edge_probability) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

inline Graph gen_star_graph(int n) {
  detail::require(n >= 2, "gen_star_graph: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

/// Two disjoint cliques of n_per_side vertices joined by exactly
/// bridge_edges edges; the min cut equals bridge_edges whenever
/// bridge_edges < n_per_side - 1.
inline Graph gen_two_clique_graph(int n_per_side, int bridge_edges) {
  detail::require(n_per_side >= 1, "gen_two_clique_graph: side must be >= 1");
  detail::require(bridge_edges >= 0 &&
                      bridge_edges <= n_per_side * n_per_side,
                  "gen_two_clique_graph: too many bridge edges");
  std::vector<std::pair<int, int>> edges;
  for (int side = 0; side < 2; ++side) {
    int base = side * n_per_side;
    for (int u = 0; u < n_per_side; ++u) {
      for (int v = u + 1; v < n_per_side; ++v) {
        edges.emplace_back(base + u, base + v);
      }
    }
  }
  for (int b = 0; b < bridge_edges; ++b) {
    edges.emplace_back(b % n_per_side, n_per_side + b / n_per_side);
  }
  return Graph(2 * n_per_side, std::move(edges));
}

/// Random regular graph by the pairing model with rejection; fixture
/// generator for hard min-cut instances.
inline Graph gen_random_regular_graph(int n, int degree, RngStream& rng) {
  detail::require(n >= 1 && degree >= 0 && degree < n,
                  "gen_random_regular_graph: bad parameters");
  detail::require(n * degree % 2 == 0,
                  "gen_random_regular_graph: n * degree must be even");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));
    for (int v = 0; v < n; ++v) {
      for (int d = 0; d < degree; ++d) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      edges.emplace_back(u, v);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph(n, std::move(edges));
  }
  throw std::runtime_error("gen_random_regular_graph: rejection limit hit");
}

inline MetricInstance gen_uniform_metric(int n, double diameter) {
  detail::require(n >= 1, "gen_uniform_metric: n must be >= 1");
  detail::require(n == 1 || diameter >= 1.0,
                  "gen_uniform_metric: diameter must be >= 1");
  std::vector<double> dist(static_cast<std::size_t>(n) *
                               static_cast<std::size_t>(n),
                           diameter);
  for (int i = 0; i < n; ++i) {
    dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(i)] = 0.0;
  }
  std::vector<int> demands(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) demands[static_cast<std::size_t>(i)] = i;
  return MetricInstance(n, std::move(dist), std::move(demands));
}

/// Euclidean metric over a rows x cols grid with unit spacing (so the
/// minimum distance is exactly 1). All points are demands.
inline MetricInstance gen_grid_metric(int rows, int cols) {
  detail::require(rows >= 1 && cols >= 1, "gen_grid_metric: bad shape");
  int n = rows * cols;
  std::vector<double> dist(static_cast<std::size_t>(n) *
                           static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      double dx = a % cols - b % cols;
      double dy = a / cols - b / cols;
      dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(b)] = std::sqrt(dx * dx + dy * dy);
    }
  }
  std::vector<int> demands(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) demands[static_cast<std::size_t>(i)] = i;
  return MetricInstance(n, std::move(dist), std::move(demands));
}

/// Random points in a square, rescaled so the minimum pairwise distance
/// is exactly 1. All points are demands.
inline MetricInstance gen_random_euclidean_metric(int n, RngStream& rng) {
  detail::require(n >= 1, "gen_random_euclidean_metric: n must be >= 1");
  if (n == 1) return MetricInstance(1, {0.0}, {0});
  std::vector<double> xs(static_cast<std::size_t>(n)),
      ys(static_cast<std::size_t>(n));
  double min_dist = 0.0;
  while (min_dist <= 0.0) {
    for (int i = 0; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] = rng.next_double();
      ys[static_cast<std::size_t>(i)] = rng.next_double();
    }
    min_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double dx = xs[static_cast<std::size_t>(i)] -
                    xs[static_cast<std::size_t>(j)];
        double dy = ys[static_cast<std::size_t>(i)] -
                    ys[static_cast<std::size_t>(j)];
        min_dist = std::min(min_dist, std::sqrt(dx * dx + dy * dy));
      }
    }
  }
  std::vector<double> dist(static_cast<std::size_t>(n) *
                           static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double dx =
          xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
      double dy =
          ys[static_cast<std::size_t>(i)] - ys[static_cast<std::size_t>(j)];
      dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j)] =
          i == j ? 0.0 : std::sqrt(dx * dx + dy * dy) / min_dist;
    }
  }
  // Symmetrize exactly (floating subtraction order can differ).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dist[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(i)] =
          dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j)];
    }
  }
  std::vector<int> demands(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) demands[static_cast<std::size_t>(i)] = i;
  return MetricInstance(n, std::move(dist), std::move(demands));
}

/// Scaled version of the k-median lower-bound family: groups x copies
/// points, distance 1 within a group and 1e6 across groups. (The
/// original family uses a pseudometric with zero within-group distance;
/// this is the documented limiting case scaled to keep distances >= 1.)
inline MetricInstance gen_kmedian_lb_metric(int groups, int copies) {
  detail::require(groups >= 1 && copies >= 1,
                  "gen_kmedian_lb_metric: bad shape");
  int n = groups * copies;
  constexpr double kFar = 1e6;
  std::vector<double> dist(static_cast<std::size_t>(n) *
                           static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(b)] = (a / copies == b / copies) ? 1.0
                                                                     : kFar;
    }
  }
  return MetricInstance(n, std::move(dist), {});
}

/// Random feasible set system: each element joins one uniformly chosen
/// set, then every (set, element) pair is added independently with the
/// given probability. R defaults to the whole universe.
inline SetSystem gen_random_set_system(int universe_size, int num_sets,
                                       double membership_probability,
                                       RngStream& rng,
                                       std::optional<std::vector<double>>
                                           costs = std::nullopt) {
  detail::require(universe_size >= 0 && num_sets >= 1,
                  "gen_random_set_system: bad parameters");
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(num_sets));
  for (int e = 0; e < universe_size; ++e) {
    sets[rng.next_index(static_cast<std::uint64_t>(num_sets))].push_back(e);
    for (int s = 0; s < num_sets; ++s) {
      if (rng.next_double() < membership_probability) {
        sets[static_cast<std::size_t>(s)].push_back(e);
      }
    }
  }
  std::vector<int> covered(static_cast<std::size_t>(universe_size));
  for (int e = 0; e < universe_size; ++e) {
    covered[static_cast<std::size_t>(e)] = e;
  }
  return SetSystem(universe_size, std::move(sets), std::move(costs),
                   std::move(covered));
}

/// Random coverage CPP instance: resources cover random item subsets
/// and each agent targets a random nonempty subset of coverable items.
inline SubmodularInstance gen_coverage_instance(int item_universe,
                                                int num_resources,
                                                int num_agents,
                                                double coverage_probability,
                                                RngStream& rng) {
  detail::require(item_universe >= 1 && num_resources >= 1 && num_agents >= 0,
                  "gen_coverage_instance: bad parameters");
  std::vector<std::vector<int>> resources(
      static_cast<std::size_t>(num_resources));
  for (int e = 0; e < item_universe; ++e) {
    resources[rng.next_index(static_cast<std::uint64_t>(num_resources))]
        .push_back(e);
    for (int r = 0; r < num_resources; ++r) {
      if (rng.next_double() < coverage_probability) {
        resources[static_cast<std::size_t>(r)].push_back(e);
      }
    }
  }
  std::vector<std::vector<int>> agents(static_cast<std::size_t>(num_agents));
  for (auto& target : agents) {
    while (target.empty()) {
      for (int e = 0; e < item_universe; ++e) {
        if (rng.next_double() < 0.3) target.push_back(e);
      }
    }
  }
  return SubmodularInstance(item_universe, std::move(resources),
                            std::move(agents));
}

}  // namespace dpco
