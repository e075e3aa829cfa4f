#include "divm/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "blossom.hpp"
#include "mcmf.hpp"

namespace divm {

CostFunction zero_costs(const Graph& g) {
  return CostFunction{std::vector<std::uint8_t>(static_cast<size_t>(g.edge_count()), 0)};
}

CostFunction make_costs(const Graph& g, std::vector<std::uint8_t> cost) {
  if (cost.size() != static_cast<size_t>(g.edge_count()))
    throw std::invalid_argument("cost function must cover exactly the edge set");
  for (auto c : cost)
    if (c > 1) throw std::invalid_argument("costs must be 0 or 1");
  return CostFunction{std::move(cost)};
}

long long total_cost(const CostFunction& c, const Matching& m) {
  long long sum = 0;
  for (EdgeId e : m.edge_ids) sum += c[e];
  return sum;
}

WeightedMultigraph WeightedMultigraph::create(int vertex_count, std::vector<Side> side,
                                              std::vector<MEdge> edges) {
  if (vertex_count < 0) throw std::invalid_argument("vertex_count must be nonnegative");
  if (side.size() != static_cast<size_t>(vertex_count))
    throw std::invalid_argument("side map must cover every vertex");
  for (const MEdge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (side[static_cast<size_t>(e.u)] == side[static_cast<size_t>(e.v)])
      throw std::invalid_argument("edge does not cross the bipartition");
  }
  WeightedMultigraph h;
  h.vertex_count_ = vertex_count;
  h.side_ = std::move(side);
  h.edges_ = std::move(edges);
  return h;
}

namespace {

// Min-cost maximum matching on a bipartite graph as unit-capacity flow;
// costs are nonnegative so no potential bootstrap is needed.
Matching mcmm_bipartite(const Graph& g, const CostFunction& c, const Bipartition& parts) {
  const int n = g.vertex_count();
  const int s = n, t = n + 1;
  detail::MinCostFlow net(n + 2);
  for (VertexId v = 0; v < n; ++v) {
    if (parts[v] == Side::A) net.add_edge(s, v, 1, 0);
    else net.add_edge(v, t, 1, 0);
  }
  std::vector<int> arc_of(static_cast<size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge ed = g.edge(e);
    VertexId a = parts[ed.u] == Side::A ? ed.u : ed.v;
    VertexId b = parts[ed.u] == Side::A ? ed.v : ed.u;
    arc_of[static_cast<size_t>(e)] = net.add_edge(a, b, 1, c[e]);
  }
  net.run(s, t, n);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (net.flow_on(arc_of[static_cast<size_t>(e)]) == 1) ids.push_back(e);
  return Matching{g, std::move(ids)};
}

Matching mcmm_general(const Graph& g, const CostFunction& c) {
  const int n = g.vertex_count();
  const int np = n + (n % 2);  // pad to even order with one dummy vertex
  std::vector<std::vector<long long>> weight(
      static_cast<size_t>(np), std::vector<long long>(static_cast<size_t>(np), 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge ed = g.edge(e);
    long long w = static_cast<long long>(n) + 1 - c[e];
    weight[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)] = w;
    weight[static_cast<size_t>(ed.v)][static_cast<size_t>(ed.u)] = w;
  }
  // Non-adjacent pairs keep weight 0, making the padded graph complete: a
  // maximum-weight perfect matching restricted to real edges is exactly a
  // min-cost maximum matching (uniform size of perfect matchings, real
  // edge weights >= n >= 1 > 0).
  std::vector<int> mate = detail::max_weight_perfect_matching(np, weight);
  std::vector<EdgeId> ids;
  for (VertexId u = 0; u < n; ++u) {
    int v = mate[static_cast<size_t>(u)];
    if (v > u && v < n) {
      if (auto id = g.find_edge(u, v)) ids.push_back(*id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return Matching{g, std::move(ids)};
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  return min_cost_maximum_matching(g, zero_costs(g));
}

Matching min_cost_maximum_matching(const Graph& g, const CostFunction& c) {
  if (c.cost.size() != static_cast<size_t>(g.edge_count()))
    throw std::invalid_argument("cost function must cover exactly the edge set");
  if (g.edge_count() == 0) return Matching{g, {}};
  if (auto parts = detect_bipartition(g)) return mcmm_bipartite(g, c, *parts);
  return mcmm_general(g, c);
}

std::optional<TwoFactor> max_weight_two_factor(const WeightedMultigraph& h) {
  const int n = h.vertex_count();
  int count_a = 0;
  for (VertexId v = 0; v < n; ++v)
    if (h.side(v) == Side::A) ++count_a;
  const int count_b = n - count_a;
  if (n == 0) return TwoFactor{{}, 0};
  // Every degree-2 selection uses 2|A| = 2|B| edge slots.
  if (count_a != count_b) return std::nullopt;

  const int s = n, t = n + 1;
  detail::MinCostFlow net(n + 2);
  for (VertexId v = 0; v < n; ++v) {
    if (h.side(v) == Side::A) net.add_edge(s, v, 2, 0);
    else net.add_edge(v, t, 2, 0);
  }
  std::vector<int> arc_of(static_cast<size_t>(h.edge_count()));
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& me = h.edge(e);
    VertexId a = h.side(me.u) == Side::A ? me.u : me.v;
    VertexId b = h.side(me.u) == Side::A ? me.v : me.u;
    arc_of[static_cast<size_t>(e)] = net.add_edge(a, b, 1, -me.weight);
  }
  auto [flow, cost] = net.run(s, t, 2 * count_a);
  if (flow != 2 * count_a) return std::nullopt;
  TwoFactor f;
  f.weight = -cost;
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (net.flow_on(arc_of[static_cast<size_t>(e)]) == 1) f.edge_ids.push_back(e);
  return f;
}

}  // namespace divm
