#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divm/graph.hpp"

namespace divm {

/// 0/1 edge costs, defined on exactly the edge set of one graph.
struct CostFunction {
  std::vector<std::uint8_t> cost;  // indexed by edge id, entries 0 or 1

  std::uint8_t operator[](EdgeId e) const { return cost[static_cast<size_t>(e)]; }
};

CostFunction zero_costs(const Graph& g);
/// Validates size and 0/1 range.
CostFunction make_costs(const Graph& g, std::vector<std::uint8_t> cost);
long long total_cost(const CostFunction& c, const Matching& m);

/// Bipartite multigraph with signed integer edge weights. Parallel edges
/// are permitted and keep distinct dense identifiers; every edge must
/// cross the bipartition. Immutable after creation.
class WeightedMultigraph {
 public:
  struct MEdge {
    VertexId u;
    VertexId v;
    long long weight;
  };

  WeightedMultigraph() = default;
  static WeightedMultigraph create(int vertex_count, std::vector<Side> side,
                                   std::vector<MEdge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const MEdge& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }
  const std::vector<MEdge>& edges() const { return edges_; }
  Side side(VertexId v) const { return side_[static_cast<size_t>(v)]; }
  const std::vector<Side>& sides() const { return side_; }

 private:
  int vertex_count_ = 0;
  std::vector<Side> side_;
  std::vector<MEdge> edges_;
};

/// Edge multiset of a WeightedMultigraph in which every vertex has degree
/// exactly 2, plus its total weight. Identifiers are distinct (parallel
/// copies are distinct edges).
struct TwoFactor {
  std::vector<EdgeId> edge_ids;  // sorted ascending
  long long weight = 0;
};

/// Maximum-cardinality matching, exact on general graphs.
Matching maximum_matching(const Graph& g);

/// Among matchings of maximum cardinality, minimizes total cost.
/// Deterministic for fixed input. Realized as one maximum-weight matching
/// with w(e) = (n+1) - c(e), so cardinality dominates any total cost;
/// bipartite inputs take a min-cost-flow path, general ones the blossom
/// kernel.
Matching min_cost_maximum_matching(const Graph& g, const CostFunction& c);

/// Maximum-weight degree-exactly-2 sub-multigraph, or nullopt when none
/// exists. Exact signed integer arithmetic throughout.
std::optional<TwoFactor> max_weight_two_factor(const WeightedMultigraph& h);

}  // namespace divm
