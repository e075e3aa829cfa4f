#pragma once

#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace divm::detail {

// Successive-shortest-path min-cost flow with Johnson potentials.
// Negative arc costs are allowed as long as the initial network has no
// negative cycle (potentials start from one Bellman-Ford pass).
// Deterministic: Dijkstra breaks ties by node index.
class MinCostFlow {
 public:
  explicit MinCostFlow(int node_count)
      : node_count_(node_count), head_(static_cast<size_t>(node_count)) {}

  int add_edge(int from, int to, int cap, long long cost) {
    int id = static_cast<int>(arcs_.size());
    head_[static_cast<size_t>(from)].push_back(id);
    arcs_.push_back(Arc{to, cap, cost});
    head_[static_cast<size_t>(to)].push_back(id + 1);
    arcs_.push_back(Arc{from, 0, -cost});
    if (cost < 0) has_negative_ = true;
    return id;
  }

  int flow_on(int edge_id) const { return arcs_[static_cast<size_t>(edge_id) + 1].cap; }

  // Augments up to flow_limit units; returns (flow, cost).
  std::pair<int, long long> run(int s, int t, int flow_limit) {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> pot(static_cast<size_t>(node_count_), 0);
    if (has_negative_) bellman_ford(s, pot);
    std::vector<long long> dist(static_cast<size_t>(node_count_));
    std::vector<int> prev_arc(static_cast<size_t>(node_count_));
    int flow = 0;
    long long cost = 0;
    while (flow < flow_limit) {
      std::fill(dist.begin(), dist.end(), inf);
      std::fill(prev_arc.begin(), prev_arc.end(), -1);
      dist[static_cast<size_t>(s)] = 0;
      using Item = std::pair<long long, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0, s);
      while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[static_cast<size_t>(u)]) continue;
        for (int id : head_[static_cast<size_t>(u)]) {
          const Arc& a = arcs_[static_cast<size_t>(id)];
          if (a.cap <= 0) continue;
          long long nd = d + a.cost + pot[static_cast<size_t>(u)] - pot[static_cast<size_t>(a.to)];
          if (nd < dist[static_cast<size_t>(a.to)]) {
            dist[static_cast<size_t>(a.to)] = nd;
            prev_arc[static_cast<size_t>(a.to)] = id;
            heap.emplace(nd, a.to);
          }
        }
      }
      if (dist[static_cast<size_t>(t)] >= inf) break;
      for (int v = 0; v < node_count_; ++v)
        pot[static_cast<size_t>(v)] +=
            std::min(dist[static_cast<size_t>(v)], dist[static_cast<size_t>(t)]);
      int push = flow_limit - flow;
      for (int v = t; v != s;) {
        const Arc& a = arcs_[static_cast<size_t>(prev_arc[static_cast<size_t>(v)])];
        push = std::min(push, a.cap);
        v = arcs_[static_cast<size_t>(prev_arc[static_cast<size_t>(v)]) ^ 1].to;
      }
      for (int v = t; v != s;) {
        Arc& a = arcs_[static_cast<size_t>(prev_arc[static_cast<size_t>(v)])];
        Arc& rev = arcs_[static_cast<size_t>(prev_arc[static_cast<size_t>(v)]) ^ 1];
        a.cap -= push;
        rev.cap += push;
        cost += static_cast<long long>(push) * a.cost;
        v = rev.to;
      }
      flow += push;
    }
    return {flow, cost};
  }

 private:
  struct Arc {
    int to;
    int cap;
    long long cost;
  };

  void bellman_ford(int s, std::vector<long long>& pot) {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    pot.assign(static_cast<size_t>(node_count_), inf);
    pot[static_cast<size_t>(s)] = 0;
    for (int round = 0; round < node_count_; ++round) {
      bool changed = false;
      for (int u = 0; u < node_count_; ++u) {
        if (pot[static_cast<size_t>(u)] >= inf) continue;
        for (int id : head_[static_cast<size_t>(u)]) {
          const Arc& a = arcs_[static_cast<size_t>(id)];
          if (a.cap <= 0) continue;
          if (pot[static_cast<size_t>(u)] + a.cost < pot[static_cast<size_t>(a.to)]) {
            pot[static_cast<size_t>(a.to)] = pot[static_cast<size_t>(u)] + a.cost;
            changed = true;
          }
        }
      }
      if (!changed) return;
    }
    throw std::logic_error("min-cost flow: negative cycle");
  }

  int node_count_;
  bool has_negative_ = false;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

}  // namespace divm::detail
