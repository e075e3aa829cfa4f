#include "divm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace divm {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::any_matching: return "any";
    case Variant::maximum: return "maximum";
    case Variant::perfect: return "perfect";
  }
  return "?";
}

namespace oracle {
namespace {

void check_guard(const Graph& g) {
  if (g.edge_count() > kMaxOracleEdges)
    throw std::invalid_argument("oracle: instance has " + std::to_string(g.edge_count()) +
                                " edges, enumeration bound is " +
                                std::to_string(kMaxOracleEdges));
}

// Include/exclude recursion over edges in id order; prunes on endpoint
// conflicts via a per-vertex occupancy array.
void enumerate_rec(const Graph& g, EdgeId next, std::uint32_t mask, std::vector<char>& used,
                   std::vector<std::uint32_t>& out) {
  if (next == g.edge_count()) {
    out.push_back(mask);
    return;
  }
  enumerate_rec(g, next + 1, mask, used, out);
  Edge e = g.edge(next);
  if (!used[static_cast<size_t>(e.u)] && !used[static_cast<size_t>(e.v)]) {
    used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
    enumerate_rec(g, next + 1, mask | (1u << next), used, out);
    used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 0;
  }
}

}  // namespace

std::vector<std::uint32_t> enumerate_matching_masks(const Graph& g, Variant variant) {
  check_guard(g);
  std::vector<std::uint32_t> all;
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  enumerate_rec(g, 0, 0, used, all);
  switch (variant) {
    case Variant::any_matching:
      break;
    case Variant::maximum: {
      int mu = 0;
      for (std::uint32_t m : all) mu = std::max(mu, std::popcount(m));
      std::erase_if(all, [&](std::uint32_t m) { return std::popcount(m) != mu; });
      break;
    }
    case Variant::perfect: {
      const int need2 = g.vertex_count();
      std::erase_if(all, [&](std::uint32_t m) { return 2 * std::popcount(m) != need2; });
      break;
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

Matching mask_to_matching(const Graph& g, std::uint32_t mask) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (mask & (1u << e)) ids.push_back(e);
  return Matching{g, std::move(ids)};
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g, Variant variant) {
  std::vector<Matching> out;
  for (std::uint32_t mask : enumerate_matching_masks(g, variant))
    out.push_back(mask_to_matching(g, mask));
  return out;
}

DiversityResult max_diversity_pair(const Graph& g, Variant variant) {
  auto masks = enumerate_matching_masks(g, variant);
  if (masks.empty()) return {};
  int best = 0;
  std::uint32_t ba = masks[0], bb = masks[0];
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = i + 1; j < masks.size(); ++j) {
      int d = std::popcount(masks[i] ^ masks[j]);
      if (d > best) best = d, ba = masks[i], bb = masks[j];
    }
  return DiversityResult{best,
                         std::make_pair(mask_to_matching(g, ba), mask_to_matching(g, bb))};
}

bool decide(const Graph& g, int k, Variant variant) {
  auto res = max_diversity_pair(g, variant);
  if (!res.value) return false;
  return *res.value >= k;
}

int maximum_matching_size(const Graph& g) {
  check_guard(g);
  std::vector<std::uint32_t> all;
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  enumerate_rec(g, 0, 0, used, all);
  int mu = 0;
  for (std::uint32_t m : all) mu = std::max(mu, std::popcount(m));
  return mu;
}

}  // namespace oracle
}  // namespace divm
