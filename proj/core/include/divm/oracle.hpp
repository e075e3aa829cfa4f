#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divm/graph.hpp"

namespace divm {

/// Which class of matchings a query ranges over.
enum class Variant : unsigned char { any_matching, maximum, perfect };

const char* variant_name(Variant v);

namespace oracle {

/// Hard enumeration guard; exceeding it is a usage error, never a silent
/// truncation.
inline constexpr int kMaxOracleEdges = 24;

/// All matchings of the requested class, as edge-id bitmasks (bit i = edge
/// i selected). Exact and duplicate-free; branch-and-bound over edges in
/// identifier order.
std::vector<std::uint32_t> enumerate_matching_masks(const Graph& g, Variant variant);

/// Same, materialized as Matching values.
std::vector<Matching> enumerate_matchings(const Graph& g, Variant variant);

struct DiversityResult {
  /// nullopt = requested class is empty (perfect variant, no perfect
  /// matching); otherwise the exact maximum of |M1 (+) M2| over pairs.
  std::optional<int> value;
  std::optional<std::pair<Matching, Matching>> witness;
};

/// Exact maximum symmetric difference over (unordered, possibly equal)
/// pairs from the class.
DiversityResult max_diversity_pair(const Graph& g, Variant variant);

/// YES iff two matchings of the class have symmetric difference >= k.
/// An empty class decides NO for every k (no pair exists).
bool decide(const Graph& g, int k, Variant variant);

/// Size of a maximum matching, by enumeration.
int maximum_matching_size(const Graph& g);

}  // namespace oracle
}  // namespace divm
