#pragma once

#include <vector>

namespace divm::detail {

// Maximum-weight perfect matching on a complete simple graph with an even
// number of vertices, 0-indexed. `weight` is a symmetric n x n matrix with
// nonnegative entries (diagonal ignored). Returns the mate of each vertex.
// Exact integer primal-dual blossom algorithm on a dense adjacency matrix;
// deterministic for fixed input. Throws std::logic_error if no perfect
// matching exists (impossible on complete even-order graphs).
std::vector<int> max_weight_perfect_matching(
    int n, const std::vector<std::vector<long long>>& weight);

}  // namespace divm::detail
