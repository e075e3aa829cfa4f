#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divm {

using VertexId = int;
using EdgeId = int;

/// Unordered endpoint pair; (u, v) and (v, u) denote the same edge.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

/// Thrown on malformed instance files. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Finite simple undirected graph. Vertices are dense 0-based integers,
/// edge identifiers are dense 0..|E|-1. Immutable after construction;
/// copies share storage and are safe to read concurrently.
class Graph {
 public:
  Graph();

  /// Validates and builds: endpoints in range, no self-loops, no duplicate
  /// (unordered) edges. Throws std::invalid_argument otherwise.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges);

  /// Same as from_edges with an explicit display-name table (size must
  /// equal vertex_count).
  static Graph from_edges_named(int vertex_count, std::vector<Edge> edges,
                                std::vector<std::string> names);

  int vertex_count() const;
  int edge_count() const;
  Edge edge(EdgeId e) const;
  const std::vector<Edge>& edges() const;
  const std::vector<EdgeId>& incident_edges(VertexId v) const;
  int degree(VertexId v) const;
  /// Edge id joining u and v in either orientation, if present.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  /// Display name of a vertex (input token for parsed graphs, decimal
  /// index otherwise).
  const std::string& vertex_name(VertexId v) const;
  const std::vector<std::string>& vertex_names() const;

  /// True when both handles share the same underlying storage.
  bool same_object(const Graph& other) const;
  /// Structural equality: vertex count and the per-id unordered edge list.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Impl;
  explicit Graph(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Set of pairwise vertex-disjoint edges of a fixed graph. edge_ids is
/// sorted ascending and duplicate-free.
struct Matching {
  Graph graph;
  std::vector<EdgeId> edge_ids;

  int size() const { return static_cast<int>(edge_ids.size()); }
  bool contains(EdgeId e) const;
};

/// Validating constructor: ids must be in range, distinct and pairwise
/// vertex-disjoint. Throws std::invalid_argument otherwise.
Matching make_matching(const Graph& g, std::vector<EdgeId> edge_ids);

/// True iff no two of the given edges share an endpoint. Unknown or
/// repeated edge identifiers throw std::invalid_argument.
bool is_matching(const Graph& g, const std::vector<EdgeId>& edge_ids);

/// |M1 (+) M2| = |M1| + |M2| - 2|M1 n M2|. Both matchings must reference
/// the same graph (same storage or structurally equal), otherwise
/// std::invalid_argument.
int symmetric_difference_size(const Matching& m1, const Matching& m2);

enum class Side : unsigned char { A, B };

/// Total vertex -> {A, B} map under which every edge crosses sides.
struct Bipartition {
  std::vector<Side> side;

  Side operator[](VertexId v) const { return side[static_cast<size_t>(v)]; }
};

/// Every edge of g crosses parts?
bool is_valid_bipartition(const Graph& g, const Bipartition& parts);

/// BFS 2-coloring; nullopt iff g has an odd cycle. Deterministic: component
/// roots in vertex order get side A. For an edgeless graph on >= 2 vertices
/// the last vertex is placed on side B so both sides are nonempty.
std::optional<Bipartition> detect_bipartition(const Graph& g);

// Edge-list text format: one edge per line as two whitespace-separated
// vertex tokens; lines whose first non-blank character is '#' are comments;
// an optional first data line "n <vertex_count>" declares isolated
// vertices. Tokens are relabeled to dense indices in order of first
// appearance and retained as display names.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph parse_edge_list_file(const std::string& path);

void serialize_edge_list(const Graph& g, std::ostream& out);
std::string serialize_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace divm
