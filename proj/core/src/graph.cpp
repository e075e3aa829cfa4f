#include "divm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace divm {

struct Graph::Impl {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeId>> incident;
  std::vector<std::string> names;
  // key = (min, max) endpoint pair
  std::map<std::pair<VertexId, VertexId>, EdgeId> by_pair;
};

namespace {

std::pair<VertexId, VertexId> norm(const Edge& e) {
  return {std::min(e.u, e.v), std::max(e.u, e.v)};
}

std::shared_ptr<const Graph::Impl> empty_impl() {
  static const auto impl = std::make_shared<Graph::Impl>();
  return impl;
}

}  // namespace

Graph::Graph() : impl_(empty_impl()) {}
Graph::Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  std::vector<std::string> names(static_cast<size_t>(std::max(vertex_count, 0)));
  for (int v = 0; v < vertex_count; ++v) names[static_cast<size_t>(v)] = std::to_string(v);
  return from_edges_named(vertex_count, std::move(edges), std::move(names));
}

Graph Graph::from_edges_named(int vertex_count, std::vector<Edge> edges,
                              std::vector<std::string> names) {
  if (vertex_count < 0) throw std::invalid_argument("vertex_count must be nonnegative");
  if (names.size() != static_cast<size_t>(vertex_count))
    throw std::invalid_argument("name table size must equal vertex_count");
  auto impl = std::make_shared<Impl>();
  impl->vertex_count = vertex_count;
  impl->incident.resize(static_cast<size_t>(vertex_count));
  impl->names = std::move(names);
  impl->edges.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    auto key = norm(e);
    EdgeId id = static_cast<EdgeId>(impl->edges.size());
    if (!impl->by_pair.emplace(key, id).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    impl->edges.push_back(e);
    impl->incident[static_cast<size_t>(e.u)].push_back(id);
    impl->incident[static_cast<size_t>(e.v)].push_back(id);
  }
  return Graph(std::move(impl));
}

int Graph::vertex_count() const { return impl_->vertex_count; }
int Graph::edge_count() const { return static_cast<int>(impl_->edges.size()); }

Edge Graph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("unknown edge identifier");
  return impl_->edges[static_cast<size_t>(e)];
}

const std::vector<Edge>& Graph::edges() const { return impl_->edges; }

const std::vector<EdgeId>& Graph::incident_edges(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  return impl_->incident[static_cast<size_t>(v)];
}

int Graph::degree(VertexId v) const { return static_cast<int>(incident_edges(v).size()); }

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count() || u == v)
    return std::nullopt;
  auto it = impl_->by_pair.find(norm(Edge{u, v}));
  if (it == impl_->by_pair.end()) return std::nullopt;
  return it->second;
}

const std::string& Graph::vertex_name(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  return impl_->names[static_cast<size_t>(v)];
}

const std::vector<std::string>& Graph::vertex_names() const { return impl_->names; }

bool Graph::same_object(const Graph& other) const { return impl_ == other.impl_; }

bool operator==(const Graph& a, const Graph& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (size_t i = 0; i < a.impl_->edges.size(); ++i)
    if (norm(a.impl_->edges[i]) != norm(b.impl_->edges[i])) return false;
  return true;
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
}

bool is_matching(const Graph& g, const std::vector<EdgeId>& edge_ids) {
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  std::unordered_set<EdgeId> seen;
  for (EdgeId id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) throw std::invalid_argument("unknown edge identifier");
    if (!seen.insert(id).second) throw std::invalid_argument("repeated edge identifier");
    Edge e = g.edge(id);
    if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)]) return false;
    used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
  }
  return true;
}

Matching make_matching(const Graph& g, std::vector<EdgeId> edge_ids) {
  if (!is_matching(g, edge_ids))
    throw std::invalid_argument("edge set is not a matching (shared endpoint)");
  std::sort(edge_ids.begin(), edge_ids.end());
  return Matching{g, std::move(edge_ids)};
}

int symmetric_difference_size(const Matching& m1, const Matching& m2) {
  if (!m1.graph.same_object(m2.graph) && !(m1.graph == m2.graph))
    throw std::invalid_argument("matchings reference different graphs");
  size_t i = 0, j = 0, common = 0;
  while (i < m1.edge_ids.size() && j < m2.edge_ids.size()) {
    if (m1.edge_ids[i] == m2.edge_ids[j]) {
      ++common, ++i, ++j;
    } else if (m1.edge_ids[i] < m2.edge_ids[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return m1.size() + m2.size() - 2 * static_cast<int>(common);
}

bool is_valid_bipartition(const Graph& g, const Bipartition& parts) {
  if (parts.side.size() != static_cast<size_t>(g.vertex_count())) return false;
  for (const Edge& e : g.edges())
    if (parts[e.u] == parts[e.v]) return false;
  return true;
}

std::optional<Bipartition> detect_bipartition(const Graph& g) {
  const int n = g.vertex_count();
  Bipartition parts;
  parts.side.assign(static_cast<size_t>(n), Side::A);
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    color[static_cast<size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      for (EdgeId id : g.incident_edges(u)) {
        Edge e = g.edge(id);
        VertexId w = (e.u == u) ? e.v : e.u;
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
          queue.push(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v)
    parts.side[static_cast<size_t>(v)] = color[static_cast<size_t>(v)] == 0 ? Side::A : Side::B;
  // Keep both sides nonempty when the graph allows it.
  if (n >= 2 && g.edge_count() == 0) parts.side[static_cast<size_t>(n - 1)] = Side::B;
  return parts;
}

namespace {

bool is_integer_token(const std::string& tok) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool seen_data = false;
  std::optional<long long> declared;
  std::unordered_map<std::string, VertexId> index_of;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::unordered_set<long long> pairs;

  auto vertex_of = [&](const std::string& tok) {
    auto it = index_of.find(tok);
    if (it != index_of.end()) return it->second;
    VertexId id = static_cast<VertexId>(names.size());
    index_of.emplace(tok, id);
    names.push_back(tok);
    return id;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto toks = split_ws(line);
    if (!seen_data && toks.size() == 2 && toks[0] == "n" && is_integer_token(toks[1])) {
      declared = std::stoll(toks[1]);
      if (*declared < 0) throw ParseError(line_no, "negative vertex count");
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (toks.size() != 2)
      throw ParseError(line_no, "expected two vertex tokens, got " + std::to_string(toks.size()));
    VertexId u = vertex_of(toks[0]);
    VertexId v = vertex_of(toks[1]);
    if (u == v) throw ParseError(line_no, "self-loop on vertex '" + toks[0] + "'");
    long long key = static_cast<long long>(std::min(u, v)) * (1ll << 32) + std::max(u, v);
    if (!pairs.insert(key).second)
      throw ParseError(line_no, "duplicate edge '" + toks[0] + " " + toks[1] + "'");
    edges.push_back(Edge{u, v});
  }

  long long n = declared.value_or(static_cast<long long>(names.size()));
  if (n < static_cast<long long>(names.size()))
    throw ParseError(line_no, "declared vertex count " + std::to_string(n) +
                                  " is smaller than the " + std::to_string(names.size()) +
                                  " distinct vertices used");
  if (n > (1 << 26)) throw ParseError(line_no, "vertex count too large");
  // Isolated vertices get decimal-index display names, disambiguated if an
  // input token already used that spelling.
  std::unordered_set<std::string> taken(index_of.size());
  for (auto& kv : index_of) taken.insert(kv.first);
  for (VertexId v = static_cast<VertexId>(names.size()); v < n; ++v) {
    std::string name = std::to_string(v);
    while (taken.count(name)) name = "_" + name;
    taken.insert(name);
    names.push_back(std::move(name));
  }
  return Graph::from_edges_named(static_cast<int>(n), std::move(edges), std::move(names));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return parse_edge_list(in);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << g.vertex_name(e.u) << " " << g.vertex_name(e.v) << "\n";
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  serialize_edge_list(g, out);
  return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  serialize_edge_list(g, out);
}

}  // namespace divm
