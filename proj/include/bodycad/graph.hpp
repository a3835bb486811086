#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bodycad {

enum class Color { Black, Red };

std::string_view to_string(Color c);

using EdgeId = std::size_t;

struct Edge {
  EdgeId id = 0;
  int u = 0;  // 1-based vertex
  int v = 0;  // 1-based vertex
  Color color = Color::Black;
  std::string label;

  bool is_red() const { return color == Color::Red; }
  bool touches(int vertex) const { return u == vertex || v == vertex; }
  int other(int vertex) const { return vertex == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vector length k per body and angular sub-length g, 0 < g <= k.
class SparsityParams {
 public:
  /// Throws Error(InvalidArgument) unless 0 < g <= k.
  SparsityParams(int k, int g);

  static SparsityParams body_and_cad() { return {6, 3}; }

  int k() const { return k_; }
  int g() const { return g_; }
  /// Number of leading coordinates forced to zero on red edges.
  int black_only() const { return k_ - g_; }

  friend bool operator==(const SparsityParams&, const SparsityParams&) = default;

 private:
  int k_;
  int g_;
};

/// Bi-colored multigraph H = (V, B + R) on vertices 1..n. Parallel edges of
/// any colour are allowed; self-loops are not. Immutable after construction.
class BiColoredMultigraph {
 public:
  /// Throws Error(InvalidArgument) on n < 1, out-of-range endpoints,
  /// self-loops or duplicate edge ids.
  explicit BiColoredMultigraph(int n, std::vector<Edge> edges = {});

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  std::size_t m_red() const { return m_red_; }
  std::size_t m_black() const { return edges_.size() - m_red_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(std::size_t index) const { return edges_[index]; }
  /// Throws Error(InvalidArgument) on an unknown id.
  const Edge& edge(EdgeId id) const { return edges_[index_of(id)]; }
  std::size_t index_of(EdgeId id) const;
  bool contains(EdgeId id) const { return index_.contains(id); }

  std::vector<EdgeId> edge_ids() const;

  /// Same vertex set, keeping only the listed edges (in the listed order).
  BiColoredMultigraph subgraph(const std::vector<EdgeId>& keep) const;
  BiColoredMultigraph without(EdgeId id) const;

  bool is_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> index_;
  std::size_t m_red_ = 0;
};

/// Single-threaded builder assigning sequential edge ids.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {}

  EdgeId add(int u, int v, Color c, std::string label = {});
  EdgeId black(int u, int v, std::string label = {}) {
    return add(u, v, Color::Black, std::move(label));
  }
  EdgeId red(int u, int v, std::string label = {}) {
    return add(u, v, Color::Red, std::move(label));
  }

  BiColoredMultigraph build() const { return BiColoredMultigraph(n_, edges_); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// m = kn - k and m_R <= gn - g.
bool is_kg_counted(const BiColoredMultigraph& h, const SparsityParams& params);

/// A distinct (k,g)-fan represented by its fan diagram: each edge is oriented
/// with its tail at the vertex whose group it belongs to.
struct FanDiagram {
  std::vector<int> tail;                   // per edge index, a vertex in 2..n
  std::vector<std::vector<EdgeId>> groups;  // groups[i-2] = edges with tail i,
                                           // sorted by id

  const std::vector<EdgeId>& group(int vertex) const {
    return groups[static_cast<std::size_t>(vertex - 2)];
  }

  friend bool operator==(const FanDiagram&, const FanDiagram&) = default;
};

inline constexpr int kDefaultFanVertexLimit = 5;

/// Every distinct (k,g)-fan of a (k,g)-counted graph, in lexicographic order
/// of the tail vector. Exponential; refuses n above `max_vertices` with
/// Error(SizeLimitExceeded). Returns an empty list for uncounted graphs.
std::vector<FanDiagram> enumerate_distinct_fans(
    const BiColoredMultigraph& h, const SparsityParams& params,
    int max_vertices = kDefaultFanVertexLimit);

}  // namespace bodycad
