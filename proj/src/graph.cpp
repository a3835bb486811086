#include "bodycad/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bodycad/error.hpp"

namespace bodycad {

std::string_view to_string(Color c) {
  return c == Color::Red ? "red" : "black";
}

SparsityParams::SparsityParams(int k, int g) : k_(k), g_(g) {
  if (k < 1 || g < 1 || g > k) {
    throw Error(ErrorCode::InvalidArgument,
                "sparsity parameters need 0 < g <= k, got k=" +
                    std::to_string(k) + " g=" + std::to_string(g));
  }
}

BiColoredMultigraph::BiColoredMultigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "graph needs n >= 1");
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(e.id) + " has an endpoint outside 1.." +
                      std::to_string(n_));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(e.id) + " is a self-loop");
    }
    if (!index_.emplace(e.id, i).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate edge id " + std::to_string(e.id));
    }
    if (e.is_red()) ++m_red_;
  }
}

std::size_t BiColoredMultigraph::index_of(EdgeId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown edge id " + std::to_string(id));
  }
  return it->second;
}

std::vector<EdgeId> BiColoredMultigraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

BiColoredMultigraph BiColoredMultigraph::subgraph(
    const std::vector<EdgeId>& keep) const {
  std::vector<Edge> out;
  out.reserve(keep.size());
  for (EdgeId id : keep) out.push_back(edge(id));
  return BiColoredMultigraph(n_, std::move(out));
}

BiColoredMultigraph BiColoredMultigraph::without(EdgeId id) const {
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (e.id != id) out.push_back(e);
  }
  return BiColoredMultigraph(n_, std::move(out));
}

bool BiColoredMultigraph::is_connected() const {
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (const auto& e : edges_) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

EdgeId GraphBuilder::add(int u, int v, Color c, std::string label) {
  const EdgeId id = edges_.size();
  edges_.push_back(Edge{id, u, v, c, std::move(label)});
  return id;
}

bool is_kg_counted(const BiColoredMultigraph& h, const SparsityParams& params) {
  const auto n = static_cast<std::size_t>(h.n());
  const auto k = static_cast<std::size_t>(params.k());
  const auto g = static_cast<std::size_t>(params.g());
  return h.m() == k * (n - 1) && h.m_red() <= g * (n - 1);
}

namespace {

class FanSearch {
 public:
  FanSearch(const BiColoredMultigraph& h, const SparsityParams& params)
      : h_(h),
        k_(params.k()),
        g_(params.g()),
        tail_(h.m(), 0),
        size_(static_cast<std::size_t>(h.n()) + 1, 0),
        red_(static_cast<std::size_t>(h.n()) + 1, 0) {}

  std::vector<FanDiagram> run() {
    recurse(0);
    return std::move(found_);
  }

 private:
  void recurse(std::size_t index) {
    if (index == h_.m()) {
      emit();
      return;
    }
    const Edge& e = h_.edge_at(index);
    const int lo = std::min(e.u, e.v);
    const int hi = std::max(e.u, e.v);
    for (int vertex : {lo, hi}) {
      if (vertex == 1 || !fits(vertex, e)) continue;
      place(vertex, e, index, +1);
      recurse(index + 1);
      place(vertex, e, index, -1);
    }
  }

  bool fits(int vertex, const Edge& e) const {
    if (size_[vertex] >= k_) return false;
    return !e.is_red() || red_[vertex] < g_;
  }

  void place(int vertex, const Edge& e, std::size_t index, int delta) {
    size_[vertex] += delta;
    if (e.is_red()) red_[vertex] += delta;
    tail_[index] = delta > 0 ? vertex : 0;
  }

  void emit() {
    FanDiagram fan;
    fan.tail = tail_;
    fan.groups.resize(static_cast<std::size_t>(h_.n() - 1));
    for (std::size_t i = 0; i < h_.m(); ++i) {
      fan.groups[static_cast<std::size_t>(tail_[i] - 2)].push_back(
          h_.edge_at(i).id);
    }
    for (auto& g : fan.groups) std::sort(g.begin(), g.end());
    found_.push_back(std::move(fan));
  }

  const BiColoredMultigraph& h_;
  int k_;
  int g_;
  std::vector<int> tail_;
  std::vector<int> size_;
  std::vector<int> red_;
  std::vector<FanDiagram> found_;
};

}  // namespace

std::vector<FanDiagram> enumerate_distinct_fans(const BiColoredMultigraph& h,
                                                const SparsityParams& params,
                                                int max_vertices) {
  if (h.n() > max_vertices) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "fan enumeration is limited to n <= " +
                    std::to_string(max_vertices) + " (got " +
                    std::to_string(h.n()) + ")");
  }
  if (!is_kg_counted(h, params)) return {};
  // Every group has exactly k edges because the counts force it: m = k(n-1)
  // edges over n-1 groups of capacity k.
  return FanSearch(h, params).run();
}

}  // namespace bodycad
