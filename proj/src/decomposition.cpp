#include "bodycad/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "bodycad/error.hpp"

namespace bodycad {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::MinimallyRigid: return "MinimallyRigid";
    case VerdictStatus::Underconstrained: return "Underconstrained";
    case VerdictStatus::Dependent: return "Dependent";
    case VerdictStatus::NotCounted: return "NotCounted";
  }
  return "Unknown";
}

std::optional<VerdictStatus> verdict_status_from_string(std::string_view s) {
  for (auto v : {VerdictStatus::MinimallyRigid, VerdictStatus::Underconstrained,
                 VerdictStatus::Dependent, VerdictStatus::NotCounted}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

EdgeSet ForestCertificate::b_prime(const BiColoredMultigraph& h,
                                   const SparsityParams& params) const {
  EdgeSet out;
  for (const auto& [id, cls] : class_of) {
    if (cls >= params.black_only() && h.contains(id) && !h.edge(id).is_red()) {
      out.push_back(id);
    }
  }
  return out;
}

EdgeSet ForestCertificate::tree(int index) const {
  EdgeSet out;
  for (const auto& [id, cls] : class_of) {
    if (cls == index) out.push_back(id);
  }
  return out;
}

ForestPacking::ForestPacking(const BiColoredMultigraph& h, SparsityParams params)
    : h_(h),
      params_(params),
      class_of_(h.m(), -1),
      adjacency_(static_cast<std::size_t>(params.k()),
                 std::vector<std::vector<std::size_t>>(
                     static_cast<std::size_t>(h.n()) + 1)) {}

bool ForestPacking::admissible(std::size_t edge_index, int cls) const {
  return cls >= params_.black_only() || !h_.edge_at(edge_index).is_red();
}

std::optional<std::vector<std::size_t>> ForestPacking::cycle_path(
    std::size_t edge_index, int cls) const {
  const Edge& e = h_.edge_at(edge_index);
  const auto& adj = adjacency_[static_cast<std::size_t>(cls)];
  std::vector<std::size_t> via(adj.size(), kNone);
  std::vector<bool> seen(adj.size(), false);
  std::deque<int> queue{e.u};
  seen[static_cast<std::size_t>(e.u)] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == e.v) break;
    for (std::size_t f : adj[static_cast<std::size_t>(x)]) {
      const int y = h_.edge_at(f).other(x);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      via[static_cast<std::size_t>(y)] = f;
      queue.push_back(y);
    }
  }
  if (!seen[static_cast<std::size_t>(e.v)]) return std::nullopt;
  std::vector<std::size_t> path;
  for (int x = e.v; x != e.u;) {
    const std::size_t f = via[static_cast<std::size_t>(x)];
    path.push_back(f);
    x = h_.edge_at(f).other(x);
  }
  return path;
}

void ForestPacking::move(std::size_t edge_index, int to) {
  const Edge& e = h_.edge_at(edge_index);
  const int from = class_of_[edge_index];
  if (from >= 0) {
    for (int end : {e.u, e.v}) {
      auto& list = adjacency_[static_cast<std::size_t>(from)]
                             [static_cast<std::size_t>(end)];
      list.erase(std::find(list.begin(), list.end(), edge_index));
    }
  }
  class_of_[edge_index] = to;
  if (to >= 0) {
    for (int end : {e.u, e.v}) {
      adjacency_[static_cast<std::size_t>(to)][static_cast<std::size_t>(end)]
          .push_back(edge_index);
    }
  }
}

bool ForestPacking::insert(EdgeId id) {
  const std::size_t start = h_.index_of(id);
  if (class_of_[start] >= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + std::to_string(id) + " is already packed");
  }
  blocked_.clear();
  const int k = params_.k();
  std::vector<std::size_t> parent(h_.m(), kNone);
  std::vector<bool> visited(h_.m(), false);
  std::deque<std::size_t> queue{start};
  visited[start] = true;

  // Breadth-first search over the exchange graph: x -> y when x can enter
  // y's forest in y's place. The first edge that fits some forest outright
  // closes a shortest augmenting sequence.
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (int cls = 0; cls < k; ++cls) {
      if (cls == class_of_[x] || !admissible(x, cls)) continue;
      if (cycle_path(x, cls)) continue;
      std::vector<std::pair<std::size_t, int>> moves{{x, cls}};
      for (std::size_t y = x; parent[y] != kNone; y = parent[y]) {
        moves.emplace_back(parent[y], class_of_[y]);
      }
      for (const auto& [edge_index, to] : moves) move(edge_index, -1);
      for (const auto& [edge_index, to] : moves) move(edge_index, to);
      ++packed_;
      return true;
    }
    for (int cls = 0; cls < k; ++cls) {
      if (cls == class_of_[x] || !admissible(x, cls)) continue;
      const auto path = cycle_path(x, cls);
      for (std::size_t y : *path) {
        if (visited[y]) continue;
        visited[y] = true;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < h_.m(); ++i) {
    if (visited[i]) blocked_.push_back(h_.edge_at(i).id);
  }
  return false;
}

ForestCertificate ForestPacking::assignment() const {
  ForestCertificate cert;
  for (std::size_t i = 0; i < h_.m(); ++i) {
    if (class_of_[i] >= 0) cert.class_of.emplace(h_.edge_at(i).id, class_of_[i]);
  }
  return cert;
}

int rank(const BiColoredMultigraph& h, const EdgeSet& subset,
         const SparsityParams& params) {
  ForestPacking packing(h, params);
  for (EdgeId id : subset) packing.insert(id);
  return static_cast<int>(packing.size());
}

int rank(const BiColoredMultigraph& h, const SparsityParams& params) {
  return rank(h, h.edge_ids(), params);
}

bool is_independent(const BiColoredMultigraph& h, const EdgeSet& subset,
                    const SparsityParams& params) {
  return rank(h, subset, params) == static_cast<int>(subset.size());
}

std::optional<ForestCertificate> find_certificate(const BiColoredMultigraph& h,
                                                  const SparsityParams& params) {
  if (!is_kg_counted(h, params)) return std::nullopt;
  ForestPacking packing(h, params);
  for (const auto& e : h.edges()) {
    if (!packing.insert(e.id)) return std::nullopt;
  }
  return packing.assignment();
}

bool verify_certificate(const BiColoredMultigraph& h,
                        const ForestCertificate& cert,
                        const SparsityParams& params) {
  if (cert.class_of.size() != h.m()) return false;
  const int k = params.k();
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<std::vector<int>> parent(static_cast<std::size_t>(k),
                                       std::vector<int>(n + 1));
  for (auto& p : parent) std::iota(p.begin(), p.end(), 0);
  std::vector<std::size_t> count(static_cast<std::size_t>(k), 0);
  for (const auto& [id, cls] : cert.class_of) {
    if (!h.contains(id) || cls < 0 || cls >= k) return false;
    const Edge& e = h.edge(id);
    if (e.is_red() && cls < params.black_only()) return false;
    auto& uf = parent[static_cast<std::size_t>(cls)];
    auto find = [&uf](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;  // cycle
    uf[a] = b;
    ++count[static_cast<std::size_t>(cls)];
  }
  // n-1 acyclic edges on n vertices span.
  return std::all_of(count.begin(), count.end(),
                     [n](std::size_t c) { return c == n - 1; });
}

namespace {

EdgeSet minimal_circuit(const BiColoredMultigraph& h,
                        const SparsityParams& params, const EdgeSet& basis,
                        EdgeId e, const EdgeSet& candidates) {
  // x lies on the circuit iff basis + e - x is independent.
  EdgeSet circuit{e};
  for (EdgeId x : candidates) {
    if (x == e) continue;
    EdgeSet trial;
    trial.reserve(basis.size());
    for (EdgeId y : basis) {
      if (y != x) trial.push_back(y);
    }
    trial.push_back(e);
    if (is_independent(h, trial, params)) circuit.push_back(x);
  }
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

EdgeSet circuit_on_failure(const BiColoredMultigraph& h,
                           const SparsityParams& params, const EdgeSet& subset,
                           EdgeId e) {
  if (!h.contains(e) ||
      std::find(subset.begin(), subset.end(), e) != subset.end()) {
    throw Error(ErrorCode::NotACircuit,
                "edge " + std::to_string(e) + " is not a new edge of H");
  }
  ForestPacking packing(h, params);
  for (EdgeId id : subset) {
    if (!packing.insert(id)) {
      throw Error(ErrorCode::NotACircuit, "subset is not independent");
    }
  }
  if (packing.insert(e)) {
    throw Error(ErrorCode::NotACircuit,
                "edge " + std::to_string(e) + " is independent of the subset");
  }
  return minimal_circuit(h, params, subset, e, packing.last_blocked());
}

CombinatorialVerdict decide(const BiColoredMultigraph& h,
                            const SparsityParams& params) {
  ForestPacking packing(h, params);
  EdgeSet basis;
  EdgeSet rejected;
  for (const auto& e : h.edges()) {
    if (packing.insert(e.id)) {
      basis.push_back(e.id);
    } else {
      rejected.push_back(e.id);
    }
  }

  CombinatorialVerdict verdict;
  verdict.rank = static_cast<int>(packing.size());
  verdict.deficiency = params.k() * (h.n() - 1) - verdict.rank;

  // Fundamental circuits against the final basis. A failed insert leaves the
  // packing untouched, so the finished packing can be probed repeatedly.
  for (EdgeId e : rejected) {
    packing.insert(e);
    verdict.circuits.push_back(
        minimal_circuit(h, params, basis, e, packing.last_blocked()));
  }

  if (rejected.empty()) {
    if (verdict.deficiency == 0) {
      verdict.status = VerdictStatus::MinimallyRigid;
      verdict.certificate = packing.assignment();
    } else {
      verdict.status = VerdictStatus::Underconstrained;
    }
  } else {
    verdict.status = is_kg_counted(h, params) ? VerdictStatus::Dependent
                                              : VerdictStatus::NotCounted;
  }
  return verdict;
}

}  // namespace bodycad
