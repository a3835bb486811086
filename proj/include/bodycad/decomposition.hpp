#pragma once

// Colour-restricted spanning-forest packing. Classes 0..k-g-1 accept black
// edges only; classes k-g..k-1 accept every edge. A set of edges is
// independent when it packs into the k classes as forests, which is the
// union of a (k-g)-fold graphic matroid on the black edges and a g-fold
// graphic matroid on all edges. A (k,g)-counted graph of full rank packs into
// k spanning trees, which is exactly the tree-pair decomposition that decides
// generic minimal rigidity.

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "bodycad/graph.hpp"

namespace bodycad {

using EdgeSet = std::vector<EdgeId>;

/// Tree index per edge. Indices are 0-based: classes below k-g hold the
/// black-only trees (B minus B'), the rest hold R plus B'.
struct ForestCertificate {
  std::map<EdgeId, int> class_of;

  /// Black edges placed in the angular-side trees.
  EdgeSet b_prime(const BiColoredMultigraph& h,
                  const SparsityParams& params) const;
  EdgeSet tree(int index) const;

  friend bool operator==(const ForestCertificate&,
                         const ForestCertificate&) = default;
};

enum class VerdictStatus { MinimallyRigid, Underconstrained, Dependent, NotCounted };

std::string_view to_string(VerdictStatus s);
std::optional<VerdictStatus> verdict_status_from_string(std::string_view s);

struct CombinatorialVerdict {
  VerdictStatus status = VerdictStatus::Underconstrained;
  std::optional<ForestCertificate> certificate;
  int rank = 0;
  int deficiency = 0;  // k(n-1) - rank(E)
  /// One fundamental circuit per edge rejected by the greedy packing, in edge
  /// order. Empty unless the edge set is dependent.
  std::vector<EdgeSet> circuits;

  std::optional<EdgeSet> circuit() const {
    if (circuits.empty()) return std::nullopt;
    return circuits.front();
  }

  friend bool operator==(const CombinatorialVerdict&,
                         const CombinatorialVerdict&) = default;
};

/// Incremental packing of edges into k forests with augmenting exchanges.
/// Single-threaded and mutable; use one instance per analysis.
class ForestPacking {
 public:
  ForestPacking(const BiColoredMultigraph& h, SparsityParams params);

  /// Tries to add the edge, re-routing already packed edges if needed.
  /// Returns false (and leaves the packing unchanged) when the edge is
  /// dependent on the packed set.
  bool insert(EdgeId id);

  /// Edges examined by the last failed insert (its own id included). The
  /// circuit of the failed edge lies inside this set.
  const EdgeSet& last_blocked() const { return blocked_; }

  std::size_t size() const { return packed_; }
  /// Class per packed edge; unpacked edges are absent.
  ForestCertificate assignment() const;

 private:
  bool admissible(std::size_t edge_index, int cls) const;
  /// Edge indices on the tree path joining the endpoints of `edge_index` in
  /// forest `cls`, or nullopt when they lie in different trees.
  std::optional<std::vector<std::size_t>> cycle_path(std::size_t edge_index,
                                                     int cls) const;
  void move(std::size_t edge_index, int to);

  const BiColoredMultigraph& h_;
  SparsityParams params_;
  std::vector<int> class_of_;                      // -1 when unpacked
  std::vector<std::vector<std::vector<std::size_t>>> adjacency_;  // [cls][vertex]
  std::size_t packed_ = 0;
  EdgeSet blocked_;
};

/// Size of the largest packable subset of `subset`.
int rank(const BiColoredMultigraph& h, const EdgeSet& subset,
         const SparsityParams& params);
int rank(const BiColoredMultigraph& h, const SparsityParams& params);

bool is_independent(const BiColoredMultigraph& h, const EdgeSet& subset,
                    const SparsityParams& params);

/// A spanning-tree certificate when H is (k,g)-counted and of full rank.
std::optional<ForestCertificate> find_certificate(const BiColoredMultigraph& h,
                                                  const SparsityParams& params);

/// Checks the certificate by direct graph inspection: every edge classed, red
/// edges only in angular-side classes, and every class a spanning tree.
bool verify_certificate(const BiColoredMultigraph& h,
                        const ForestCertificate& cert,
                        const SparsityParams& params);

/// The unique circuit inside subset + {e}. Throws Error(NotACircuit) unless
/// `subset` is independent and `subset + {e}` is not.
EdgeSet circuit_on_failure(const BiColoredMultigraph& h,
                           const SparsityParams& params, const EdgeSet& subset,
                           EdgeId e);

CombinatorialVerdict decide(const BiColoredMultigraph& h,
                            const SparsityParams& params);

}  // namespace bodycad
