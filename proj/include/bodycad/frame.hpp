#pragma once

// Rigidity matrices of (k,g)-frames over an exact field: assembly, tie-down,
// the pure condition, motions, random generic labelings, the labeling built
// from a spanning-tree certificate, and the fan expansion of the pure
// condition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bodycad/decomposition.hpp"
#include "bodycad/error.hpp"
#include "bodycad/graph.hpp"
#include "bodycad/matrix.hpp"
#include "bodycad/scalar.hpp"

namespace bodycad {

/// Edge labels p: E -> F^k. Red labels vanish on the first k-g coordinates.
template <class F>
struct FrameLabeling {
  SparsityParams params;
  std::map<EdgeId, std::vector<F>> vec_of;

  friend bool operator==(const FrameLabeling&, const FrameLabeling&) = default;
};

/// m x kn matrix: the row of edge uv (u < v) carries p(e) in u's k columns
/// and -p(e) in v's.
template <class F>
struct RigidityMatrix {
  int n = 0;
  SparsityParams params;
  Matrix<F> rows;
  std::vector<EdgeId> row_edge;
};

/// The rigidity matrix with the basic tie-down T(k) appended.
template <class F>
struct TiedMatrix {
  SparsityParams params;
  Matrix<F> square;
};

template <class F>
struct MotionSpace {
  std::size_t rank = 0;
  std::vector<std::vector<F>> kernel_basis;
  int trivial_dim = 0;
  int dof = 0;

  bool flexible() const { return dof > 0; }
};

template <class F>
RigidityMatrix<F> assemble(const BiColoredMultigraph& h,
                           const FrameLabeling<F>& labeling) {
  const SparsityParams& params = labeling.params;
  const auto k = static_cast<std::size_t>(params.k());
  RigidityMatrix<F> out{h.n(), params,
                        Matrix<F>(h.m(), k * static_cast<std::size_t>(h.n())),
                        {}};
  out.row_edge.reserve(h.m());
  for (std::size_t r = 0; r < h.m(); ++r) {
    const Edge& e = h.edge_at(r);
    const auto it = labeling.vec_of.find(e.id);
    if (it == labeling.vec_of.end() || it->second.size() != k) {
      throw Error(ErrorCode::MissingLabel,
                  "edge " + std::to_string(e.id) + " has no " +
                      std::to_string(k) + "-vector label");
    }
    const auto& p = it->second;
    if (e.is_red()) {
      for (int j = 0; j < params.black_only(); ++j) {
        if (!is_zero(p[static_cast<std::size_t>(j)])) {
          throw Error(ErrorCode::RedPatternViolation,
                      "red edge " + std::to_string(e.id) +
                          " has a nonzero coordinate " + std::to_string(j + 1));
        }
      }
    }
    const auto tail = static_cast<std::size_t>(std::min(e.u, e.v) - 1);
    const auto head = static_cast<std::size_t>(std::max(e.u, e.v) - 1);
    for (std::size_t j = 0; j < k; ++j) {
      out.rows(r, tail * k + j) = p[j];
      out.rows(r, head * k + j) = -p[j];
    }
    out.row_edge.push_back(e.id);
  }
  return out;
}

template <class F>
TiedMatrix<F> tie_down(const RigidityMatrix<F>& m) {
  const auto k = static_cast<std::size_t>(m.params.k());
  const auto cols = m.rows.cols();
  if (m.rows.rows() + k != cols) {
    throw Error(ErrorCode::NotCounted,
                "tie-down needs kn-k = " + std::to_string(cols - k) +
                    " rows, matrix has " + std::to_string(m.rows.rows()));
  }
  TiedMatrix<F> out{m.params, m.rows};
  std::vector<F> row(cols, F(0));
  for (std::size_t j = 0; j < k; ++j) {
    row[j] = F(1);
    out.square.append_row(row);
    row[j] = F(0);
  }
  return out;
}

/// det M_T; nonzero iff the labeled frame is minimally rigid.
template <class F>
F pure_condition(const TiedMatrix<F>& t) {
  return determinant(t.square);
}

template <class F>
MotionSpace<F> rank_and_motions(const RigidityMatrix<F>& m) {
  MotionSpace<F> out;
  out.rank = rank(m.rows);
  out.kernel_basis = kernel_basis(m.rows);
  out.trivial_dim = m.params.k();
  out.dof = static_cast<int>(out.kernel_basis.size()) - out.trivial_dim;
  return out;
}

/// Coordinates drawn independently per edge (in edge order) from the
/// generator seeded with `seed`; red edges draw only their last g entries.
template <class F>
FrameLabeling<F> random_generic_labeling(const BiColoredMultigraph& h,
                                         const SparsityParams& params,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FrameLabeling<F> out{params, {}};
  const auto k = static_cast<std::size_t>(params.k());
  for (const auto& e : h.edges()) {
    std::vector<F> p(k, F(0));
    const std::size_t first =
        e.is_red() ? static_cast<std::size_t>(params.black_only()) : 0;
    for (std::size_t j = first; j < k; ++j) p[j] = sample_scalar<F>(rng);
    out.vec_of.emplace(e.id, std::move(p));
  }
  return out;
}

/// Every edge of tree T_j receives the shared vector a_j, truncated to its
/// last g coordinates when T_j is an angular-side tree.
template <class F>
FrameLabeling<F> specialize_from_certificate(const BiColoredMultigraph& h,
                                             const ForestCertificate& cert,
                                             const SparsityParams& params,
                                             std::uint64_t seed) {
  if (!verify_certificate(h, cert, params)) {
    throw Error(ErrorCode::InvalidCertificate,
                "certificate is not a valid spanning-tree decomposition");
  }
  std::mt19937_64 rng(seed);
  const auto k = static_cast<std::size_t>(params.k());
  std::vector<std::vector<F>> a(k, std::vector<F>(k, F(0)));
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t first =
        j < static_cast<std::size_t>(params.black_only())
            ? 0
            : static_cast<std::size_t>(params.black_only());
    for (std::size_t i = first; i < k; ++i) a[j][i] = sample_scalar<F>(rng);
  }
  FrameLabeling<F> out{params, {}};
  for (const auto& [id, cls] : cert.class_of) {
    out.vec_of.emplace(id, a[static_cast<std::size_t>(cls)]);
  }
  return out;
}

template <class F>
struct FanExpansion {
  F fan_sum = F(0);      // signed sum of fan terms, already mapped to det M_T
  F determinant = F(0);  // det M_T by elimination
  std::size_t fans = 0;
  std::size_t nonzero_terms = 0;

  bool agrees() const { return fan_sum == determinant; }
};

/// Expands det M_T as a signed sum over distinct (k,g)-fans using the
/// generalized Laplace expansion along the k-column blocks of vertices
/// 2..n, and evaluates det M_T independently by elimination.
template <class F>
FanExpansion<F> fan_expansion(const BiColoredMultigraph& h,
                              const SparsityParams& params,
                              const FrameLabeling<F>& labeling,
                              int max_vertices = kDefaultFanVertexLimit) {
  const auto fans = enumerate_distinct_fans(h, params, max_vertices);
  const RigidityMatrix<F> m = assemble(h, labeling);
  FanExpansion<F> out;
  out.determinant = pure_condition(tie_down(m));
  out.fans = fans.size();

  const auto k = static_cast<std::size_t>(params.k());
  // Expanding along the tie-down rows leaves det A, A = M without vertex 1's
  // columns, times (-1)^{k * k(n-1)}.
  const bool tie_flip = (k * k * static_cast<std::size_t>(h.n() - 1)) % 2 == 1;

  for (const auto& fan : fans) {
    std::vector<std::size_t> order;
    order.reserve(h.m());
    F term(1);
    for (int vertex = 2; vertex <= h.n(); ++vertex) {
      std::vector<std::size_t> rows;
      for (EdgeId id : fan.group(vertex)) rows.push_back(h.index_of(id));
      std::sort(rows.begin(), rows.end());
      std::vector<std::size_t> cols(k);
      for (std::size_t j = 0; j < k; ++j) {
        cols[j] = static_cast<std::size_t>(vertex - 1) * k + j;
      }
      term *= determinant(m.rows.select(rows, cols));
      order.insert(order.end(), rows.begin(), rows.end());
    }
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        if (order[a] > order[b]) ++inversions;
      }
    }
    if (is_zero(term)) continue;
    ++out.nonzero_terms;
    const bool flip = (inversions % 2 == 1) != tie_flip;
    if (flip) {
      out.fan_sum -= term;
    } else {
      out.fan_sum += term;
    }
  }
  return out;
}

template <class F>
bool fan_expansion_check(const BiColoredMultigraph& h,
                         const SparsityParams& params,
                         const FrameLabeling<F>& labeling,
                         int max_vertices = kDefaultFanVertexLimit) {
  return fan_expansion(h, params, labeling, max_vertices).agrees();
}

}  // namespace bodycad
