#pragma once

// End-to-end analysis: expand a cad framework, decide generic minimal
// rigidity combinatorially, and cross-check against exact ranks of the
// rigidity matrix at the given embedding and at random generic labelings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bodycad/cad.hpp"
#include "bodycad/decomposition.hpp"
#include "bodycad/frame.hpp"

namespace bodycad {

enum class FieldChoice { Rational, Prime };

std::string_view to_string(FieldChoice f);
std::optional<FieldChoice> field_choice_from_string(std::string_view s);

enum class CrossCheck { Agree, Disagree, NotApplicable };

std::string_view to_string(CrossCheck c);
std::optional<CrossCheck> cross_check_from_string(std::string_view s);

/// Exact rank data of one rigidity matrix.
struct NumericSummary {
  int rows = 0;
  int rank = 0;
  int dof = 0;
  std::optional<bool> det_nonzero;  // only for (k,g)-counted graphs
  int attempts = 1;                 // labelings tried (generic runs only)

  friend bool operator==(const NumericSummary&, const NumericSummary&) = default;
};

struct PrimitiveRecord {
  std::string constraint_id;
  int row = 0;  // index within the constraint's expansion
  PrimitiveFlavor flavor = PrimitiveFlavor::Blind;
  int body_i = 0;  // 0-based
  int body_j = 0;
  std::optional<int> tree;  // 1-based spanning tree of the certificate

  friend bool operator==(const PrimitiveRecord&, const PrimitiveRecord&) = default;
};

struct PrimitiveRef {
  std::string constraint_id;
  int row = 0;
  friend bool operator==(const PrimitiveRef&, const PrimitiveRef&) = default;
};

/// A minimally dependent set of primitive rows and the cad constraints they
/// come from.
struct CircuitRecord {
  std::vector<PrimitiveRef> members;
  std::vector<std::string> constraints;

  friend bool operator==(const CircuitRecord&, const CircuitRecord&) = default;
};

struct AnalysisReport {
  std::uint64_t seed = 0;
  FieldChoice field = FieldChoice::Prime;
  int bodies = 0;
  int constraints = 0;
  int angular_rows = 0;
  int blind_rows = 0;
  int point_point_rows = 0;

  /// Empty when withheld.
  std::optional<CombinatorialVerdict> combinatorial;
  std::string withheld_reason;

  NumericSummary embedding;
  std::optional<NumericSummary> generic;
  CrossCheck cross_check = CrossCheck::NotApplicable;
  /// The embedding has lower rank than a generic one of the same graph.
  bool embedding_nongeneric = false;

  std::vector<PrimitiveRecord> primitives;
  std::vector<CircuitRecord> circuits;

  bool withheld() const { return !combinatorial.has_value(); }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Stable process exit codes of the command-line tool.
enum ExitCode : int {
  kExitRigid = 0,
  kExitInputError = 1,
  kExitFlexible = 2,
  kExitDependent = 3,
  kExitWithheld = 4,
  kExitDisagree = 5,
};

int exit_code(const AnalysisReport& report);
int exit_code(const CombinatorialVerdict& verdict);

inline constexpr int kGenericAttempts = 3;

/// Exact rank summary of M(H(p)); dof counts motions beyond the k trivial ones.
template <class F>
NumericSummary numeric_summary(const BiColoredMultigraph& h,
                               const FrameLabeling<F>& labeling) {
  const RigidityMatrix<F> m = assemble(h, labeling);
  NumericSummary out;
  out.rows = static_cast<int>(h.m());
  out.rank = static_cast<int>(rank(m.rows));
  out.dof = static_cast<int>(m.rows.cols()) - out.rank - labeling.params.k();
  if (m.rows.rows() + static_cast<std::size_t>(labeling.params.k()) ==
      m.rows.cols()) {
    out.det_nonzero = !is_zero(pure_condition(tie_down(m)));
  }
  return out;
}

/// Rank at random generic labelings: tries up to kGenericAttempts seeds
/// derived from `seed` and keeps the first that reaches `target_rank`
/// (or the best one seen).
NumericSummary generic_summary(const BiColoredMultigraph& h,
                               const SparsityParams& params, FieldChoice field,
                               std::uint64_t seed, int target_rank);

AnalysisReport analyze(const CadFramework& fw, std::uint64_t seed,
                       FieldChoice field = FieldChoice::Prime);

// --- random (k,g)-counted frames -------------------------------------------

enum class RandomShape {
  UniformPairs,        // every edge joins a uniformly random pair
  TreeUnion,           // k random spanning trees, reds in the angular trees
  PerturbedTreeUnion,  // TreeUnion with one edge moved to a random pair
};

struct RandomFrameSpec {
  int n = 2;
  int k = 6;
  int g = 3;
  double red_fraction = 0.0;
  std::uint64_t seed = 0;
  RandomShape shape = RandomShape::UniformPairs;
};

template <class F>
struct RandomFrame {
  BiColoredMultigraph graph;
  FrameLabeling<F> labeling;
  bool connected = false;
};

/// (k,g)-counted graph with round(red_fraction * m) red edges and a random
/// generic labeling; deterministic per seed. Throws Error(InfeasibleSpec).
BiColoredMultigraph random_counted_graph(const RandomFrameSpec& spec);

template <class F>
RandomFrame<F> random_counted_frame(const RandomFrameSpec& spec) {
  BiColoredMultigraph h = random_counted_graph(spec);
  auto labeling = random_generic_labeling<F>(h, SparsityParams(spec.k, spec.g),
                                             split_seed(spec.seed, 1));
  const bool connected = h.is_connected();
  return {std::move(h), std::move(labeling), connected};
}

struct TrialResult {
  int n = 0;
  int m_red = 0;
  VerdictStatus status = VerdictStatus::Underconstrained;
  bool det_nonzero = false;
  int attempts = 0;
  bool agree = false;
};

/// One combinatorial-versus-determinant trial over the prime field, retrying
/// zero determinants with up to kGenericAttempts labelings.
TrialResult crossvalidate_trial(const BiColoredMultigraph& h,
                                const SparsityParams& params, std::uint64_t seed);

struct CrossValidationSummary {
  int trials = 0;
  int agreements = 0;
  int rigid = 0;
  std::vector<int> disagreeing_trials;
};

/// Trial t uses seed split_seed(seed, t), n uniform in 2..nmax, a red count
/// uniform in 0..g(n-1), and cycles through the RandomShape variants.
CrossValidationSummary crossvalidate(int trials, int nmax,
                                     const SparsityParams& params,
                                     std::uint64_t seed);

RandomFrameSpec crossvalidate_spec(int trial, int nmax, const SparsityParams& params,
                                   std::uint64_t seed);

}  // namespace bodycad
