#include "bodycad/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "bodycad/error.hpp"

namespace bodycad {

std::string_view to_string(FieldChoice f) {
  return f == FieldChoice::Rational ? "rational" : "prime";
}

std::optional<FieldChoice> field_choice_from_string(std::string_view s) {
  if (s == "rational") return FieldChoice::Rational;
  if (s == "prime") return FieldChoice::Prime;
  return std::nullopt;
}

std::string_view to_string(CrossCheck c) {
  switch (c) {
    case CrossCheck::Agree: return "Agree";
    case CrossCheck::Disagree: return "Disagree";
    case CrossCheck::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::optional<CrossCheck> cross_check_from_string(std::string_view s) {
  for (auto c : {CrossCheck::Agree, CrossCheck::Disagree, CrossCheck::NotApplicable}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

int exit_code(const CombinatorialVerdict& verdict) {
  switch (verdict.status) {
    case VerdictStatus::MinimallyRigid: return kExitRigid;
    case VerdictStatus::Underconstrained: return kExitFlexible;
    case VerdictStatus::Dependent:
    case VerdictStatus::NotCounted: return kExitDependent;
  }
  return kExitInputError;
}

int exit_code(const AnalysisReport& report) {
  if (report.withheld()) return kExitWithheld;
  if (report.cross_check == CrossCheck::Disagree) return kExitDisagree;
  return exit_code(*report.combinatorial);
}

namespace {

template <class F>
NumericSummary generic_summary_in(const BiColoredMultigraph& h,
                                  const SparsityParams& params,
                                  std::uint64_t seed, int target_rank) {
  NumericSummary best;
  for (int attempt = 0; attempt < kGenericAttempts; ++attempt) {
    const auto labeling = random_generic_labeling<F>(
        h, params, split_seed(seed, static_cast<std::uint64_t>(attempt)));
    NumericSummary s = numeric_summary(h, labeling);
    s.attempts = attempt + 1;
    if (attempt == 0 || s.rank > best.rank) best = s;
    best.attempts = attempt + 1;
    if (best.rank >= target_rank) break;
  }
  return best;
}

}  // namespace

NumericSummary generic_summary(const BiColoredMultigraph& h,
                               const SparsityParams& params, FieldChoice field,
                               std::uint64_t seed, int target_rank) {
  if (field == FieldChoice::Rational) {
    return generic_summary_in<Rational>(h, params, seed, target_rank);
  }
  return generic_summary_in<ModP>(h, params, seed, target_rank);
}

AnalysisReport analyze(const CadFramework& fw, std::uint64_t seed,
                       FieldChoice field) {
  const PrimitiveFrame frame = build_primitive_frame(fw);
  const BiColoredMultigraph& h = frame.graph;
  const SparsityParams params = frame.labeling.params;

  AnalysisReport report;
  report.seed = seed;
  report.field = field;
  report.bodies = static_cast<int>(fw.bodies.size());
  report.constraints = static_cast<int>(fw.constraints.size());
  for (std::size_t e = 0; e < frame.primitives.size(); ++e) {
    const PrimitiveConstraint& prim = frame.primitives[e];
    const CadConstraint& src = fw.constraints[prim.source];
    switch (prim.flavor) {
      case PrimitiveFlavor::Angular: ++report.angular_rows; break;
      case PrimitiveFlavor::Blind: ++report.blind_rows; break;
      case PrimitiveFlavor::PointPointCoincidenceRow: ++report.point_point_rows; break;
    }
    report.primitives.push_back(
        {src.id, prim.row_in_source, prim.flavor, src.i, src.j, std::nullopt});
  }

  report.embedding = numeric_summary(h, frame.labeling);

  if (frame.taint) {
    report.withheld_reason =
        "point-point coincidence present: the spanning-tree characterization "
        "does not apply, only numeric results are reported";
    report.cross_check = CrossCheck::NotApplicable;
    return report;
  }

  CombinatorialVerdict verdict = decide(h, params);
  if (verdict.certificate) {
    for (const auto& [id, cls] : verdict.certificate->class_of) {
      report.primitives[h.index_of(id)].tree = cls + 1;
    }
  }
  for (const EdgeSet& circuit : verdict.circuits) {
    CircuitRecord record;
    std::set<std::size_t> sources;
    for (EdgeId id : circuit) {
      const PrimitiveConstraint& prim = frame.primitives[h.index_of(id)];
      record.members.push_back(
          {fw.constraints[prim.source].id, prim.row_in_source});
      sources.insert(prim.source);
    }
    for (std::size_t s : sources) record.constraints.push_back(fw.constraints[s].id);
    report.circuits.push_back(std::move(record));
  }

  report.generic = generic_summary(h, params, field, seed, verdict.rank);
  report.cross_check = report.generic->rank == verdict.rank ? CrossCheck::Agree
                                                            : CrossCheck::Disagree;
  report.embedding_nongeneric = report.embedding.rank < report.generic->rank;
  report.combinatorial = std::move(verdict);
  return report;
}

// --- random frames -----------------------------------------------------------

namespace {

std::pair<int, int> random_pair(std::mt19937_64& rng, int n) {
  const int u = static_cast<int>(uniform_int(rng, 1, n));
  int v = static_cast<int>(uniform_int(rng, 1, n - 1));
  if (v >= u) ++v;
  return {u, v};
}

/// Random spanning tree: each vertex after the first in a random order
/// attaches to a uniformly chosen earlier vertex.
std::vector<std::pair<int, int>> random_tree(std::mt19937_64& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
    std::swap(order[i - 1], order[j]);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto j = static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
    edges.emplace_back(order[j], order[i]);
  }
  return edges;
}

}  // namespace

BiColoredMultigraph random_counted_graph(const RandomFrameSpec& spec) {
  if (spec.n < 1 || spec.k < 1 || spec.g < 1 || spec.g > spec.k) {
    throw Error(ErrorCode::InfeasibleSpec, "random frame needs n >= 1, 0 < g <= k");
  }
  if (!(spec.red_fraction >= 0.0 && spec.red_fraction <= 1.0)) {
    throw Error(ErrorCode::InfeasibleSpec, "red fraction must lie in [0, 1]");
  }
  const int m = spec.k * (spec.n - 1);
  const int m_red = static_cast<int>(std::floor(spec.red_fraction * m + 0.5));
  if (m_red > spec.g * (spec.n - 1)) {
    throw Error(ErrorCode::InfeasibleSpec,
                "requested " + std::to_string(m_red) + " red edges, at most " +
                    std::to_string(spec.g * (spec.n - 1)) + " allowed");
  }
  std::mt19937_64 rng(split_seed(spec.seed, 0));
  GraphBuilder builder(spec.n);
  if (m == 0) return builder.build();

  std::vector<std::pair<int, int>> ends;
  std::vector<bool> red(static_cast<std::size_t>(m), false);
  if (spec.shape == RandomShape::UniformPairs) {
    for (int e = 0; e < m; ++e) ends.push_back(random_pair(rng, spec.n));
    // Partial Fisher-Yates picks the red positions.
    std::vector<int> slots(static_cast<std::size_t>(m));
    std::iota(slots.begin(), slots.end(), 0);
    for (int r = 0; r < m_red; ++r) {
      const auto j = static_cast<std::size_t>(uniform_int(rng, r, m - 1));
      std::swap(slots[static_cast<std::size_t>(r)], slots[j]);
      red[static_cast<std::size_t>(slots[static_cast<std::size_t>(r)])] = true;
    }
  } else {
    for (int t = 0; t < spec.k; ++t) {
      for (const auto& e : random_tree(rng, spec.n)) ends.push_back(e);
    }
    // Reds go to the last g trees, which occupy the tail of `ends`.
    const int angular_start = (spec.k - spec.g) * (spec.n - 1);
    std::vector<int> slots(static_cast<std::size_t>(m - angular_start));
    std::iota(slots.begin(), slots.end(), angular_start);
    for (int r = 0; r < m_red; ++r) {
      const auto j = static_cast<std::size_t>(
          uniform_int(rng, r, static_cast<std::int64_t>(slots.size()) - 1));
      std::swap(slots[static_cast<std::size_t>(r)], slots[j]);
      red[static_cast<std::size_t>(slots[static_cast<std::size_t>(r)])] = true;
    }
    if (spec.shape == RandomShape::PerturbedTreeUnion && spec.n > 1) {
      const auto e = static_cast<std::size_t>(uniform_int(rng, 0, m - 1));
      ends[e] = random_pair(rng, spec.n);
    }
    // Shuffle the edge order so insertion order carries no tree structure.
    for (std::size_t i = ends.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1));
      std::swap(ends[i - 1], ends[j]);
      std::vector<bool>::swap(red[i - 1], red[j]);
    }
  }
  for (int e = 0; e < m; ++e) {
    const auto& [u, v] = ends[static_cast<std::size_t>(e)];
    builder.add(u, v, red[static_cast<std::size_t>(e)] ? Color::Red : Color::Black);
  }
  return builder.build();
}

TrialResult crossvalidate_trial(const BiColoredMultigraph& h,
                                const SparsityParams& params, std::uint64_t seed) {
  TrialResult out;
  out.n = h.n();
  out.m_red = static_cast<int>(h.m_red());
  out.status = decide(h, params).status;
  for (int attempt = 0; attempt < kGenericAttempts; ++attempt) {
    const auto labeling = random_generic_labeling<ModP>(
        h, params, split_seed(seed, static_cast<std::uint64_t>(attempt)));
    out.attempts = attempt + 1;
    out.det_nonzero = !is_zero(pure_condition(tie_down(assemble(h, labeling))));
    if (out.det_nonzero) break;
  }
  out.agree = (out.status == VerdictStatus::MinimallyRigid) == out.det_nonzero;
  return out;
}

RandomFrameSpec crossvalidate_spec(int trial, int nmax, const SparsityParams& params,
                                   std::uint64_t seed) {
  const std::uint64_t trial_seed = split_seed(seed, static_cast<std::uint64_t>(trial));
  std::mt19937_64 rng(trial_seed);
  RandomFrameSpec spec;
  spec.k = params.k();
  spec.g = params.g();
  spec.n = static_cast<int>(uniform_int(rng, 2, std::max(2, nmax)));
  const int m = spec.k * (spec.n - 1);
  const auto m_red = uniform_int(rng, 0, spec.g * (spec.n - 1));
  spec.red_fraction = static_cast<double>(m_red) / m;
  spec.seed = split_seed(trial_seed, 7);
  spec.shape = static_cast<RandomShape>(trial % 3);
  return spec;
}

CrossValidationSummary crossvalidate(int trials, int nmax,
                                     const SparsityParams& params,
                                     std::uint64_t seed) {
  CrossValidationSummary summary;
  for (int t = 0; t < trials; ++t) {
    const RandomFrameSpec spec = crossvalidate_spec(t, nmax, params, seed);
    const BiColoredMultigraph h = random_counted_graph(spec);
    const TrialResult r = crossvalidate_trial(h, params, split_seed(spec.seed, 1));
    ++summary.trials;
    if (r.status == VerdictStatus::MinimallyRigid) ++summary.rigid;
    if (r.agree) {
      ++summary.agreements;
    } else {
      summary.disagreeing_trials.push_back(t);
    }
  }
  return summary;
}

}  // namespace bodycad
