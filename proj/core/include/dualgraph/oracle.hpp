#pragma once

#include <optional>

#include "dualgraph/canonical.hpp"
#include "dualgraph/classify.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/report.hpp"
#include "dualgraph/yau.hpp"

namespace dualgraph {

// ---------------------------------------------------------------------------
// Brute-force maximization of p_a over effective cycles.
// ---------------------------------------------------------------------------

struct PaMaxResult {
  Cycle maximizer;
  Coeff value = 0;      // p_a(V,o)
  Coeff box_bound = 0;  // final per-coordinate bound B
  bool boundary_clear = false;
};

struct PaMaxOptions {
  Coeff max_box = 10'000;                  // growth cap per coordinate
  std::uint64_t node_budget = 50'000'000;  // branch-and-bound safety valve
};

// Exact maximum of p_a over effective cycles. The search box [0,B]^n is grown
// (doubling) until the real stationary point Z_K/2 lies inside, the integer
// maximizer is strictly below every upper face, and an exact ellipsoid tail
// bound certifies that no integer point outside the box can do better.
PaMaxResult pa_max(const WeightedDualGraph& g, Coeff initial_bound = 0,
                   const PaMaxOptions& options = {});

// Test oracle: plain enumeration of [0, bound]^n.
PaMaxResult pa_max_exhaustive(const WeightedDualGraph& g, Coeff bound);

// ---------------------------------------------------------------------------
// Independent search oracles for the lattice algorithms.
// ---------------------------------------------------------------------------

// Componentwise minimum of all effective anti-nef cycles with full support and
// coefficients in [1, cap].
Cycle anti_nef_minimum_oracle(const WeightedDualGraph& g, Coeff cap = 6);

// Unique minimal subcycle 0 < C <= d with p_a(C) = p_a(d).
Cycle minimal_model_oracle(const WeightedDualGraph& g, const Cycle& d,
                           std::uint64_t budget = kDefaultSubcycleBudget);

// Unique maximal subcycle 0 < C < d with O_C(-d) numerically trivial and
// p_a(C) = p_a(d).
Cycle tyurina_component_oracle(const WeightedDualGraph& g, const Cycle& d,
                               std::uint64_t budget = kDefaultSubcycleBudget);

// ---------------------------------------------------------------------------
// Theorem verification harness.
// ---------------------------------------------------------------------------

// Everything the per-graph checks need, computed once.
struct GraphAnalysis {
  Cycle z;
  Coeff z_squared = 0;
  Coeff pf = 0;
  bool minimal = false;
  CanonicalData canonical;
  std::optional<EssentialIrreducibility> ei;       // p_f > 0 and minimal
  std::optional<YauData> yau;                      // p_f > 0
  std::optional<ClassificationResult> classified;  // ei holds
};

GraphAnalysis analyze(const WeightedDualGraph& g);

// Closed-form genus statements checked against the brute-force maximum.
TheoremReport verify_theorem_B(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_theorem_C(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_lemma_3_10(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_lemma_3_12(const WeightedDualGraph& g, const GraphAnalysis& a);

// Structure statements along the Yau sequence and the classification.
TheoremReport verify_lemma_3_3(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_remark_3_4(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_lemma_3_7(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_theorem_3_8(const WeightedDualGraph& g, const GraphAnalysis& a);
TheoremReport verify_prop_3_9(const WeightedDualGraph& g, const GraphAnalysis& a);

// Yau cycle genus identity p_a(Y) = m (p_f - 1) + 1.
TheoremReport verify_yau_identity(const WeightedDualGraph& g, const GraphAnalysis& a);

// All reports for one graph: the canonical-cycle statements plus the above.
std::vector<TheoremReport> verify_all(const WeightedDualGraph& g);
std::vector<TheoremReport> verify_all(const WeightedDualGraph& g, const GraphAnalysis& a);

// Single report selected by name: A = thm-3.5, B = thm-3.11, C = thm-3.13,
// or a statement number (2.15, 3.2, 3.3, 3.4, 3.6, 3.7, 3.8, 3.9, 3.10, 3.12).
TheoremReport verify_named(const WeightedDualGraph& g, const std::string& name);

}  // namespace dualgraph
