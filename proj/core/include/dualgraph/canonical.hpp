#pragma once

#include <optional>

#include "dualgraph/classify.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/report.hpp"
#include "dualgraph/yau.hpp"

namespace dualgraph {

struct CanonicalData {
  RationalCycle z_k;
  bool is_numerically_gorenstein = false;
};

// Exact solution of Z_K . E_i = -K . E_i for all i; verified by
// back-substitution before returning. Numerically Gorenstein iff integral.
CanonicalData canonical_cycle(const WeightedDualGraph& g);

// Precomputed state shared with the bulk verification paths.
struct CanonicalCheckInputs {
  Cycle z;
  Coeff pf = 0;
  bool minimal = false;
  CanonicalData canonical;
  std::optional<EssentialIrreducibility> ei;
  std::optional<YauData> yau;
};

// Executable checks of the canonical-cycle statements: the elliptic
// numerically-Gorenstein identity Z_K = Y, the degree-one multiple
// Z_K = (2 p_f - 1) Y, the degree-two multiple Z_K = p_f Y under
// D_m = Z_min, and the general multiple ((2 - 2 p_f)/Z^2 + 1) Y.
// Hypotheses that fail yield not-applicable, never pass.
std::vector<TheoremReport> check_canonical_theorems(const WeightedDualGraph& g);
std::vector<TheoremReport> check_canonical_theorems(const WeightedDualGraph& g,
                                                    const CanonicalCheckInputs& inputs);

}  // namespace dualgraph
