#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualgraph/graph.hpp"

namespace dualgraph {

// Laufer computation sequence Z_1 < Z_2 < ... < Z_l = Z. steps[0] is the
// start vertex; steps[j] satisfies E_{steps[j]} . Z_j > 0; cycles[j] = Z_{j+1}.
struct ComputationSequence {
  int start = 0;
  std::vector<int> steps;
  std::vector<Cycle> cycles;
};

struct FundamentalCycleResult {
  Cycle cycle;
  ComputationSequence sequence;
};

// Fundamental cycle of the whole graph, or of the subgraph induced by
// `support`. The support must be non-empty, induce a connected subgraph, and
// the induced intersection form must be negative definite.
FundamentalCycleResult fundamental_cycle(const WeightedDualGraph& g);
FundamentalCycleResult fundamental_cycle(const WeightedDualGraph& g, std::span<const int> support);

// The cycle alone, without recording the computation sequence.
Cycle fundamental_cycle_on(const WeightedDualGraph& g, std::span<const int> support);

inline constexpr std::uint64_t kDefaultSubcycleBudget = 1'000'000;

// Exhaustive test of Definition "chain-connected": no proper subcycle
// 0 < C < d has O_{d-C}(-C) nef. Enumerates all proper subcycles.
bool is_chain_connected(const WeightedDualGraph& g, const Cycle& d,
                        std::uint64_t budget = kDefaultSubcycleBudget);

// Unique minimal subcycle with the same arithmetic genus as d. Requires d
// chain-connected and p_a(d) > 0. Greedy removal of curves E with p_a(E) = 0
// and E.(d - E) = 1; the result is order-independent.
Cycle minimal_model(const WeightedDualGraph& g, const Cycle& d);

// Chain-connected component decomposition d = sum m_i D_i.
struct ChainDecomposition {
  struct Part {
    Cycle component;
    Coeff multiplicity = 1;
  };
  std::vector<Part> parts;

  Cycle sum(std::size_t n) const;
};

// Decomposition satisfying: (1) exact sum; (2) for i < j, -D_i nef on D_j;
// (3) if m_i >= 2 then -D_i nef on D_i; (4) nesting or disjoint supports.
// All four conditions plus chain-connectedness of every part are verified
// before returning; a failed verification falls back to bounded exhaustive
// search and finally to ResourceError.
ChainDecomposition decompose(const WeightedDualGraph& g, const Cycle& d,
                             std::uint64_t budget = kDefaultSubcycleBudget);

}  // namespace dualgraph
