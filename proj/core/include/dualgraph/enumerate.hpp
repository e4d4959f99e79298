#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dualgraph/graph.hpp"

namespace dualgraph {

// Connected negative-definite graphs up to isomorphism, either with exactly
// one special vertex (all others rational (-2)-curves) or with every vertex
// ranging over a weight/genus palette. Conductors stay 0.
struct EnumerationOptions {
  int max_vertices = 8;
  int hard_cap = 8;
  Coeff max_multiplicity = 2;

  bool vary_all_vertices = false;

  // Special-vertex mode. (-2,0) and (-1,0) decorations are skipped.
  std::vector<Coeff> special_weights = {-1, -2, -3, -4, -5, -6};
  std::vector<Coeff> special_genera = {0, 1, 2};

  // All-vertices mode palettes.
  std::vector<Coeff> weights = {-2, -3, -4};
  std::vector<Coeff> genera = {0, 1, 2};

  int threads = 0;  // 0 = hardware concurrency

  // Cost cutoffs for the exhaustive cross-checks. Searches whose boxes exceed
  // the budget are recorded as not-applicable rather than aborting the run.
  int oracle_max_vertices = 6;
  int pa_max_check_vertices = 4;
  Coeff oracle_cap = 6;
  std::uint64_t subcycle_budget = 4'000'000;
};

struct CheckTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t flagged = 0;  // counterexamples held for review, not failures
  std::uint64_t not_applicable = 0;
};

struct EnumerationFailure {
  std::string check_id;
  std::string detail;
  std::string graph;  // reproducer in the text format
};

struct EnumerationSummary {
  std::string mode;
  int max_vertices = 0;
  Coeff max_multiplicity = 2;
  std::uint64_t graph_count = 0;
  std::vector<std::pair<std::string, CheckTally>> checks;  // sorted by id
  std::vector<EnumerationFailure> failures;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Runs every applicable check on every enumerated graph and aggregates
// verdicts. Failures carry a reproducer graph file.
EnumerationSummary enumerate_and_verify(const EnumerationOptions& options);

// Enumeration without verification, in the deterministic summary order.
void for_each_enumerated_graph(const EnumerationOptions& options,
                               const std::function<void(const WeightedDualGraph&)>& fn);

}  // namespace dualgraph
