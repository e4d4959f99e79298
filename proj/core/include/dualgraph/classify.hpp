#pragma once

#include <array>
#include <optional>

#include "dualgraph/graph.hpp"
#include "dualgraph/yau.hpp"

namespace dualgraph {

// Witness that the fundamental cycle contains exactly one component A that is
// not a rational (-2)-curve, the rest being rational (-2)-curves.
struct EssentialIrreducibility {
  bool holds = false;
  int special_vertex = -1;  // A
  Coeff k = 0;              // coefficient of A in Z
};

// Requires p_f > 0 and a minimal resolution graph.
EssentialIrreducibility essential_irreducibility(const WeightedDualGraph& g);

// Shape of a connected all-rational-(-2) induced subgraph, when it is one of
// the A/D/E diagrams. Arms run from the node outward (node excluded).
struct AdeShape {
  char family = 0;  // 'A', 'D' or 'E'
  int rank = 0;
  std::vector<int> path;               // family 'A': the path in order
  int node = -1;                       // family 'D'/'E'
  std::vector<std::vector<int>> arms;  // family 'D'/'E': sorted by (length, first vertex)
};

std::optional<AdeShape> recognize_ade(const WeightedDualGraph& g, std::span<const int> vertices);

// One of the eight classified shapes of Gamma' for degree two, essentially
// irreducible, m > 1. case_id = 0 means unmatched. The role vectors hold
// concrete vertex ids so the restricted-cycle tables can be instantiated.
struct MatchedCase {
  int case_id = 0;
  int m_prime = 0;   // case 1: longer chain length
  int n_prime = 0;   // chain / diagram size parameter
  int k_prime = -1;  // case 4 attachment offset
  int variant = 1;   // cases 2 and 5: 1 = single edge to A, 2 = double edge

  int special_vertex = -1;
  std::vector<int> chain_long;   // case 1 (ordered from A outward)
  std::vector<int> chain_short;  // case 1
  std::vector<int> chain;        // cases 2/3 (ordered far end -> A side)
  int t_vertex = -1;             // case 3
  std::vector<int> tail;         // cases 4/5/6/8: p_1 .. node (node last)
  int fork_q = -1;               // non-A fork tip (cases 4/5/6/8: q; case 4: first fork)
  int fork_u = -1;               // A-side fork tip  (case 4: second fork)
  std::vector<int> e6_arm;       // case 7: the arm carrying A, node -> outward
};

// Branches, the negative set S, Gamma', the matched case and the
// restricted-cycle data of one graph.
struct ClassificationResult {
  EssentialIrreducibility ei;
  Cycle z;
  std::vector<std::vector<int>> branches;  // Gamma_i after deleting A
  std::vector<std::optional<AdeShape>> branch_shapes;
  bool branches_ade = false;      // every branch recognized as A/D/E
  std::vector<int> negative_set;  // S = { i : (Z|_branch_i) . Z < 0 }
  std::vector<int> gamma_prime;   // A together with the branches in S
  bool lemma37_applicable = false;
  bool lemma37_holds = false;  // meaningful when applicable
  std::string lemma37_detail;  // witness on violation
  MatchedCase matched;
  Cycle dm_restricted;    // table prediction, defined on the full vertex set
  Cycle zmin_restricted;  // table prediction
  bool admissible = false;        // tables predict D_m = Z_min
  bool dm_equals_zmin = false;    // computed from the Yau sequence
  bool has_yau = false;
  Coeff yau_length = 0;
};

// Deletes A, computes the branches, their restrictions, S and Gamma'.
// When the Lemma hypotheses hold (degree two, essentially irreducible, m > 1)
// the set equality S = { i : supp Gamma_i meets supp(Z - D_m) } is asserted;
// a violation throws InternalError with the witness.
ClassificationResult extract_gamma_prime(const WeightedDualGraph& g,
                                         const EssentialIrreducibility& ei);

// Template match of Gamma' against the eight classified shapes.
// Requires m > 1, degree two, essentially irreducible.
MatchedCase match_theorem38(const WeightedDualGraph& g, const ClassificationResult& cr,
                            const YauData& yau);

struct Prop39Tables {
  Cycle dm_restricted;
  Cycle zmin_restricted;
  bool admissible = false;
};

// The classified values of D_m|Gamma' and Z_min|Gamma' for a matched case.
Prop39Tables prop39_tables(const WeightedDualGraph& g, const MatchedCase& matched);

// Driver: essential irreducibility, Gamma', matching and tables in one pass.
ClassificationResult classify(const WeightedDualGraph& g);
// Same, reusing an already-computed witness and Yau sequence.
ClassificationResult classify(const WeightedDualGraph& g, const EssentialIrreducibility& ei,
                              const YauData& yau);

}  // namespace dualgraph
