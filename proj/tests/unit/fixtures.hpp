#pragma once

// Shared graph builders for the test suites. Coefficient expectations in the
// tests were computed by hand from the intersection matrices and verified
// against the brute-force oracles.

#include <string>
#include <vector>

#include "dualgraph/graph.hpp"

namespace fixtures {

using dualgraph::Coeff;
using dualgraph::EdgeData;
using dualgraph::VertexData;
using dualgraph::WeightedDualGraph;

inline WeightedDualGraph chain(int n, Coeff weight = -2) {
  std::vector<VertexData> vs(n, VertexData{weight, 0, 0});
  std::vector<EdgeData> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
  return WeightedDualGraph(vs, es);
}

// Path v0..v_{n-2} with the extra vertex v_{n-1} joined to v1 (all -2).
inline WeightedDualGraph dynkin_d(int n) {
  std::vector<VertexData> vs(n, VertexData{-2, 0, 0});
  std::vector<EdgeData> es;
  for (int i = 0; i + 2 < n; ++i) es.push_back({i, i + 1, 1});
  es.push_back({1, n - 1, 1});
  return WeightedDualGraph(vs, es);
}

// Path v0..v_{n-2} with the extra vertex v_{n-1} joined to v2 (all -2).
inline WeightedDualGraph dynkin_e(int n) {
  std::vector<VertexData> vs(n, VertexData{-2, 0, 0});
  std::vector<EdgeData> es;
  for (int i = 0; i + 2 < n; ++i) es.push_back({i, i + 1, 1});
  es.push_back({2, n - 1, 1});
  return WeightedDualGraph(vs, es);
}

// B1 - A - B2, all weights -2, genus 1 at A. Z = (1,1,1), p_f = 1, m = 2.
inline WeightedDualGraph b1ab2() {
  return WeightedDualGraph({{-2, 0, 0}, {-2, 1, 0}, {-2, 0, 0}},
                           {{0, 1, 1}, {1, 2, 1}}, {"B1", "A", "B2"});
}

inline WeightedDualGraph single_vertex(Coeff weight, Coeff genus, Coeff conductor = 0) {
  return WeightedDualGraph({{weight, genus, conductor}}, {}, {"A"});
}

// A (-1, genus 1) with a single (-2) neighbor. Z = (1,1), degree 1, m = 2.
inline WeightedDualGraph konno_elliptic() {
  return WeightedDualGraph({{-1, 1, 0}, {-2, 0, 0}}, {{0, 1, 1}}, {"A", "B"});
}

// Classified shape, case 2 single edge: chain B1-B2-B3 joined to A (-2, g=1),
// plus two zero-branch (-2)-curves on A. Z = (1,2,2,2,1,1), p_f = 2, m = 2.
inline WeightedDualGraph case2_single() {
  return WeightedDualGraph(
      {{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 1, 0}, {-2, 0, 0}, {-2, 0, 0}},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}},
      {"B1", "B2", "B3", "A", "C1", "C2"});
}

// Case 1 with m' = 2, n' = 1: P1-P2 and Q1 chains on A (-2, g=1).
// Z = (1,1,1,1), m = 2, D_m = A + P1, Z_min = A.
inline WeightedDualGraph case1_asymmetric() {
  return WeightedDualGraph({{-2, 1, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}},
                           {{0, 1, 1}, {1, 2, 1}, {0, 3, 1}}, {"A", "P1", "P2", "Q1"});
}

// Case 3 with n' = 4: path B1-B2-B3-T with A (-2, g=1) on B3.
// Z = (1,2,2,1,1), m = 2, D_m = B3 + T + A, Z_min = A (not admissible).
inline WeightedDualGraph case3_even() {
  return WeightedDualGraph({{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 1, 0}},
                           {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}},
                           {"B1", "B2", "B3", "T", "A"});
}

// Case 3 with n' = 5: path B1-B2-B3-B4-T with A (-2, g=1) on B4.
// Z = (1,2,2,2,1,1), m = 3, D_m = Z_min = A (admissible).
inline WeightedDualGraph case3_odd() {
  return WeightedDualGraph(
      {{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 1, 0}},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}},
      {"B1", "B2", "B3", "B4", "T", "A"});
}

// Case 4 with n' = 5, k' = 2: tail P1-P2-node, fork Q1/Q2, A (-4) on the node.
// Z = (2,3,4,2,2,1), p_f = 1, m = 2, D_m = Z_min.
inline WeightedDualGraph case4_fixture() {
  return WeightedDualGraph(
      {{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-4, 0, 0}},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {2, 5, 1}},
      {"P1", "P2", "N", "Q1", "Q2", "A"});
}

// Case 5 with n' = 5, double edge to A (-6): tail T1-T2-node, fork Q/U,
// U joined to A by a double edge. Z = (2,3,4,2,3,1), p_f = 2, m = 2.
inline WeightedDualGraph case5_double() {
  return WeightedDualGraph(
      {{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-6, 0, 0}},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {4, 5, 2}},
      {"T1", "T2", "N", "Q", "U", "A"});
}

// Case 6 with n' = 4: D4 star (T1, N, Q, U) with A (-4) joined to both Q and
// U; Gamma' contains a cycle. Z = (2,3,2,2,1), p_f = 1, m = 2.
inline WeightedDualGraph case6_fixture() {
  return WeightedDualGraph({{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-4, 0, 0}},
                           {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}},
                           {"T1", "N", "Q", "U", "A"});
}

// Case 7: E6 with A (-2, g=1) on the end of a long arm.
// Z = (2,3,4,3,2,2,1) on (T1,T2,N,S1,S2,Q,A), p_f = 1, m = 3.
inline WeightedDualGraph case7_fixture() {
  return WeightedDualGraph({{-2, 0, 0},
                            {-2, 0, 0},
                            {-2, 0, 0},
                            {-2, 0, 0},
                            {-2, 0, 0},
                            {-2, 0, 0},
                            {-2, 1, 0}},
                           {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 5, 1}, {4, 6, 1}},
                           {"T1", "T2", "N", "S1", "S2", "Q", "A"});
}

// Case 8: D5 (P1-P2-N with fork Q, U) and A (-2, g=1) on U.
// Z = (1,2,3,2,2,1), p_f = 1, m = 2, never admissible.
inline WeightedDualGraph case8_fixture() {
  return WeightedDualGraph(
      {{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 1, 0}},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {4, 5, 1}},
      {"P1", "P2", "N", "Q", "U", "A"});
}

// The configuration outside the eight classified shapes: a 2-3 chain joined
// to the (-3)-curve A by a double edge. Z = (2,3,2), p_f = 1, m = 2,
// D_m = Z_min = (1,1,0) and Z - D_m meets A.
inline WeightedDualGraph unclassified_double_edge() {
  return WeightedDualGraph({{-3, 0, 0}, {-2, 0, 0}, {-2, 0, 0}}, {{0, 1, 2}, {1, 2, 1}},
                           {"A", "B2", "B1"});
}

inline dualgraph::Cycle cycle(std::vector<Coeff> c) { return dualgraph::Cycle(std::move(c)); }

}  // namespace fixtures
