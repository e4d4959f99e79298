#pragma once

#include "dualgraph/graph.hpp"

namespace dualgraph {

// The decreasing chain Z = D_1 > D_2 > ... > D_m of iterated Tyurina
// components, its sum Y, and the minimal model Z_min of Z.
struct YauData {
  std::vector<Cycle> sequence;  // D_1 = Z first
  Cycle yau_cycle;              // Y = sum D_i
  Coeff length = 0;             // m
  Cycle z_min;

  const Cycle& z() const { return sequence.front(); }
  const Cycle& d_m() const { return sequence.back(); }
};

// Unique maximal subcycle D < d with O_D(-d) numerically trivial and
// p_a(D) = p_a(d). Requires d to be the fundamental cycle on its support,
// p_a(d) = p_a(z_min) > 0 and -d numerically trivial on z_min; if instead
// d . z_min < 0 the sequence has terminated and a DomainError is thrown.
Cycle tyurina_component(const WeightedDualGraph& g, const Cycle& d, const Cycle& z_min);

// Yau sequence for the fundamental cycle. Requires p_f > 0.
YauData yau_sequence(const WeightedDualGraph& g);

}  // namespace dualgraph
