#pragma once

#include "dualgraph/graph.hpp"

namespace dualgraph {

// Adjunction vector k with k_i = K.E_i = -E_i^2 + 2 g_i + 2 delta_i - 2.
Cycle adjunction_vector(const WeightedDualGraph& g);

// K.d for an integer cycle d.
Coeff canonical_degree(const WeightedDualGraph& g, const Cycle& d);

// chi(d) = -(d.d + d.K)/2. Defined for any integer cycle; d^2 + d.K is always
// even, asserted.
Coeff chi(const WeightedDualGraph& g, const Cycle& d);

// p_a(d) = 1 - chi(d). Requires d effective.
Coeff arithmetic_genus(const WeightedDualGraph& g, const Cycle& d);

// -Z^2 for the fundamental cycle Z of the full graph.
Coeff degree(const WeightedDualGraph& g);

// p_a(Z), the fundamental genus p_f.
Coeff fundamental_genus(const WeightedDualGraph& g);

}  // namespace dualgraph
