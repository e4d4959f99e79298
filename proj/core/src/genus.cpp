#include "dualgraph/genus.hpp"

#include "dualgraph/errors.hpp"
#include "dualgraph/fundamental.hpp"

namespace dualgraph {

Cycle adjunction_vector(const WeightedDualGraph& g) {
  Cycle k(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const auto& v = g.vertex(i);
    k[i] = checked_add(checked_neg(v.weight),
                       checked_sub(checked_mul(2, checked_add(v.genus, v.conductor)), 2));
  }
  return k;
}

Coeff canonical_degree(const WeightedDualGraph& g, const Cycle& d) {
  if (d.size() != static_cast<std::size_t>(g.size()))
    throw InputError("cycle dimension mismatch with graph");
  const Cycle k = adjunction_vector(g);
  Coeff r = 0;
  for (int i = 0; i < g.size(); ++i) checked_add_mul(r, d[i], k[i]);
  return r;
}

Coeff chi(const WeightedDualGraph& g, const Cycle& d) {
  const Coeff s = checked_add(intersect(g, d, d), canonical_degree(g, d));
  if (s % 2 != 0) throw InternalError("d^2 + d.K is odd; vertex data is corrupt");
  return -(s / 2);
}

Coeff arithmetic_genus(const WeightedDualGraph& g, const Cycle& d) {
  if (!d.is_effective()) throw InputError("arithmetic genus requires an effective cycle");
  return checked_sub(1, chi(g, d));
}

Coeff degree(const WeightedDualGraph& g) {
  const Cycle z = fundamental_cycle(g).cycle;
  return checked_neg(intersect(g, z, z));
}

Coeff fundamental_genus(const WeightedDualGraph& g) {
  return arithmetic_genus(g, fundamental_cycle(g).cycle);
}

}  // namespace dualgraph
