#include "dualgraph/yau.hpp"

#include <algorithm>

#include "dualgraph/errors.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/genus.hpp"

namespace dualgraph {

Cycle tyurina_component(const WeightedDualGraph& g, const Cycle& d, const Cycle& z_min) {
  if (!d.is_effective() || !z_min.is_effective())
    throw InputError("tyurina component requires effective cycles");
  if (intersect(g, d, z_min) < 0)
    throw DomainError("d . z_min < 0: the Yau sequence terminates here");

  const Coeff pa_d = arithmetic_genus(g, d);
  if (pa_d <= 0 || arithmetic_genus(g, z_min) != pa_d)
    throw DomainError("tyurina component requires p_a(d) = p_a(z_min) > 0");
  if (!is_numerically_trivial_on(g, d, z_min))
    throw DomainError("-d must be numerically trivial on z_min");
  if (fundamental_cycle_on(g, d.support()) != d)
    throw DomainError("d must be the fundamental cycle on its support");

  // Zero locus of d inside its support; the component holding supp(z_min)
  // carries the Tyurina component as its fundamental cycle (Lemma-style
  // construction; the exhaustive maximal-subcycle search is the oracle).
  std::vector<int> locus;
  for (int v : d.support())
    if (vertex_degree(g, v, d) == 0) locus.push_back(v);

  const auto zmin_support = z_min.support();
  std::vector<int> part;
  for (const auto& comp : induced_components(g, locus)) {
    if (std::includes(comp.begin(), comp.end(), zmin_support.begin(), zmin_support.end())) {
      part = comp;
      break;
    }
  }
  if (part.empty())
    throw InternalError("supp(z_min) is not contained in one zero-locus component");

  Cycle result = fundamental_cycle_on(g, part);
  if (!componentwise_lt(result, d))
    throw InternalError("tyurina component is not a proper subcycle of d");
  if (arithmetic_genus(g, result) != pa_d)
    throw InternalError("tyurina component changed the arithmetic genus");
  return result;
}

YauData yau_sequence(const WeightedDualGraph& g) {
  YauData data;
  const Cycle z = fundamental_cycle(g).cycle;
  if (arithmetic_genus(g, z) <= 0)
    throw DomainError("the Yau sequence requires fundamental genus p_f > 0");
  data.z_min = minimal_model(g, z);
  data.sequence.push_back(z);

  const Coeff cap = z.total();  // strictly decreasing effective cycles
  while (intersect(g, data.sequence.back(), data.z_min) >= 0) {
    Cycle next = tyurina_component(g, data.sequence.back(), data.z_min);
    // Definition 2.x-style sanity: the minimal model is shared along the
    // sequence. A violation would be a counterexample worth reporting.
    if (minimal_model(g, next) != data.z_min)
      throw InternalError("minimal model changed along the Yau sequence: graph " +
                          data.sequence.back().to_string() + " -> " + next.to_string());
    data.sequence.push_back(std::move(next));
    if (static_cast<Coeff>(data.sequence.size()) > cap)
      throw InternalError("Yau sequence exceeded its termination bound");
  }

  data.length = static_cast<Coeff>(data.sequence.size());
  data.yau_cycle = Cycle(z.size());
  for (const Cycle& d : data.sequence) data.yau_cycle += d;

  // p_a(Y) = m (p_f - 1) + 1, an identity of the construction.
  const Coeff pf = arithmetic_genus(g, z);
  if (arithmetic_genus(g, data.yau_cycle) != checked_add(checked_mul(data.length, pf - 1), 1))
    throw InternalError("p_a(Y) identity failed for the computed Yau cycle");
  return data;
}

}  // namespace dualgraph
