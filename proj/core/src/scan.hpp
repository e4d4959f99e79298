#pragma once

// Internal helpers shared by the exhaustive searches. Not installed.

#include <cstdint>
#include <vector>

#include "dualgraph/errors.hpp"
#include "dualgraph/graph.hpp"

namespace dualgraph::internal {

// Number of points in the box [0, d], saturating at limit + 1.
inline std::uint64_t box_size_capped(const Cycle& d, std::uint64_t limit) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw InputError("box bound must be effective");
    count *= static_cast<std::uint64_t>(d[i]) + 1;
    if (count > limit) return limit + 1;
  }
  return count;
}

// Odometer over all integer points 0 <= c <= d except c = 0, with row
// products r_i = E_i . c maintained incrementally. visit returning false
// stops the scan.
template <class Visit>
void scan_box(const WeightedDualGraph& g, const Cycle& d, Visit&& visit) {
  const int n = g.size();
  Cycle c(static_cast<std::size_t>(n));
  std::vector<Coeff> r(n, 0);
  auto bump = [&](int i, Coeff delta) {
    r[i] = checked_add(r[i], checked_mul(g.weight(i), delta));
    for (auto [j, mult] : g.neighbors(i)) r[j] = checked_add(r[j], checked_mul(mult, delta));
  };
  while (true) {
    int p = 0;
    while (p < n && c[p] == d[p]) {
      if (c[p] != 0) bump(p, -c[p]);
      c[p] = 0;
      ++p;
    }
    if (p == n) return;
    c[p] += 1;
    bump(p, 1);
    if (!visit(static_cast<const Cycle&>(c), static_cast<const std::vector<Coeff>&>(r))) return;
  }
}

}  // namespace dualgraph::internal
