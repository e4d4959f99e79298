#include "dualgraph/fundamental.hpp"

#include <algorithm>
#include <numeric>

#include "dualgraph/errors.hpp"
#include "dualgraph/genus.hpp"
#include "scan.hpp"

namespace dualgraph {

using internal::box_size_capped;
using internal::scan_box;

namespace {

bool negative_definite_on(const WeightedDualGraph& g, std::span<const int> support) {
  const int m = static_cast<int>(support.size());
  std::vector<std::vector<Coeff>> a(m, std::vector<Coeff>(m, 0));
  for (int p = 0; p < m; ++p) {
    a[p][p] = g.weight(support[p]);
    for (int q = p + 1; q < m; ++q) a[p][q] = a[q][p] = g.multiplicity(support[p], support[q]);
  }
  Coeff prev = 1;
  for (int k = 0; k < m; ++k) {
    const bool want_positive = (k % 2 == 1);
    if (a[k][k] == 0 || (a[k][k] > 0) != want_positive) return false;
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return true;
}

}  // namespace

FundamentalCycleResult fundamental_cycle(const WeightedDualGraph& g) {
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return fundamental_cycle(g, all);
}

namespace {

// Shared Laufer loop; `record` receives every step when non-null.
Cycle laufer(const WeightedDualGraph& g, std::span<const int> support,
             ComputationSequence* record) {
  std::vector<int> s(support.begin(), support.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw InputError("fundamental cycle requires a non-empty support");
  for (int v : s)
    if (v < 0 || v >= g.size()) throw InputError("support vertex out of range");
  if (!induces_connected_subgraph(g, s))
    throw InputError("support does not induce a connected subgraph");

  const bool full = static_cast<int>(s.size()) == g.size();
  if (!(full && g.definiteness_verified()) && !negative_definite_on(g, s))
    throw DomainError("support does not induce a negative-definite subgraph");

  // Row products, maintained incrementally across additions.
  std::vector<Coeff> row(g.size(), 0);
  auto add = [&](int v) {
    row[v] = checked_add(row[v], g.weight(v));
    for (auto [w, mult] : g.neighbors(v)) row[w] = checked_add(row[w], mult);
  };

  Cycle z(static_cast<std::size_t>(g.size()));
  const int start = s.front();
  z[start] = 1;
  add(start);
  if (record) {
    record->start = start;
    record->steps.push_back(start);
    record->cycles.push_back(z);
  }

  // Laufer: repeatedly add a component meeting the current cycle positively.
  while (true) {
    int next = -1;
    for (int v : s)
      if (row[v] > 0) {
        next = v;
        break;
      }
    if (next < 0) break;
    z[next] = checked_add(z[next], 1);
    add(next);
    if (record) {
      record->steps.push_back(next);
      record->cycles.push_back(z);
    }
  }

  for (int v : s)
    if (z[v] == 0) throw InternalError("computation sequence missed a support vertex");
  return z;
}

}  // namespace

FundamentalCycleResult fundamental_cycle(const WeightedDualGraph& g,
                                         std::span<const int> support) {
  FundamentalCycleResult result;
  result.cycle = laufer(g, support, &result.sequence);
  return result;
}

Cycle fundamental_cycle_on(const WeightedDualGraph& g, std::span<const int> support) {
  return laufer(g, support, nullptr);
}

bool is_chain_connected(const WeightedDualGraph& g, const Cycle& d, std::uint64_t budget) {
  if (!d.is_effective()) throw InputError("chain-connectedness requires an effective cycle");
  const auto supp = d.support();
  if (!induces_connected_subgraph(g, supp))
    throw InputError("chain-connectedness requires a connected support");
  if (box_size_capped(d, budget) > budget)
    throw ResourceError(
        "subcycle enumeration exceeds budget; for fundamental cycles chain-connectedness holds "
        "without enumeration, and reduced connected cycles are always chain-connected");

  bool chain_connected = true;
  scan_box(g, d, [&](const Cycle& c, const std::vector<Coeff>& row) {
    if (c == d) return true;  // only proper subcycles
    // Need a component E <= d - c with E.c > 0.
    for (std::size_t i = 0; i < c.size(); ++i)
      if (d[i] > c[i] && row[i] > 0) return true;
    chain_connected = false;
    return false;
  });
  return chain_connected;
}

Cycle minimal_model(const WeightedDualGraph& g, const Cycle& d) {
  if (!d.is_effective()) throw InputError("minimal model requires an effective cycle");
  if (arithmetic_genus(g, d) <= 0)
    throw DomainError("minimal model is undefined for arithmetic genus <= 0");

  Cycle cur = d;
  while (true) {
    int removable = -1;
    for (int i = 0; i < g.size(); ++i) {
      if (cur[i] < 1) continue;
      const auto& v = g.vertex(i);
      if (v.genus + v.conductor != 0) continue;  // p_a(E_i) = genus + conductor
      if (checked_sub(vertex_degree(g, i, cur), v.weight) == 1) {
        removable = i;
        break;
      }
    }
    if (removable < 0) break;
    cur[removable] -= 1;
  }
  return cur;
}

Cycle ChainDecomposition::sum(std::size_t n) const {
  Cycle total(n);
  for (const auto& part : parts) {
    Cycle scaled = part.component;
    scaled *= part.multiplicity;
    total += scaled;
  }
  return total;
}

namespace {

Cycle reduced_cycle(std::size_t n, std::span<const int> support) {
  Cycle c(n);
  for (int v : support) c[v] = 1;
  return c;
}

// Largest m with m * part <= rest, given part <= rest.
Coeff max_multiplicity(const Cycle& part, const Cycle& rest) {
  Coeff m = 0;
  bool first = true;
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] == 0) continue;
    const Coeff q = rest[i] / part[i];
    m = first ? q : std::min(m, q);
    first = false;
  }
  return m;
}

// Greedy candidate for the leading chain-connected component inside `rest`
// supported on `comp`: grow from the reduced cycle while some component meets
// the cycle positively and headroom remains.
Cycle grow_component(const WeightedDualGraph& g, const Cycle& rest, std::span<const int> comp) {
  Cycle c = reduced_cycle(rest.size(), comp);
  while (true) {
    int next = -1;
    for (int v : comp)
      if (c[v] < rest[v] && vertex_degree(g, v, c) > 0) {
        next = v;
        break;
      }
    if (next < 0) return c;
    c[next] += 1;
  }
}

bool conditions_hold(const WeightedDualGraph& g, const Cycle& d,
                     const std::vector<ChainDecomposition::Part>& parts, std::uint64_t& budget) {
  Cycle total(d.size());
  for (const auto& p : parts) {
    Cycle scaled = p.component;
    scaled *= p.multiplicity;
    total += scaled;
  }
  if (total != d) return false;
  for (const auto& p : parts) {
    const std::uint64_t cost = box_size_capped(p.component, budget);
    if (cost > budget) throw ResourceError("chain-connectedness budget exhausted in decompose");
    budget -= cost;
    if (!is_chain_connected(g, p.component)) return false;
    if (p.multiplicity >= 2 && !is_anti_nef_on(g, p.component, p.component)) return false;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!is_anti_nef_on(g, parts[i].component, parts[j].component)) return false;
      const auto si = parts[i].component.support();
      const auto sj = parts[j].component.support();
      std::vector<int> overlap;
      std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                            std::back_inserter(overlap));
      if (!overlap.empty() && !componentwise_lt(parts[j].component, parts[i].component))
        return false;
    }
  return true;
}

// Enumerate effective subcycles of `bound` with support exactly `comp`,
// chain-connected, in decreasing order of total coefficient sum.
std::vector<Cycle> chain_connected_candidates(const WeightedDualGraph& g, const Cycle& bound,
                                              std::span<const int> comp, std::uint64_t& budget) {
  Cycle restricted(bound.size());
  for (int v : comp) restricted[v] = bound[v];
  std::vector<Cycle> out;
  const std::uint64_t cost = box_size_capped(restricted, budget);
  if (cost > budget) throw ResourceError("candidate enumeration budget exhausted in decompose");
  budget -= cost;
  scan_box(g, restricted, [&](const Cycle& c, const std::vector<Coeff>&) {
    bool full = true;
    for (int v : comp)
      if (c[v] == 0) {
        full = false;
        break;
      }
    if (full) out.push_back(c);
    return true;
  });
  std::vector<Cycle> keep;
  for (auto& c : out) {
    const std::uint64_t cc_cost = box_size_capped(c, budget);
    if (cc_cost > budget) throw ResourceError("candidate filtering budget exhausted in decompose");
    budget -= cc_cost;
    if (is_chain_connected(g, c)) keep.push_back(std::move(c));
  }
  std::stable_sort(keep.begin(), keep.end(),
                   [](const Cycle& a, const Cycle& b) { return a.total() > b.total(); });
  return keep;
}

bool exhaustive_decompose(const WeightedDualGraph& g, const Cycle& d, const Cycle& rest,
                          std::vector<ChainDecomposition::Part>& acc, std::uint64_t& budget) {
  if (rest.is_zero()) {
    std::uint64_t verify_budget = budget;
    return conditions_hold(g, d, acc, verify_budget);
  }
  const auto comps = induced_components(g, rest.support());
  const auto& comp = comps.front();
  for (const Cycle& cand : chain_connected_candidates(g, rest, comp, budget)) {
    const Coeff cap = is_anti_nef_on(g, cand, cand) ? max_multiplicity(cand, rest) : 1;
    for (Coeff m = cap; m >= 1; --m) {
      Cycle scaled = cand;
      scaled *= m;
      acc.push_back({cand, m});
      if (exhaustive_decompose(g, d, rest - scaled, acc, budget)) return true;
      acc.pop_back();
    }
  }
  return false;
}

}  // namespace

ChainDecomposition decompose(const WeightedDualGraph& g, const Cycle& d, std::uint64_t budget) {
  if (!d.is_effective()) throw InputError("decompose requires an effective cycle");

  ChainDecomposition result;
  Cycle rest = d;
  while (!rest.is_zero()) {
    const auto comps = induced_components(g, rest.support());
    const auto& comp = comps.front();
    Cycle part = grow_component(g, rest, comp);
    Coeff m = is_anti_nef_on(g, part, part) ? max_multiplicity(part, rest) : 1;
    Cycle scaled = part;
    scaled *= m;
    rest -= scaled;
    result.parts.push_back({std::move(part), m});
  }

  std::uint64_t verify_budget = budget;
  if (conditions_hold(g, d, result.parts, verify_budget)) return result;

  // Greedy candidate failed verification; search for any valid decomposition.
  result.parts.clear();
  std::uint64_t search_budget = budget;
  if (exhaustive_decompose(g, d, d, result.parts, search_budget)) return result;
  throw ResourceError("no verified chain-connected decomposition found within budget");
}

}  // namespace dualgraph
