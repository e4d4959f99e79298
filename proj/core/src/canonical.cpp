#include "dualgraph/canonical.hpp"

#include <sstream>

#include "dualgraph/classify.hpp"
#include "dualgraph/errors.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/genus.hpp"
#include "dualgraph/yau.hpp"

namespace dualgraph {

namespace {

// Exact rational Gauss-Jordan, the fallback when 64-bit Cramer overflows.
CanonicalData canonical_cycle_rational(const WeightedDualGraph& g, const Cycle& k) {
  const int n = g.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (int i = 0; i < n; ++i) {
    m[i][i] = Rational(static_cast<long>(g.weight(i)));
    for (auto [j, mult] : g.neighbors(i)) m[i][j] = Rational(static_cast<long>(mult));
    m[i][n] = Rational(static_cast<long>(-k[i]));
  }

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw DomainError("intersection matrix is singular; the canonical cycle is undefined");
    std::swap(m[col], m[pivot]);
    const Rational p = m[col][col];
    for (int j = col; j <= n; ++j) m[col][j] /= p;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (int j = col; j <= n; ++j) m[row][j] -= f * m[col][j];
    }
  }

  CanonicalData data;
  data.z_k = RationalCycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) data.z_k[i] = m[i][n];

  // Back-substitute into the original system; the residual must vanish.
  for (int i = 0; i < n; ++i) {
    Rational acc = Rational(static_cast<long>(g.weight(i))) * data.z_k[i];
    for (auto [j, mult] : g.neighbors(i)) acc += Rational(static_cast<long>(mult)) * data.z_k[j];
    if (acc != Rational(static_cast<long>(-k[i])))
      throw InternalError("canonical cycle failed back-substitution");
  }
  data.is_numerically_gorenstein = data.z_k.is_integral();
  return data;
}

// Bareiss determinant; throws OverflowError when 64 bits do not suffice.
Coeff bareiss_det(std::vector<std::vector<Coeff>> a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 1;
  Coeff prev = 1;
  Coeff sign = 1;
  for (int kk = 0; kk < m; ++kk) {
    if (a[kk][kk] == 0) {
      int p = -1;
      for (int i = kk + 1; i < m; ++i)
        if (a[i][kk] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[kk], a[p]);
      sign = -sign;
    }
    for (int i = kk + 1; i < m; ++i)
      for (int j = kk + 1; j < m; ++j)
        a[i][j] =
            checked_sub(checked_mul(a[i][j], a[kk][kk]), checked_mul(a[i][kk], a[kk][j])) / prev;
    prev = a[kk][kk];
  }
  return checked_mul(sign, a[m - 1][m - 1]);
}

}  // namespace

CanonicalData canonical_cycle(const WeightedDualGraph& g) {
  const int n = g.size();
  const Cycle k = adjunction_vector(g);

  // Integer Cramer solve with exact 128-bit residual verification; falls back
  // to rational elimination if 64-bit determinants overflow.
  try {
    std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, 0));
    for (int i = 0; i < n; ++i) {
      m[i][i] = g.weight(i);
      for (auto [j, mult] : g.neighbors(i)) m[i][j] = mult;
    }
    const Coeff det = bareiss_det(m);
    if (det == 0)
      throw DomainError("intersection matrix is singular; the canonical cycle is undefined");
    std::vector<Coeff> num(n);
    for (int col = 0; col < n; ++col) {
      auto mc = m;
      for (int i = 0; i < n; ++i) mc[i][col] = checked_neg(k[i]);
      num[col] = bareiss_det(mc);
    }
    for (int i = 0; i < n; ++i) {
      __int128 acc = 0;
      acc += static_cast<__int128>(g.weight(i)) * num[i];
      for (auto [j, mult] : g.neighbors(i)) acc += static_cast<__int128>(mult) * num[j];
      if (acc != static_cast<__int128>(-k[i]) * det)
        throw InternalError("canonical cycle failed back-substitution");
    }
    CanonicalData data;
    data.z_k = RationalCycle(static_cast<std::size_t>(n));
    data.is_numerically_gorenstein = true;
    for (int i = 0; i < n; ++i) {
      Rational q(static_cast<long>(num[i]), static_cast<long>(det));
      q.canonicalize();
      data.is_numerically_gorenstein =
          data.is_numerically_gorenstein && is_integral(q);
      data.z_k[i] = std::move(q);
    }
    return data;
  } catch (const OverflowError&) {
    return canonical_cycle_rational(g, k);
  }
}

namespace {

RationalCycle rational_multiple(const Rational& s, const Cycle& c) {
  RationalCycle r(c);
  r *= s;
  return r;
}

}  // namespace

std::vector<TheoremReport> check_canonical_theorems(const WeightedDualGraph& g) {
  CanonicalCheckInputs inputs;
  inputs.z = fundamental_cycle(g).cycle;
  inputs.pf = arithmetic_genus(g, inputs.z);
  inputs.minimal = g.is_minimal_resolution();
  inputs.canonical = canonical_cycle(g);
  if (inputs.pf > 0) {
    inputs.yau = yau_sequence(g);
    if (inputs.minimal) inputs.ei = essential_irreducibility(g);
  }
  return check_canonical_theorems(g, inputs);
}

std::vector<TheoremReport> check_canonical_theorems(const WeightedDualGraph& g,
                                                    const CanonicalCheckInputs& inputs) {
  std::vector<TheoremReport> reports;

  const Cycle& z = inputs.z;
  const Coeff z2 = intersect(g, z, z);
  const Coeff pf = inputs.pf;
  const bool minimal = inputs.minimal;
  const CanonicalData& can = inputs.canonical;

  const bool ess_irred = inputs.ei && inputs.ei->holds;
  const int special = ess_irred ? inputs.ei->special_vertex : -1;
  const bool have_yau = inputs.yau.has_value();
  const bool dm_is_zmin = have_yau && inputs.yau->d_m() == inputs.yau->z_min;
  const Cycle yau_cycle = have_yau ? inputs.yau->yau_cycle : Cycle();

  auto make = [&](std::string id, std::vector<HypothesisCheck> hyps,
                  const RationalCycle& predicted) {
    TheoremReport r;
    r.id = std::move(id);
    r.hypotheses = std::move(hyps);
    if (!all_hold(r.hypotheses)) {
      r.verdict = Verdict::not_applicable;
    } else {
      r.predicted = predicted.to_string();
      r.computed = can.z_k.to_string();
      r.verdict = (predicted == can.z_k) ? Verdict::pass : Verdict::fail;
    }
    return r;
  };

  const RationalCycle y_rational = have_yau ? RationalCycle(yau_cycle) : RationalCycle();

  reports.push_back(make("prop-2.15",
                         {{"minimal", minimal},
                          {"num. Gorenstein", can.is_numerically_gorenstein},
                          {"p_f = 1", pf == 1}},
                         y_rational));

  reports.push_back(make("prop-3.2",
                         {{"minimal", minimal},
                          {"p_f > 0", pf > 0},
                          {"degree 1", z2 == -1},
                          {"Z ess. irred.", ess_irred}},
                         have_yau ? rational_multiple(Rational(2 * pf - 1), yau_cycle)
                                  : RationalCycle()));

  reports.push_back(make("thm-3.5",
                         {{"minimal", minimal},
                          {"p_f > 0", pf > 0},
                          {"degree 2", z2 == -2},
                          {"Z ess. irred.", ess_irred},
                          {"D_m = Z_min", ess_irred && dm_is_zmin}},
                         have_yau ? rational_multiple(Rational(pf), yau_cycle)
                                  : RationalCycle()));

  {
    const bool ka_condition =
        ess_irred && checked_add(adjunction_vector(g)[special], z2) >= 0;
    // Z_K = ((2 - 2 p_f)/Z^2 + 1) Y.
    RationalCycle predicted;
    if (have_yau) {
      Rational s = Rational(static_cast<long>(2 - 2 * pf)) / Rational(static_cast<long>(z2));
      s += 1;
      predicted = rational_multiple(s, yau_cycle);
    }
    reports.push_back(make("prop-3.6",
                           {{"minimal", minimal},
                            {"p_f > 0", pf > 0},
                            {"Z ess. irred.", ess_irred},
                            {"K.A + Z^2 >= 0", ka_condition},
                            {"D_m = Z_min", ess_irred && dm_is_zmin}},
                           predicted));
  }

  return reports;
}

}  // namespace dualgraph
