#include "dualgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "dualgraph/errors.hpp"

namespace dualgraph {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "E" + std::to_string(i + 1);
  return names;
}

// Leading principal minors by fraction-free (Bareiss) elimination.
// Returns false as soon as the sign pattern of a negative definite matrix is
// broken, so callers can bail out without a certificate.
bool bareiss_negative_definite(const std::vector<std::vector<Coeff>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Coeff>> a = m;
  Coeff prev = 1;
  for (int k = 0; k < n; ++k) {
    const Coeff minor_sign = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1} det > 0
    if (a[k][k] == 0 || (a[k][k] > 0) != (minor_sign > 0)) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const Coeff t = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j]));
        a[i][j] = t / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return true;
}

std::vector<std::vector<Coeff>> intersection_matrix(const WeightedDualGraph& g) {
  const int n = g.size();
  std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = g.weight(i);
    for (auto [j, mult] : g.neighbors(i)) m[i][j] = mult;
  }
  return m;
}

}  // namespace

WeightedDualGraph::WeightedDualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges,
                                     std::vector<std::string> names)
    : WeightedDualGraph(std::move(vertices), std::move(edges), std::move(names), Options()) {}

WeightedDualGraph::WeightedDualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges,
                                     std::vector<std::string> names, Options options)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), names_(std::move(names)) {
  const int n = size();
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (names_.empty()) names_ = default_names(vertices_.size());
  if (static_cast<int>(names_.size()) != n) throw InputError("vertex/name count mismatch");
  {
    std::set<std::string> seen;
    for (const auto& name : names_)
      if (name.empty() || !seen.insert(name).second)
        throw InputError("vertex names must be non-empty and unique (offending name: '" + name +
                         "')");
  }
  for (int i = 0; i < n; ++i) {
    const auto& v = vertices_[i];
    if (v.weight > -1)
      throw InputError("vertex '" + names_[i] + "' violates weight <= -1 (weight " +
                       std::to_string(v.weight) + ")");
    if (v.genus < 0 || v.conductor < 0)
      throw InputError("vertex '" + names_[i] + "' has negative genus or conductor");
  }

  adjacency_.assign(n, {});
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& e : edges_) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) throw InputError("edge endpoint out of range");
    if (e.a == e.b) throw InputError("self-loop at vertex '" + names_[e.a] + "'");
    if (e.multiplicity < 1) throw InputError("edge multiplicity must be >= 1");
    auto key = std::minmax(e.a, e.b);
    if (!seen_pairs.insert(key).second)
      throw InputError("duplicate edge between '" + names_[e.a] + "' and '" + names_[e.b] +
                       "' (use the multiplicity field)");
    adjacency_[e.a].emplace_back(e.b, e.multiplicity);
    adjacency_[e.b].emplace_back(e.a, e.multiplicity);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (!induces_connected_subgraph(*this, all)) throw InputError("graph is not connected");

  if (options.require_negative_definite) {
    auto cert = check_negative_definite(*this);
    if (!cert.negative_definite)
      throw InputError("intersection matrix is not negative definite (witness v = " +
                       cert.witness.to_string() +
                       ", v.M.v = " + std::to_string(cert.witness_value) + ")");
    certificate_ = std::move(cert);
  }
}

Coeff WeightedDualGraph::multiplicity(int i, int j) const {
  for (auto [k, mult] : adjacency_[i])
    if (k == j) return mult;
  return 0;
}

bool WeightedDualGraph::is_minimal_resolution() const {
  for (const auto& v : vertices_)
    if (v.is_contractible()) return false;
  return true;
}

const DefinitenessCertificate& WeightedDualGraph::definiteness_certificate() const {
  if (!certificate_) throw DomainError("graph was constructed without the definiteness check");
  return *certificate_;
}

Coeff vertex_degree(const WeightedDualGraph& g, int i, const Cycle& d) {
  if (d.size() != static_cast<std::size_t>(g.size()))
    throw InputError("cycle dimension mismatch with graph");
  Coeff r = checked_mul(g.weight(i), d[i]);
  for (auto [j, mult] : g.neighbors(i)) checked_add_mul(r, mult, d[j]);
  return r;
}

Coeff intersect(const WeightedDualGraph& g, const Cycle& a, const Cycle& b) {
  if (a.size() != static_cast<std::size_t>(g.size()) || b.size() != a.size())
    throw InputError("cycle dimension mismatch with graph");
  Coeff r = 0;
  for (int i = 0; i < g.size(); ++i)
    if (a[i] != 0) checked_add_mul(r, a[i], vertex_degree(g, i, b));
  return r;
}

Rational intersect(const WeightedDualGraph& g, const RationalCycle& a, const Cycle& b) {
  if (a.size() != static_cast<std::size_t>(g.size()) || b.size() != a.size())
    throw InputError("cycle dimension mismatch with graph");
  Rational r(0);
  for (int i = 0; i < g.size(); ++i)
    if (a[i] != 0) r += a[i] * Rational(static_cast<long>(vertex_degree(g, i, b)));
  return r;
}

bool is_anti_nef_on(const WeightedDualGraph& g, const Cycle& c, const Cycle& d) {
  for (int i = 0; i < g.size(); ++i)
    if (d[i] != 0 && vertex_degree(g, i, c) > 0) return false;
  return true;
}

bool is_numerically_trivial_on(const WeightedDualGraph& g, const Cycle& c, const Cycle& d) {
  for (int i = 0; i < g.size(); ++i)
    if (d[i] != 0 && vertex_degree(g, i, c) != 0) return false;
  return true;
}

bool is_negative_definite(const WeightedDualGraph& g) {
  return bareiss_negative_definite(intersection_matrix(g));
}

DefinitenessCertificate check_negative_definite(const WeightedDualGraph& g) {
  const int n = g.size();
  DefinitenessCertificate cert;

  // Symmetric congruence elimination over exact rationals. basis[i] tracks the
  // vector realizing the i-th diagonal entry, so a bad pivot yields a witness.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  {
    auto m = intersection_matrix(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
  }
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;

  // Prefer the smallest hand-checkable witness when one lives in [-3,3]^n.
  auto small_witness = [&]() -> std::optional<Cycle> {
    if (n > 6) return std::nullopt;
    std::optional<Cycle> best;
    auto better = [](const Cycle& a, const Cycle& b) {
      auto key = [](const Cycle& c) {
        Coeff norm = 0, negatives = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          norm += std::abs(c[i]);
          negatives += c[i] < 0;
        }
        return std::tuple{norm, negatives, c.coefficients()};
      };
      return key(a) < key(b);
    };
    Cycle v(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        if (!v.is_zero() && intersect(g, v, v) >= 0 && (!best || better(v, *best))) best = v;
        return;
      }
      for (Coeff t = -3; t <= 3; ++t) {
        v[pos] = t;
        rec(pos + 1);
      }
      v[pos] = 0;
    };
    rec(0);
    return best;
  };

  auto finish_witness = [&](const std::vector<Rational>& w) {
    Cycle v(static_cast<std::size_t>(n));
    if (auto small = small_witness()) {
      v = *small;
    } else {
      BigInt denom_lcm(1);
      for (const Rational& q : w)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
      for (int i = 0; i < n; ++i) {
        Rational scaled = w[i] * Rational(denom_lcm);
        v[i] = to_coeff(scaled.get_num());
      }
    }
    cert.negative_definite = false;
    cert.witness = v;
    cert.witness_value = intersect(g, v, v);
    if (cert.witness_value < 0) throw InternalError("definiteness witness failed verification");
  };

  for (int k = 0; k < n; ++k) {
    const Rational pivot = a[k][k];
    if (pivot > 0) {
      finish_witness(basis[k]);
      return cert;
    }
    if (pivot == 0) {
      int j = -1;
      for (int l = k + 1; l < n; ++l)
        if (a[l][k] != 0) {
          j = l;
          break;
        }
      if (j < 0) {
        finish_witness(basis[k]);  // null vector of the reduced form
        return cert;
      }
      Rational t = a[j][k] / (1 + abs(a[j][j]));
      std::vector<Rational> w = basis[k];
      for (int i = 0; i < n; ++i) w[i] += t * basis[j][i];
      finish_witness(w);
      return cert;
    }
    cert.pivots.push_back(pivot);
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (int l = 0; l < n; ++l) basis[i][l] -= f * basis[k][l];
      for (int l = k; l < n; ++l) a[i][l] -= f * a[k][l];
      for (int l = k; l < n; ++l) a[l][i] = a[i][l];
    }
  }
  cert.negative_definite = true;
  return cert;
}

bool induces_connected_subgraph(const WeightedDualGraph& g, std::span<const int> support) {
  return induced_components(g, support).size() == 1;
}

std::vector<std::vector<int>> induced_components(const WeightedDualGraph& g,
                                                 std::span<const int> support) {
  std::vector<char> in_support(g.size(), 0), seen(g.size(), 0);
  for (int v : support) {
    if (v < 0 || v >= g.size()) throw InputError("support vertex out of range");
    in_support[v] = 1;
  }
  std::vector<std::vector<int>> components;
  for (int root : support) {
    if (seen[root]) continue;
    std::vector<int> stack{root}, comp;
    seen[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto [w, mult] : g.neighbors(v))
        if (in_support[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end());
  return components;
}

}  // namespace dualgraph
