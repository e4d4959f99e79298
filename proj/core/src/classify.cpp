#include "dualgraph/classify.hpp"

#include <algorithm>
#include <sstream>

#include "dualgraph/errors.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/genus.hpp"

namespace dualgraph {

namespace {

Cycle restriction(const Cycle& c, std::span<const int> vertices) {
  Cycle r(c.size());
  for (int v : vertices) r[v] = c[v];
  return r;
}

bool coefficients_are(const Cycle& z, std::span<const int> vertices,
                      std::span<const Coeff> expected) {
  if (vertices.size() != expected.size()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (z[vertices[i]] != expected[i]) return false;
  return true;
}

}  // namespace

EssentialIrreducibility essential_irreducibility(const WeightedDualGraph& g) {
  if (!g.is_minimal_resolution())
    throw DomainError("essential irreducibility requires a minimal resolution graph");
  const Cycle z = fundamental_cycle(g).cycle;
  if (arithmetic_genus(g, z) <= 0)
    throw DomainError("essential irreducibility requires fundamental genus p_f > 0");

  EssentialIrreducibility result;
  int candidate = -1;
  int count = 0;
  for (int i = 0; i < g.size(); ++i)
    if (!g.vertex(i).is_rational_minus_two()) {
      candidate = i;
      ++count;
    }
  if (count == 1) {
    result.holds = true;
    result.special_vertex = candidate;
    result.k = z[candidate];
  }
  return result;
}

std::optional<AdeShape> recognize_ade(const WeightedDualGraph& g, std::span<const int> vertices) {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  const int n = static_cast<int>(vs.size());
  if (n == 0) return std::nullopt;
  std::vector<char> in(g.size(), 0);
  for (int v : vs) in[v] = 1;

  for (int v : vs)
    if (!g.vertex(v).is_rational_minus_two()) return std::nullopt;

  // Induced edges must be simple and form a tree.
  int edge_count = 0;
  std::vector<std::vector<int>> adj(g.size());
  for (int v : vs)
    for (auto [w, mult] : g.neighbors(v)) {
      if (!in[w]) continue;
      if (mult != 1) return std::nullopt;
      adj[v].push_back(w);
      if (v < w) ++edge_count;
    }
  if (edge_count != n - 1 || !induces_connected_subgraph(g, vs)) return std::nullopt;

  int node = -1;
  for (int v : vs) {
    const int deg = static_cast<int>(adj[v].size());
    if (deg > 3) return std::nullopt;
    if (deg == 3) {
      if (node >= 0) return std::nullopt;
      node = v;
    }
  }

  AdeShape shape;
  shape.rank = n;
  if (node < 0) {
    shape.family = 'A';
    if (n == 1) {
      shape.path = {vs[0]};
      return shape;
    }
    int start = -1;
    for (int v : vs)
      if (adj[v].size() == 1) {
        start = v;
        break;
      }
    shape.path.push_back(start);
    int prev = -1, cur = start;
    while (static_cast<int>(shape.path.size()) < n) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      shape.path.push_back(cur);
    }
    return shape;
  }

  shape.node = node;
  for (int w0 : adj[node]) {
    std::vector<int> arm{w0};
    int prev = node, cur = w0;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      arm.push_back(cur);
    }
    shape.arms.push_back(std::move(arm));
  }
  std::sort(shape.arms.begin(), shape.arms.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a[0] < b[0];
            });
  const auto len = [&](int i) { return static_cast<int>(shape.arms[i].size()); };
  if (len(0) == 1 && len(1) == 1) {
    shape.family = 'D';
    return shape;
  }
  if (len(0) == 1 && len(1) == 2 && len(2) >= 2 && len(2) <= 4) {
    shape.family = 'E';
    return shape;
  }
  return std::nullopt;
}

namespace {

ClassificationResult extract_gamma_prime_impl(const WeightedDualGraph& g,
                                              const EssentialIrreducibility& ei,
                                              const YauData& yau) {
  if (!ei.holds)
    throw DomainError("Gamma' extraction requires an essentially irreducible fundamental cycle");
  ClassificationResult cr;
  cr.ei = ei;
  cr.z = yau.z();

  const int a = ei.special_vertex;
  std::vector<int> others;
  for (int i = 0; i < g.size(); ++i)
    if (i != a) others.push_back(i);
  cr.branches = induced_components(g, others);

  cr.branches_ade = true;
  for (const auto& branch : cr.branches) {
    cr.branch_shapes.push_back(recognize_ade(g, branch));
    if (!cr.branch_shapes.back()) cr.branches_ade = false;
  }

  for (std::size_t i = 0; i < cr.branches.size(); ++i)
    if (intersect(g, restriction(cr.z, cr.branches[i]), cr.z) < 0)
      cr.negative_set.push_back(static_cast<int>(i));

  cr.gamma_prime.push_back(a);
  for (int i : cr.negative_set)
    cr.gamma_prime.insert(cr.gamma_prime.end(), cr.branches[i].begin(), cr.branches[i].end());
  std::sort(cr.gamma_prime.begin(), cr.gamma_prime.end());

  cr.has_yau = true;
  cr.yau_length = yau.length;
  cr.dm_equals_zmin = yau.d_m() == yau.z_min;

  const Coeff z_squared = intersect(g, cr.z, cr.z);
  if (z_squared == -2 && yau.length > 1) {
    cr.lemma37_applicable = true;
    cr.lemma37_holds = cr.branches_ade;
    if (!cr.branches_ade) cr.lemma37_detail = "a branch is not an ADE graph";
    // S must coincide with the branches meeting supp(Z - D_m).
    const Cycle diff = cr.z - yau.d_m();
    std::vector<int> expected;
    for (std::size_t i = 0; i < cr.branches.size(); ++i)
      for (int v : cr.branches[i])
        if (diff[v] != 0) {
          expected.push_back(static_cast<int>(i));
          break;
        }
    if (expected != cr.negative_set) {
      std::ostringstream os;
      os << "negative set does not match supp(Z - D_m): S = {";
      for (int i : cr.negative_set) os << ' ' << i;
      os << " }, expected {";
      for (int i : expected) os << ' ' << i;
      os << " }, Z = " << cr.z.to_string() << ", D_m = " << yau.d_m().to_string();
      cr.lemma37_holds = false;
      cr.lemma37_detail = os.str();
    }
  }
  return cr;
}

// Orientation helper: path with `v` at the back.
std::vector<int> oriented_towards(const std::vector<int>& path, int v) {
  std::vector<int> p = path;
  if (!p.empty() && p.front() == v) std::reverse(p.begin(), p.end());
  return p;
}

struct Attachment {
  int vertex;
  Coeff mult;
};

std::vector<Attachment> attachments_into(const WeightedDualGraph& g, int a,
                                         std::span<const int> branch) {
  std::vector<Attachment> result;
  for (int v : branch) {
    const Coeff m = g.multiplicity(a, v);
    if (m > 0) result.push_back({v, m});
  }
  return result;
}

// Template checks for D-shaped branches. `tail` comes out outer-end first and
// includes the node as its last entry.
bool check_rising_tail(const Cycle& z, std::span<const int> tail, int upto) {
  // Coefficients 2, 3, ..., upto+2, then flat.
  for (std::size_t j = 0; j < tail.size(); ++j) {
    const Coeff expect = static_cast<Coeff>(std::min<std::size_t>(j, upto) + 2);
    if (z[tail[j]] != expect) return false;
  }
  return true;
}

}  // namespace

ClassificationResult extract_gamma_prime(const WeightedDualGraph& g,
                                         const EssentialIrreducibility& ei) {
  ClassificationResult cr = extract_gamma_prime_impl(g, ei, yau_sequence(g));
  if (cr.lemma37_applicable && !cr.lemma37_holds) throw InternalError(cr.lemma37_detail);
  return cr;
}

MatchedCase match_theorem38(const WeightedDualGraph& g, const ClassificationResult& cr,
                            const YauData& yau) {
  if (!cr.ei.holds) throw DomainError("matching requires an essentially irreducible cycle");
  if (yau.length <= 1) throw DomainError("matching requires Yau sequence length m > 1");
  const Cycle& z = cr.z;
  if (intersect(g, z, z) != -2) throw DomainError("matching requires degree two");

  MatchedCase m;
  m.special_vertex = cr.ei.special_vertex;
  const int a = m.special_vertex;
  const Coeff k = cr.ei.k;

  if (cr.negative_set.size() == 2) {
    // Case (1): two chains meeting A at their ends, all coefficients 1.
    std::vector<std::vector<int>> chains;
    for (int idx : cr.negative_set) {
      if (!cr.branch_shapes[idx]) return m;
      const AdeShape& shape = *cr.branch_shapes[idx];
      if (shape.family != 'A') return m;
      auto att = attachments_into(g, a, cr.branches[idx]);
      if (att.size() != 1 || att[0].mult != 1) return m;
      const auto& path = shape.path;
      if (att[0].vertex != path.front() && att[0].vertex != path.back()) return m;
      for (int v : path)
        if (z[v] != 1) return m;
      auto oriented = oriented_towards(path, att[0].vertex);  // A-adjacent end last
      std::reverse(oriented.begin(), oriented.end());         // A-adjacent end first
      chains.push_back(std::move(oriented));
    }
    if (k != 1) return m;
    if (chains[0].size() < chains[1].size()) std::swap(chains[0], chains[1]);
    m.case_id = 1;
    m.chain_long = chains[0];
    m.chain_short = chains[1];
    m.m_prime = static_cast<int>(chains[0].size());
    m.n_prime = static_cast<int>(chains[1].size());
    return m;
  }

  if (cr.negative_set.size() != 1) return m;
  const auto& branch = cr.branches[cr.negative_set[0]];
  if (!cr.branch_shapes[cr.negative_set[0]]) return m;
  const AdeShape& shape = *cr.branch_shapes[cr.negative_set[0]];
  const auto att = attachments_into(g, a, branch);
  const int rank = shape.rank;

  if (shape.family == 'A') {
    if (att.size() != 1) return m;
    const auto [v, mult] = att[0];
    auto path = oriented_towards(shape.path, v);  // prefer v at the back
    const int len = rank;

    if (path.back() == v) {
      // Case (2): chain 1 2 ... 2 with A at the 2-end.
      if (len < 3) return m;
      std::vector<Coeff> expected(len, 2);
      expected[0] = 1;
      if (!coefficients_are(z, path, expected)) return m;
      if (mult == 1 && k == 2)
        m.variant = 1;
      else if (mult == 2 && k == 1)
        m.variant = 2;
      else
        return m;
      m.case_id = 2;
      m.n_prime = len;
      m.chain = path;
      return m;
    }

    if ((path[len - 2] == v || path[1] == v) && len >= 3 && mult == 1 && k == 1) {
      // Case (3): the branch is a path of n' vertices with A attached second
      // from an end; the free end plays the extra "1" of the pattern.
      if (path[1] == v && path[len - 2] != v) std::reverse(path.begin(), path.end());
      std::vector<Coeff> expected(len, 2);
      expected[0] = 1;
      expected[len - 1] = 1;
      if (coefficients_are(z, path, expected)) {
        m.case_id = 3;
        m.n_prime = len;
        m.chain = std::vector<int>(path.begin(), path.end() - 1);
        m.t_vertex = path.back();
        return m;
      }
    }
    return m;
  }

  if (shape.family == 'D') {
    const auto& arms = shape.arms;
    const auto arm_of = [&](int v) -> int {
      for (std::size_t i = 0; i < arms.size(); ++i)
        for (int w : arms[i])
          if (w == v) return static_cast<int>(i);
      return -1;
    };
    const auto make_tail = [&](int long_arm) {
      std::vector<int> tail(arms[long_arm].rbegin(), arms[long_arm].rend());
      tail.push_back(shape.node);
      return tail;
    };

    if (att.size() == 1) {
      const auto [v, mult] = att[0];

      if (v == shape.node && mult == 1 && k == 1) {
        // Case (4) with A at the node (k' = n' - 3).
        const int long_arm = 2;
        auto tail = make_tail(long_arm);
        const int kp = rank - 3;
        if (kp % 2 == 0 && check_rising_tail(z, tail, kp) && z[a] == 1 &&
            z[arms[0][0]] == (kp + 2) / 2 && z[arms[1][0]] == (kp + 2) / 2 &&
            static_cast<int>(arms[0].size()) == 1 && static_cast<int>(arms[1].size()) == 1) {
          m.case_id = 4;
          m.n_prime = rank;
          m.k_prime = kp;
          m.tail = tail;
          m.fork_q = arms[0][0];
          m.fork_u = arms[1][0];
          return m;
        }
        return m;
      }

      const int ai = arm_of(v);
      if (ai < 0) return m;

      if (arms[ai].size() >= 2 || (rank == 4 && mult == 1 && k == 1)) {
        // Case (4): A hangs off the tail at distance k' from its outer end.
        // For rank 4 any length-1 arm can serve as the tail.
        const int long_arm = arms[ai].size() >= 2 ? ai : ai;
        auto tail = make_tail(long_arm);
        int kp = -1;
        for (std::size_t j = 0; j < tail.size(); ++j)
          if (tail[j] == v) kp = static_cast<int>(j);
        std::array<int, 2> fork{};
        int fi = 0;
        for (int i = 0; i < 3; ++i)
          if (i != long_arm && arms[i].size() == 1) {
            if (fi < 2) fork[fi++] = arms[i][0];
          }
        if (mult == 1 && k == 1 && fi == 2 && kp >= 0 && kp % 2 == 0 &&
            check_rising_tail(z, tail, kp) && z[a] == 1 && z[fork[0]] == (kp + 2) / 2 &&
            z[fork[1]] == (kp + 2) / 2) {
          m.case_id = 4;
          m.n_prime = rank;
          m.k_prime = kp;
          m.tail = tail;
          m.fork_q = fork[0];
          m.fork_u = fork[1];
          return m;
        }
      }

      if (arms[ai].size() == 1 && rank >= 5 && arms[2].size() >= 2) {
        // A sits on a fork tip: cases (5) and (8).
        const int other = (ai == 0) ? 1 : 0;
        if (arms[other].size() != 1) return m;
        const int q = arms[other][0];
        const int u = v;
        auto tail = make_tail(2);

        if (rank % 2 == 1 && ((mult == 1 && k == 2) || (mult == 2 && k == 1))) {
          const bool pattern = check_rising_tail(z, tail, rank) /* strictly rising */ &&
                               z[shape.node] == rank - 1 && z[q] == (rank - 1) / 2 &&
                               z[u] == (rank + 1) / 2 && z[a] == k;
          if (pattern) {
            m.case_id = 5;
            m.n_prime = rank;
            m.variant = (mult == 1) ? 1 : 2;
            m.tail = tail;
            m.fork_q = q;
            m.fork_u = u;
            return m;
          }
        }
        if (rank == 5 && mult == 1 && k == 1) {
          const bool pattern = z[tail[0]] == 1 && z[tail[1]] == 2 && z[shape.node] == 3 &&
                               z[q] == 2 && z[u] == 2 && z[a] == 1;
          if (pattern) {
            m.case_id = 8;
            m.n_prime = 5;
            m.tail = tail;
            m.fork_q = q;
            m.fork_u = u;
            return m;
          }
        }
      }
      return m;
    }

    if (att.size() == 2 && att[0].mult == 1 && att[1].mult == 1 && k == 1) {
      // Case (6): A joined to both fork tips.
      const int a0 = arm_of(att[0].vertex), a1 = arm_of(att[1].vertex);
      if (a0 < 0 || a1 < 0 || a0 == a1) return m;
      if (arms[a0].size() != 1 || arms[a1].size() != 1) return m;
      const int rest = 3 - a0 - a1;
      auto tail = make_tail(rest);
      if (rank % 2 == 0 && check_rising_tail(z, tail, rank) && z[shape.node] == rank - 1 &&
          z[att[0].vertex] == rank / 2 && z[att[1].vertex] == rank / 2 && z[a] == 1) {
        m.case_id = 6;
        m.n_prime = rank;
        m.tail = tail;
        m.fork_q = att[0].vertex;
        m.fork_u = att[1].vertex;
        return m;
      }
      return m;
    }
    return m;
  }

  if (shape.family == 'E' && rank == 6) {
    // Case (7): A at the outer end of a long arm of E6.
    if (att.size() != 1 || att[0].mult != 1 || k != 1) return m;
    const auto& arms = shape.arms;
    if (arms[0].size() != 1 || arms[1].size() != 2 || arms[2].size() != 2) return m;
    int carrier = -1;
    for (int i = 1; i <= 2; ++i)
      if (arms[i].back() == att[0].vertex) carrier = i;
    if (carrier < 0) return m;
    const bool pattern = z[shape.node] == 4 && z[arms[0][0]] == 2 && z[arms[1][0]] == 3 &&
                         z[arms[1][1]] == 2 && z[arms[2][0]] == 3 && z[arms[2][1]] == 2 &&
                         z[a] == 1;
    if (pattern) {
      m.case_id = 7;
      m.n_prime = 6;
      m.e6_arm = arms[carrier];
      return m;
    }
    return m;
  }

  return m;
}

Prop39Tables prop39_tables(const WeightedDualGraph& g, const MatchedCase& mc) {
  if (mc.case_id < 1 || mc.case_id > 8)
    throw DomainError("restricted-cycle tables require a matched case");
  const std::size_t n = static_cast<std::size_t>(g.size());
  Prop39Tables t{Cycle(n), Cycle(n), false};
  Cycle& dm = t.dm_restricted;
  Cycle& zm = t.zmin_restricted;
  const int a = mc.special_vertex;

  switch (mc.case_id) {
    case 1: {
      dm[a] = 1;
      for (int j = 0; j < mc.m_prime - mc.n_prime; ++j) dm[mc.chain_long[j]] = 1;
      zm[a] = 1;
      break;
    }
    case 2: {
      const Coeff k = (mc.variant == 1) ? 2 : 1;
      const int np = mc.n_prime;
      if (np % 2 == 0) {
        dm[mc.chain[np - 2]] = 1;
        dm[mc.chain[np - 1]] = 2;
        dm[a] = k;
      } else {
        dm[mc.chain[np - 1]] = 1;
        dm[a] = k;
      }
      zm[mc.chain[np - 1]] = 1;
      zm[a] = k;
      break;
    }
    case 3: {
      if (mc.n_prime % 2 == 0) {
        dm[mc.chain.back()] = 1;  // the vertex carrying both A and the free end
        dm[mc.t_vertex] = 1;
        dm[a] = 1;
      } else {
        dm[a] = 1;
      }
      zm[a] = 1;
      break;
    }
    case 4: {
      dm[a] = 1;
      for (std::size_t j = 1; j < mc.tail.size(); ++j)
        dm[mc.tail[j]] = std::min<Coeff>(static_cast<Coeff>(j), mc.k_prime);
      dm[mc.fork_q] = mc.k_prime / 2;
      dm[mc.fork_u] = mc.k_prime / 2;
      zm = dm;
      break;
    }
    case 5: {
      for (std::size_t j = 1; j < mc.tail.size(); ++j) dm[mc.tail[j]] = static_cast<Coeff>(j);
      dm[mc.fork_q] = (mc.n_prime - 3) / 2;
      dm[mc.fork_u] = (mc.n_prime - 1) / 2;
      dm[a] = (mc.variant == 1) ? 2 : 1;
      zm = dm;
      break;
    }
    case 6: {
      for (std::size_t j = 1; j < mc.tail.size(); ++j) dm[mc.tail[j]] = static_cast<Coeff>(j);
      dm[mc.fork_q] = (mc.n_prime - 2) / 2;
      dm[mc.fork_u] = (mc.n_prime - 2) / 2;
      dm[a] = 1;
      zm = dm;
      break;
    }
    case 7: {
      dm[a] = 1;
      zm[a] = 1;
      break;
    }
    case 8: {
      for (int v : mc.tail) dm[v] = 1;
      dm[mc.fork_u] = 1;
      dm[a] = 1;
      zm[a] = 1;
      break;
    }
  }
  t.admissible = (dm == zm);
  return t;
}

ClassificationResult classify(const WeightedDualGraph& g) {
  const EssentialIrreducibility ei = essential_irreducibility(g);
  if (!ei.holds) {
    ClassificationResult cr;
    cr.ei = ei;
    cr.z = fundamental_cycle(g).cycle;
    return cr;
  }
  return classify(g, ei, yau_sequence(g));
}

ClassificationResult classify(const WeightedDualGraph& g, const EssentialIrreducibility& ei,
                              const YauData& yau) {
  if (!ei.holds) {
    ClassificationResult cr;
    cr.ei = ei;
    cr.z = yau.z();
    return cr;
  }
  ClassificationResult cr = extract_gamma_prime_impl(g, ei, yau);
  if (yau.length > 1 && intersect(g, cr.z, cr.z) == -2) {
    cr.matched = match_theorem38(g, cr, yau);
    if (cr.matched.case_id != 0) {
      const Prop39Tables tables = prop39_tables(g, cr.matched);
      cr.dm_restricted = tables.dm_restricted;
      cr.zmin_restricted = tables.zmin_restricted;
      cr.admissible = tables.admissible;
    }
  }
  return cr;
}

}  // namespace dualgraph
