#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualgraph/cycle.hpp"

namespace dualgraph {

// Exceptional component: self-intersection (weight), geometric genus and
// conductor degree, as they enter the adjunction formula.
struct VertexData {
  Coeff weight = -2;
  Coeff genus = 0;
  Coeff conductor = 0;

  bool operator==(const VertexData&) const = default;

  // Smooth rational curve with self-intersection -2.
  bool is_rational_minus_two() const { return weight == -2 && genus == 0 && conductor == 0; }
  // Exceptional curve of the first kind; its presence means the resolution is not minimal.
  bool is_contractible() const { return weight == -1 && genus == 0 && conductor == 0; }
};

struct EdgeData {
  int a = 0;
  int b = 0;
  Coeff multiplicity = 1;

  bool operator==(const EdgeData&) const = default;
};

// Pivot list when the form is negative definite, otherwise an integer vector v
// with v^T M v >= 0. Both sides are exact.
struct DefinitenessCertificate {
  bool negative_definite = false;
  std::vector<Rational> pivots;
  Cycle witness;     // only when !negative_definite
  Coeff witness_value = 0;  // v^T M v for the witness
};

// Weighted dual graph of a resolution. Vertices are dense indices 0..n-1;
// the intersection matrix M has M_ii = weight_i and M_ij = total edge
// multiplicity between i and j. Immutable after construction.
class WeightedDualGraph {
 public:
  struct Options {
    bool require_negative_definite = true;
  };

  WeightedDualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges,
                    std::vector<std::string> names, Options options);
  WeightedDualGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges,
                    std::vector<std::string> names = {});

  int size() const { return static_cast<int>(vertices_.size()); }
  const VertexData& vertex(int i) const { return vertices_[i]; }
  const std::vector<VertexData>& vertices() const { return vertices_; }
  std::span<const EdgeData> edges() const { return edges_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  Coeff weight(int i) const { return vertices_[i].weight; }
  // Neighbors of i as (vertex, total multiplicity), sorted by vertex.
  const std::vector<std::pair<int, Coeff>>& neighbors(int i) const { return adjacency_[i]; }
  Coeff multiplicity(int i, int j) const;

  // No exceptional curve of the first kind anywhere.
  bool is_minimal_resolution() const;

  bool definiteness_verified() const { return certificate_.has_value(); }
  const DefinitenessCertificate& definiteness_certificate() const;

 private:
  std::vector<VertexData> vertices_;
  std::vector<EdgeData> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<int, Coeff>>> adjacency_;
  std::optional<DefinitenessCertificate> certificate_;
};

// E_i . D, the degree of O(D) on the i-th component.
Coeff vertex_degree(const WeightedDualGraph& g, int i, const Cycle& d);

// Bilinear intersection form a^T M b.
Coeff intersect(const WeightedDualGraph& g, const Cycle& a, const Cycle& b);
Rational intersect(const WeightedDualGraph& g, const RationalCycle& a, const Cycle& b);

// O_d(-c) is nef, i.e. c.E_i <= 0 for every component of supp(d).
bool is_anti_nef_on(const WeightedDualGraph& g, const Cycle& c, const Cycle& d);
// c.E_i = 0 for every component of supp(d).
bool is_numerically_trivial_on(const WeightedDualGraph& g, const Cycle& c, const Cycle& d);

// Exact symmetric elimination without row exchanges; negative definite iff all
// pivots are negative. On failure the certificate carries an integer witness.
DefinitenessCertificate check_negative_definite(const WeightedDualGraph& g);

// Fast yes/no via Bareiss leading principal minors (used in hot loops).
bool is_negative_definite(const WeightedDualGraph& g);

// Induced subgraph on `support` is connected (support must be non-empty).
bool induces_connected_subgraph(const WeightedDualGraph& g, std::span<const int> support);

// Connected components of the induced subgraph on `support`.
std::vector<std::vector<int>> induced_components(const WeightedDualGraph& g,
                                                 std::span<const int> support);

}  // namespace dualgraph
