#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dualgraph/arith.hpp"

namespace dualgraph {

// Integer cycle D = sum d_i E_i over the vertex set of a fixed graph.
// Coefficients may be negative in intermediate arithmetic; an effective cycle
// has all d_i >= 0 and is not zero.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::size_t n) : c_(n, 0) {}
  explicit Cycle(std::vector<Coeff> c) : c_(std::move(c)) {}

  static Cycle unit(std::size_t n, std::size_t i);

  std::size_t size() const { return c_.size(); }
  Coeff operator[](std::size_t i) const { return c_[i]; }
  Coeff& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Coeff>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_effective() const;  // all >= 0 and not zero
  std::vector<int> support() const;
  Coeff total() const;  // sum of coefficients

  Cycle& operator+=(const Cycle& o);
  Cycle& operator-=(const Cycle& o);
  Cycle& operator*=(Coeff s);

  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(Coeff s, Cycle a) { return a *= s; }

  bool operator==(const Cycle&) const = default;

  std::string to_string() const;

 private:
  std::vector<Coeff> c_;
};

// Componentwise partial order on cycles of equal length.
bool componentwise_leq(const Cycle& a, const Cycle& b);
bool componentwise_lt(const Cycle& a, const Cycle& b);

// Componentwise min/max (the lattice operations).
Cycle componentwise_min(const Cycle& a, const Cycle& b);
Cycle componentwise_max(const Cycle& a, const Cycle& b);

// Cycle with exact rational coefficients; hosts the canonical cycle.
class RationalCycle {
 public:
  RationalCycle() = default;
  explicit RationalCycle(std::size_t n) : c_(n, Rational(0)) {}
  explicit RationalCycle(std::vector<Rational> c) : c_(std::move(c)) {}
  explicit RationalCycle(const Cycle& c);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  bool is_integral() const;
  Cycle to_cycle() const;  // requires is_integral()

  RationalCycle& operator*=(const Rational& s);
  friend RationalCycle operator*(const Rational& s, RationalCycle a) { return a *= s; }

  bool operator==(const RationalCycle&) const = default;

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

}  // namespace dualgraph
