#include "dualgraph/cycle.hpp"

#include <sstream>

#include "dualgraph/errors.hpp"

namespace dualgraph {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw InputError("cycle dimension mismatch");
}

}  // namespace

Cycle Cycle::unit(std::size_t n, std::size_t i) {
  Cycle c(n);
  c[i] = 1;
  return c;
}

bool Cycle::is_zero() const {
  for (Coeff v : c_)
    if (v != 0) return false;
  return true;
}

bool Cycle::is_effective() const {
  bool nonzero = false;
  for (Coeff v : c_) {
    if (v < 0) return false;
    if (v > 0) nonzero = true;
  }
  return nonzero;
}

std::vector<int> Cycle::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

Coeff Cycle::total() const {
  Coeff t = 0;
  for (Coeff v : c_) t = checked_add(t, v);
  return t;
}

Cycle& Cycle::operator+=(const Cycle& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

Cycle& Cycle::operator*=(Coeff s) {
  for (Coeff& v : c_) v = checked_mul(v, s);
  return *this;
}

std::string Cycle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

bool componentwise_leq(const Cycle& a, const Cycle& b) {
  require_same_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool componentwise_lt(const Cycle& a, const Cycle& b) { return componentwise_leq(a, b) && a != b; }

Cycle componentwise_min(const Cycle& a, const Cycle& b) {
  require_same_size(a.size(), b.size());
  Cycle r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Cycle componentwise_max(const Cycle& a, const Cycle& b) {
  require_same_size(a.size(), b.size());
  Cycle r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

RationalCycle::RationalCycle(const Cycle& c) : c_(c.size()) {
  for (std::size_t i = 0; i < c.size(); ++i) c_[i] = Rational(static_cast<long>(c[i]));
}

bool RationalCycle::is_integral() const {
  for (const Rational& q : c_)
    if (!dualgraph::is_integral(q)) return false;
  return true;
}

Cycle RationalCycle::to_cycle() const {
  if (!is_integral()) throw DomainError("rational cycle has non-integer coefficients");
  Cycle r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = to_coeff(c_[i].get_num());
  return r;
}

RationalCycle& RationalCycle::operator*=(const Rational& s) {
  for (Rational& q : c_) q *= s;
  return *this;
}

std::string RationalCycle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace dualgraph
