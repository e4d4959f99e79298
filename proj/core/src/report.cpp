#include "dualgraph/report.hpp"

#include <sstream>

namespace dualgraph {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

bool all_hold(const std::vector<HypothesisCheck>& hypotheses) {
  for (const auto& h : hypotheses)
    if (!h.holds) return false;
  return true;
}

std::string TheoremReport::to_text() const {
  std::ostringstream os;
  os << id << ": " << to_string(verdict);
  if (verdict == Verdict::not_applicable) {
    os << " (";
    bool first = true;
    for (const auto& h : hypotheses)
      if (!h.holds) {
        if (!first) os << ", ";
        os << h.name << " fails";
        first = false;
      }
    os << ")";
  } else {
    os << " (predicted " << predicted << ", computed " << computed << ")";
  }
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

}  // namespace dualgraph
