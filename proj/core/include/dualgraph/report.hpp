#pragma once

#include <string>
#include <vector>

namespace dualgraph {

enum class Verdict { pass, fail, not_applicable };

std::string to_string(Verdict v);

struct HypothesisCheck {
  std::string name;
  bool holds = false;
};

// Outcome of checking one named statement on one graph. A verdict of pass
// requires exact equality of predicted and computed; vacuous hypotheses yield
// not_applicable, never pass.
struct TheoremReport {
  std::string id;
  std::vector<HypothesisCheck> hypotheses;
  std::string predicted;
  std::string computed;
  Verdict verdict = Verdict::not_applicable;
  std::string note;

  bool applicable() const { return verdict != Verdict::not_applicable; }
  std::string to_text() const;
};

// Builds a report whose verdict is already decided by hypothesis evaluation:
// not_applicable when any hypothesis fails.
bool all_hold(const std::vector<HypothesisCheck>& hypotheses);

}  // namespace dualgraph
