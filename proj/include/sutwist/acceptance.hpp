#pragma once

#include <string>
#include <vector>

#include "sutwist/report.hpp"

namespace sutwist::acceptance {

enum class Scale { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;  // one-line account of what was checked
  Report checks;        // individual checks behind the verdict
};

CriterionResult c1_pairing_values(Scale s);
CriterionResult c2_invariant_map(Scale s);
CriterionResult c3_intertwiners(Scale s);
CriterionResult c4_quantum_sign_law(Scale s);
CriterionResult c5_h2_cyclic(Scale s);
CriterionResult c6_h3_class_law(Scale s);
CriterionResult c7_aut_action(Scale s);
CriterionResult c8_klein_classes(Scale s);
CriterionResult c9_classification(Scale s);
CriterionResult c10_presentation(Scale s);
CriterionResult c11_q_integer_monotone(Scale s);

std::vector<CriterionResult> run_acceptance(Scale s);

/// One report item per criterion.
Report summarize(const std::vector<CriterionResult>& results);

}  // namespace sutwist::acceptance
