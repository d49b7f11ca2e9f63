#pragma once

// The acceptance suite: twelve numbered end-to-end criteria covering Witt
// arithmetic, the duality pairing, the A_{P,phi} theory, exactness and
// smoothness certification, the Zink functor, the Lau group pipeline,
// equivariance, and the dimension audit.  Each criterion runs
// independently and reports pass/fail with a one-line summary.

#include <string>
#include <vector>

#include "json.hpp"

namespace acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // counts on success, first failure otherwise
    double seconds = 0;
};

// id -> title for the twelve criteria.
const std::vector<std::pair<int, std::string>>& criteria();

// Run one criterion (1-based); quick shrinks sample counts for smoke runs.
CriterionResult run_criterion(int id, bool quick = false);

// Run all twelve in order.
std::vector<CriterionResult> run_all(bool quick = false);

nlohmann::json results_to_json(const std::vector<CriterionResult>& rs);

}  // namespace acceptance
