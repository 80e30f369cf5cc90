#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bcflab::suites {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string note;  // extra reporting (e.g. conjecture outcome)
    double seconds;
};

// Runs one acceptance criterion (1..11). Prints nothing; throws nothing.
CriterionResult run_criterion(int id);

// All criterion ids in order.
std::vector<int> criterion_ids();

}  // namespace bcflab::suites
