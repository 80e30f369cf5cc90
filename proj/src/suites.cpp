#include "bcflab/suites.hpp"
namespace bcflab::suites {
std::vector<int> criterion_ids() { return {1,2,3,4,5,6,7,8,9,10,11}; }
CriterionResult run_criterion(int id) { return {id, "todo", false, "", 0.0}; }
}
