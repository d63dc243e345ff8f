#ifndef SKA_ACCEPTANCE_HPP
#define SKA_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace ska {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

// Named end-to-end checks; filter selects by substring (empty = all).
std::vector<CriterionResult> run_acceptance(const std::string& filter, unsigned jobs);

std::vector<std::string> acceptance_names();

}  // namespace ska

#endif
