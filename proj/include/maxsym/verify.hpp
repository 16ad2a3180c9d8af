#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxsym {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// criteria 1-7 and 9 (exact symbolic reproduction)
std::vector<Check> verify_symbolic(uint64_t seed);
// criterion 8
std::vector<Check> verify_obstruction();
// criteria 10-13 (quick mode shrinks the grids; the acceptance gate runs full)
std::vector<Check> verify_numeric(bool quick);

std::vector<Check> verify_all(uint64_t seed, bool quick);

bool all_pass(const std::vector<Check>& cs);

}  // namespace maxsym
