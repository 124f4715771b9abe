#include <iostream>

#include <pfrob/selftest.hpp>

// Runs every acceptance check at full scale and prints one PASS/FAIL line per check.
int main()
{
    bool all = true;
    for (int id = 1; id <= pfrob::kCheckCount; ++id) {
        const auto result = pfrob::run_check(id, pfrob::Scale::full, pfrob::kDefaultSeed);
        std::cout << pfrob::format_result(result, true) << std::endl;
        all = all && result.passed;
    }
    return all ? 0 : 1;
}
