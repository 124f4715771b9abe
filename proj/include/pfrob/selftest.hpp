#ifndef PFROB_SELFTEST_HPP
#define PFROB_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <pfrob/rng.hpp>

namespace pfrob
{

// quick shrinks random sample sizes and sweep ranges; full runs every check at its stated scale.
enum class Scale { quick, full };

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0; // 0: no runtime bound

    bool within_budget() const { return budget_seconds <= 0 || seconds <= budget_seconds; }
};

inline constexpr int kCheckCount = 9;

// Runs check `id` (1..9). A check fails if any comparison fails or it overruns its budget.
// Throws InputError for an unknown id.
CheckResult run_check(int id, Scale scale, std::uint64_t seed);

std::vector<CheckResult> run_all_checks(Scale scale, std::uint64_t seed, std::ostream *progress = nullptr);

std::string check_name(int id);

// "PASS [3] name: detail", with the elapsed time when with_timing is set.
std::string format_result(const CheckResult &result, bool with_timing);

} // namespace pfrob

#endif
