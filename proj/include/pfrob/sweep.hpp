#ifndef PFROB_SWEEP_HPP
#define PFROB_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <pfrob/counting.hpp>
#include <pfrob/serialize.hpp>

namespace pfrob
{

enum class WeightPolicy { all, hypothesis };

inline constexpr std::uint64_t kDefaultSweepRows = 1'000'000;

struct SweepConfig {
    std::vector<std::uint32_t> primes;
    std::vector<unsigned> genera;
    std::vector<unsigned> marked_points;
    WeightPolicy policy = WeightPolicy::hypothesis;
    bool degL_even = true;
    unsigned precision = kDefaultOracleBits;
    std::uint64_t max_rows = kDefaultSweepRows;
};

// Key-value lines "key = value", '#' comments. Keys: p, g, r (comma lists and a..b ranges;
// p ranges keep only odd primes), weights (all | hypothesis), degL (even | odd), precision, max_rows.
// Throws InputError on unknown keys, malformed values or an explicit p that is not an odd prime.
SweepConfig parse_sweep_config(std::istream &in);
SweepConfig parse_sweep_config_string(const std::string &text);

// Exact number of rows the grid produces.
Integer estimate_sweep_rows(const SweepConfig &config);

struct SweepRow {
    std::uint32_t p = 0;
    unsigned g = 0;
    std::vector<WeightPair> pairs;
    HypothesisReport hypotheses;
    Rational count;
    Rational pgl;
    Interval oracle{kDefaultOracleBits};
    bool oracle_agrees = false;
};

struct SweepSummary {
    std::uint64_t rows = 0;
    std::uint64_t oracle_disagreements = 0;
    // Validated rows whose count is not a non-negative integer divisible by 2^{2g}.
    std::uint64_t integrality_failures = 0;
    std::uint64_t tau_mismatches = 0;
};

struct SweepOptions {
    // Also evaluate the tau form and count mismatches.
    bool check_tau = false;
};

// Visits grid points in the order p, g, r (as listed) and weight vectors in lexicographic order.
// Grid points with 2g - 2 + r <= 0 are skipped. Throws CapExceeded if the grid is larger than max_rows.
SweepSummary run_sweep(const SweepConfig &config, CountEvaluator &evaluator,
                       const std::function<void(const SweepRow &)> &emit, SweepOptions options = {});

std::string format_weights(const std::vector<WeightPair> &pairs);
std::string csv_header();
std::string csv_row(const SweepRow &row);
Json to_json(const SweepRow &row);
std::string summary_line(const SweepSummary &summary);

} // namespace pfrob

#endif
