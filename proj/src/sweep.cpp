#include <pfrob/sweep.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include <pfrob/digits.hpp>
#include <pfrob/errors.hpp>

namespace pfrob
{

namespace
{

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_unsigned(const std::string &text, const std::string &key)
{
    const std::string t = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw InputError("sweep config: bad number \"" + t + "\" for key " + key);
    }
    return value;
}

constexpr std::uint64_t kMaxListValue = 1'000'000;

// "1, 3..5" -> {1, 3, 4, 5}; ranged entries pass through keep_in_range, explicit ones through check.
template <typename T, typename Keep, typename Check>
std::vector<T> parse_list(const std::string &value, const std::string &key, Keep keep_in_range, Check check)
{
    std::vector<T> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            const auto v = parse_unsigned(item, key);
            if (v > kMaxListValue) {
                throw InputError("sweep config: value " + item + " for key " + key + " is too large");
            }
            check(v);
            out.push_back(static_cast<T>(v));
            continue;
        }
        const auto lo = parse_unsigned(item.substr(0, dots), key);
        const auto hi = parse_unsigned(item.substr(dots + 2), key);
        if (hi > kMaxListValue) {
            throw InputError("sweep config: range " + item + " for key " + key + " is too large");
        }
        for (auto v = lo; v <= hi; ++v) {
            if (keep_in_range(v)) {
                out.push_back(static_cast<T>(v));
            }
        }
    }
    return out;
}

bool is_odd_prime(std::uint64_t v) { return v % 2 == 1 && is_prime(v); }

std::vector<WeightPair> pairs_for(std::uint32_t p)
{
    std::vector<WeightPair> out;
    XiEnumerator it(2, DigitContext(p, 1), true);
    while (auto t = it.next()) {
        out.push_back({static_cast<std::uint32_t>((*t)[0].get_ui()), static_cast<std::uint32_t>((*t)[1].get_ui())});
    }
    return out;
}

bool bound_holds(std::uint32_t p, unsigned g, unsigned r)
{
    return 2UL * (2UL * g - 2 + r) <= p;
}

bool integral_nonnegative(const Rational &q) { return is_integral(q) && q >= 0; }

} // namespace

SweepConfig parse_sweep_config(std::istream &in)
{
    SweepConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError("sweep config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto any = [](std::uint64_t) { return true; };
        const auto none = [](std::uint64_t) {};
        if (key == "p") {
            config.primes = parse_list<std::uint32_t>(value, key, is_odd_prime, [](std::uint64_t v) {
                if (!is_odd_prime(v)) {
                    throw InputError("sweep config: p = " + std::to_string(v) + " is not an odd prime");
                }
            });
        } else if (key == "g") {
            config.genera = parse_list<unsigned>(value, key, any, none);
        } else if (key == "r") {
            config.marked_points = parse_list<unsigned>(value, key, any, none);
        } else if (key == "weights") {
            if (value == "all") {
                config.policy = WeightPolicy::all;
            } else if (value == "hypothesis") {
                config.policy = WeightPolicy::hypothesis;
            } else {
                throw InputError("sweep config: weights must be all or hypothesis");
            }
        } else if (key == "degL") {
            if (value != "even" && value != "odd") {
                throw InputError("sweep config: degL must be even or odd");
            }
            config.degL_even = value == "even";
        } else if (key == "precision") {
            const auto bits = parse_unsigned(value, key);
            if (bits < 64 || bits > 65536) {
                throw InputError("sweep config: precision must lie in [64, 65536]");
            }
            config.precision = static_cast<unsigned>(bits);
        } else if (key == "max_rows") {
            config.max_rows = parse_unsigned(value, key);
        } else {
            throw InputError("sweep config: unknown key \"" + key + "\"");
        }
    }
    return config;
}

SweepConfig parse_sweep_config_string(const std::string &text)
{
    std::istringstream in(text);
    return parse_sweep_config(in);
}

Integer estimate_sweep_rows(const SweepConfig &config)
{
    Integer total = 0;
    for (const auto p : config.primes) {
        for (const auto g : config.genera) {
            for (const auto r : config.marked_points) {
                if (2L * g - 2 + r <= 0) {
                    continue;
                }
                if (config.policy == WeightPolicy::all) {
                    total += power(Integer(static_cast<unsigned long>(p) * (p - 1) / 2), r);
                    continue;
                }
                if (!bound_holds(p, g, r)) {
                    continue;
                }
                // ways[s]: weight vectors with gap sum s; a pair with gap b occurs p - b times,
                // and r + sum (a1 + a2) has the parity of r + sum b.
                const unsigned K = 2 * g - 2 + r;
                std::vector<Integer> ways(K, 0);
                ways[0] = 1;
                for (unsigned i = 0; i < r; ++i) {
                    std::vector<Integer> next(K, 0);
                    for (unsigned s = 0; s < K; ++s) {
                        if (ways[s] == 0) {
                            continue;
                        }
                        for (unsigned b = 1; s + b < K && b < p; ++b) {
                            next[s + b] += ways[s] * static_cast<unsigned long>(p - b);
                        }
                    }
                    ways = std::move(next);
                }
                for (unsigned s = 0; s < K; ++s) {
                    if ((r + s) % 2 == 0) {
                        total += ways[s];
                    }
                }
            }
        }
    }
    return total;
}

SweepSummary run_sweep(const SweepConfig &config, CountEvaluator &evaluator,
                       const std::function<void(const SweepRow &)> &emit, SweepOptions options)
{
    const Integer estimate = estimate_sweep_rows(config);
    if (estimate > Integer(static_cast<unsigned long>(config.max_rows))) {
        throw CapExceeded("sweep grid exceeds max_rows = " + std::to_string(config.max_rows), estimate.get_str());
    }
    SweepSummary summary;
    for (const auto p : config.primes) {
        const std::vector<WeightPair> pairs = pairs_for(p);
        for (const auto g : config.genera) {
            for (const auto r : config.marked_points) {
                if (2L * g - 2 + r <= 0) {
                    continue;
                }
                const bool filtered = config.policy == WeightPolicy::hypothesis;
                if (filtered && !bound_holds(p, g, r)) {
                    continue;
                }
                const unsigned K = 2 * g - 2 + r;
                std::vector<WeightPair> chosen;
                chosen.reserve(r);
                const std::function<void(unsigned)> visit = [&](unsigned gap_sum) {
                    if (chosen.size() == r) {
                        const Rank2CountInput in(p, g, chosen);
                        SweepRow row;
                        row.p = p;
                        row.g = g;
                        row.pairs = chosen;
                        row.hypotheses = check_hypotheses(in, config.degL_even);
                        if (filtered && !(row.hypotheses.parity && row.hypotheses.gap)) {
                            return;
                        }
                        row.count = evaluator.count(in);
                        row.pgl = pgl_count(row.count, g);
                        row.oracle = evaluator.oracle(in);
                        row.oracle_agrees = row.oracle.contains(row.count);
                        ++summary.rows;
                        if (!row.oracle_agrees) {
                            ++summary.oracle_disagreements;
                        }
                        if (row.hypotheses.all_ok() && !(integral_nonnegative(row.count) &&
                                                         integral_nonnegative(row.pgl))) {
                            ++summary.integrality_failures;
                        }
                        if (options.check_tau && evaluator.count_tau(in) != row.count) {
                            ++summary.tau_mismatches;
                        }
                        emit(row);
                        return;
                    }
                    for (const auto &w : pairs) {
                        if (filtered && gap_sum + w.gap() >= K) {
                            continue;
                        }
                        chosen.push_back(w);
                        visit(gap_sum + w.gap());
                        chosen.pop_back();
                    }
                };
                visit(0);
            }
        }
    }
    return summary;
}

std::string format_weights(const std::vector<WeightPair> &pairs)
{
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += std::to_string(pairs[i].low) + ":" + std::to_string(pairs[i].high);
    }
    return out;
}

std::string csv_header() { return "p,g,r,weights,parity_ok,gap_ok,bound_ok,degL_even,count,pgl_count,oracle_lo,oracle_hi"; }

std::string csv_row(const SweepRow &row)
{
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream out;
    out << row.p << ',' << row.g << ',' << row.pairs.size() << ',' << format_weights(row.pairs) << ','
        << flag(row.hypotheses.parity) << ',' << flag(row.hypotheses.gap) << ',' << flag(row.hypotheses.prime_bound)
        << ',' << flag(row.hypotheses.degL_even) << ',' << row.count.get_str() << ',' << row.pgl.get_str() << ','
        << row.oracle.lo().to_string(25, MPFR_RNDD) << ',' << row.oracle.hi().to_string(25, MPFR_RNDU);
    return out.str();
}

Json to_json(const SweepRow &row)
{
    Json out;
    out["p"] = row.p;
    out["g"] = row.g;
    out["r"] = row.pairs.size();
    out["weights"] = Json::array();
    for (const auto &w : row.pairs) {
        out["weights"].push_back(Json::array({w.low, w.high}));
    }
    const Json flags = to_json(row.hypotheses);
    for (const auto &[k, v] : flags.items()) {
        out[k] = v;
    }
    out["count"] = rational_to_json(row.count);
    out["pgl_count"] = rational_to_json(row.pgl);
    out["oracle"] = to_json(row.oracle);
    out["oracle_agrees"] = row.oracle_agrees;
    return out;
}

std::string summary_line(const SweepSummary &summary)
{
    return "rows " + std::to_string(summary.rows) + ", oracle disagreements " +
           std::to_string(summary.oracle_disagreements);
}

} // namespace pfrob
