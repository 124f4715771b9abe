#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include <pfrob/counting.hpp>
#include <pfrob/disc.hpp>
#include <pfrob/errors.hpp>
#include <pfrob/polygon.hpp>
#include <pfrob/selftest.hpp>
#include <pfrob/serialize.hpp>
#include <pfrob/sweep.hpp>

namespace pfrob::cli
{

namespace
{

unsigned parse_bits(const std::string &text, const std::string &source)
{
    std::size_t used = 0;
    unsigned long bits = 0;
    try {
        bits = std::stoul(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || bits < 64 || bits > 65536) {
        throw InputError(source + " must be an integer in [64, 65536], got \"" + text + "\"");
    }
    return static_cast<unsigned>(bits);
}

unsigned default_precision()
{
    if (const char *env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
        return parse_bits(env, kPrecisionEnv);
    }
    return kDefaultOracleBits;
}

WeightPair parse_pair(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InputError("weight pair must look like a1,a2, got \"" + text + "\"");
    }
    try {
        std::size_t used_low = 0, used_high = 0;
        const std::string low = text.substr(0, comma), high = text.substr(comma + 1);
        const long a1 = std::stol(low, &used_low);
        const long a2 = std::stol(high, &used_high);
        if (used_low != low.size() || used_high != high.size() || a1 < 0 || a2 < 0 || a2 > 0x7fffffffL) {
            throw InputError("");
        }
        return {static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2)};
    } catch (const std::exception &) {
        throw InputError("weight pair must be two non-negative integers a1,a2, got \"" + text + "\"");
    }
}

std::vector<Subquotient> parse_hn(const std::string &text)
{
    std::vector<Subquotient> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos) {
                throw InputError("");
            }
            std::size_t used_rank = 0;
            const std::string rank = item.substr(0, colon);
            const long r = std::stol(rank, &used_rank);
            Integer degree;
            if (used_rank != rank.size() || r <= 0 || degree.set_str(item.substr(colon + 1), 10) != 0) {
                throw InputError("");
            }
            out.push_back({static_cast<Rank>(r), degree});
        } catch (const std::exception &) {
            throw InputError("HN pieces must look like rank:degree,rank:degree, got \"" + item + "\"");
        }
    }
    if (out.empty()) {
        throw InputError("--hn needs at least one rank:degree piece");
    }
    return out;
}

std::string ok(bool b) { return b ? "ok" : "FAILED"; }

std::string vertex_list(const ConvexPolygon &polygon)
{
    std::string out;
    for (const auto &v : polygon.vertices()) {
        out += (out.empty() ? "" : ",") + std::string("(") + v.x.get_str() + "," + v.y.get_str() + ")";
    }
    return out;
}

Json read_json(const std::string &data, const std::string &path, std::istream &in)
{
    std::string text;
    if (!data.empty()) {
        text = data;
    } else if (!path.empty() && path != "-") {
        std::ifstream file(path);
        if (!file) {
            throw InputError("cannot read " + path);
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    } else {
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

bool is_parabolic(const Json &j) { return j.is_object() && j.contains("weights"); }

struct CountOptions {
    std::uint32_t p = 0;
    unsigned g = 0;
    unsigned r = 0;
    std::vector<std::string> pairs;
    bool degL_odd = false;
    std::string precision;
    bool json = false;
};

int cmd_count(const CountOptions &o, std::ostream &out)
{
    if (o.pairs.size() != o.r) {
        throw InputError("--r " + std::to_string(o.r) + " needs exactly that many --pairs, got " +
                         std::to_string(o.pairs.size()));
    }
    std::vector<WeightPair> pairs;
    for (const auto &text : o.pairs) {
        pairs.push_back(parse_pair(text));
    }
    const unsigned bits = o.precision.empty() ? default_precision() : parse_bits(o.precision, "--precision");
    const Rank2CountInput in(o.p, o.g, pairs);
    const HypothesisReport hypotheses = check_hypotheses(in, !o.degL_odd);
    CountEvaluator evaluator(bits);
    const Rational count = evaluator.count(in);
    const Rational pgl = pgl_count(count, o.g);
    const Interval oracle = evaluator.oracle(in);
    const bool agrees = oracle.contains(count);
    if (o.json) {
        Json j;
        j["p"] = o.p;
        j["g"] = o.g;
        j["r"] = o.r;
        j["weights"] = Json::array();
        for (const auto &w : pairs) {
            j["weights"].push_back(Json::array({w.low, w.high}));
        }
        j["hypotheses"] = to_json(hypotheses);
        j["status"] = hypotheses.all_ok() ? "validated" : "unvalidated";
        j["count"] = rational_to_json(count);
        j["pgl_count"] = rational_to_json(pgl);
        j["oracle"] = to_json(oracle);
        j["oracle_agrees"] = agrees;
        out << j.dump(2) << '\n';
    } else {
        out << "p " << o.p << ", g " << o.g << ", r " << o.r << ", weights "
            << (pairs.empty() ? std::string("none") : format_weights(pairs)) << '\n';
        out << "hypotheses: parity " << ok(hypotheses.parity) << ", gap " << ok(hypotheses.gap) << ", bound "
            << ok(hypotheses.prime_bound) << ", degL even " << ok(hypotheses.degL_even) << '\n';
        out << "status " << (hypotheses.all_ok() ? "validated" : "unvalidated") << '\n';
        out << "count " << count.get_str() << '\n';
        out << "pgl_count " << pgl.get_str() << '\n';
        out << "oracle [" << oracle.lo().to_string(25, MPFR_RNDD) << ", " << oracle.hi().to_string(25, MPFR_RNDU)
            << "] at " << oracle.precision() << " bits, " << (agrees ? "contains the count" : "DISAGREES") << '\n';
    }
    if (!agrees) {
        throw InvariantViolation("exact count lies outside the oracle interval");
    }
    return kExitOk;
}

struct LocalOptions {
    std::string data;
    std::string input;
    std::uint32_t p = 0;
    unsigned N = 0;
    std::string d;
};

int cmd_local(const std::string &sub, const LocalOptions &o, std::istream &in, std::ostream &out)
{
    if (sub == "monodromy") {
        const DigitContext ctx(o.p, o.N);
        Integer d;
        if (o.d.empty() || d.set_str(o.d, 10) != 0) {
            throw InputError("--d must be an integer, got \"" + o.d + "\"");
        }
        Json j;
        j["p"] = o.p;
        j["N"] = o.N;
        j["d"] = integer_to_json(d);
        j["monodromy"] = monodromy(d, ctx);
        j["negated_digits"] = negate_digits(d, ctx);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    const Json input = read_json(o.data, o.input, in);
    Json result;
    if (sub == "pullback") {
        result = to_json(local_pullback(parabolic_from_json(input)));
    } else if (sub == "descent") {
        result = to_json(local_descent(flat_from_json(input)));
    } else if (sub == "det") {
        result = is_parabolic(input) ? to_json(local_det(parabolic_from_json(input)))
                                     : to_json(local_det(flat_from_json(input).flat));
    } else if (sub == "roundtrip") {
        if (is_parabolic(input)) {
            const auto e = parabolic_from_json(input);
            const auto pulled = local_pullback(e);
            const auto back = local_descent(pulled);
            result["roundtrip"] = back == e;
            result["pullback"] = to_json(pulled);
            result["descent"] = to_json(back);
        } else {
            const auto f = flat_from_json(input);
            const auto down = local_descent(f);
            const auto back = local_pullback(down);
            result["roundtrip"] = back.flat == f.flat && back.flag == f.flag;
            result["descent"] = to_json(down);
            result["pullback"] = to_json(back);
        }
    } else {
        throw InputError("unknown local subcommand " + sub);
    }
    out << result.dump(2) << '\n';
    return kExitOk;
}

struct PolygonOptions {
    Rank n = 0;
    std::string a;
    unsigned g = 0;
    unsigned r = 0;
    std::string hn;
    bool json = false;
};

int cmd_polygon(const PolygonOptions &o, std::ostream &out)
{
    Integer a;
    if (a.set_str(o.a, 10) != 0) {
        throw InputError("--a must be an integer, got \"" + o.a + "\"");
    }
    const CurveType curve{o.g, o.r};
    const ConvexPolygon oper = oper_polygon(o.n, a, curve);
    Json j;
    j["oper"] = to_json(oper);
    if (!o.json) {
        out << "oper polygon " << vertex_list(oper) << '\n';
    }
    if (!o.hn.empty()) {
        const auto pieces = parse_hn(o.hn);
        const ConvexPolygon hn = hn_polygon(pieces);
        const bool dominated = dominates(oper, hn);
        const bool matched = oper_match(hn, o.n, a, curve);
        const SlopeGapReport gaps = slope_gap_report(pieces, curve);
        j["hn"] = to_json(hn);
        j["dominated"] = dominated;
        j["oper_match"] = matched;
        j["slope_gaps"] = to_json(gaps);
        if (!o.json) {
            out << "HN polygon " << vertex_list(hn) << '\n';
            out << "dominated " << (dominated ? "yes" : "no") << '\n';
            out << "oper match " << (matched ? "yes" : "no") << '\n';
            out << "slope gaps";
            for (const auto &g : gaps.gaps) {
                out << ' ' << g.get_str();
            }
            out << (gaps.gaps_within_bound ? " (within " : " (exceed ") << curve.euler().get_str() << ")\n";
            out << "slope spread " << gaps.spread.get_str()
                << (gaps.spread_within_bound ? " (within bound)" : " (exceeds bound)") << '\n';
        }
    }
    if (o.json) {
        out << j.dump(2) << '\n';
    }
    return kExitOk;
}

struct SweepOptionsCli {
    std::string config;
    std::string output;
    bool json = false;
};

int cmd_sweep(const SweepOptionsCli &o, std::ostream &out, std::ostream &err)
{
    std::ifstream config_file(o.config);
    if (!config_file) {
        throw InputError("cannot read sweep config " + o.config);
    }
    const SweepConfig config = parse_sweep_config(config_file);
    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            throw InputError("cannot write " + o.output);
        }
    }
    std::ostream &table = o.output.empty() ? out : file;
    CountEvaluator evaluator(config.precision);
    bool first = true;
    if (o.json) {
        table << "[";
    } else {
        table << csv_header() << '\n';
    }
    const SweepSummary summary = run_sweep(config, evaluator, [&](const SweepRow &row) {
        if (o.json) {
            table << (first ? "\n" : ",\n") << to_json(row).dump();
        } else {
            table << csv_row(row) << '\n';
        }
        first = false;
    });
    if (o.json) {
        table << (first ? "]\n" : "\n]\n");
    }
    table.flush();
    // Keep the table on stdout clean when it is written there.
    (o.output.empty() ? err : out) << summary_line(summary) << '\n';
    if (summary.oracle_disagreements > 0) {
        throw InvariantViolation("exact counts outside the oracle interval: " +
                                 std::to_string(summary.oracle_disagreements));
    }
    return kExitOk;
}

struct SelftestOptions {
    std::uint64_t seed = kDefaultSeed;
    bool timing = false;
    bool json = false;
};

int cmd_selftest(const std::string &scale_name, const SelftestOptions &o, std::ostream &out)
{
    const Scale scale = scale_name == "full" ? Scale::full : Scale::quick;
    if (!o.json) {
        out << "seed " << o.seed << '\n';
    }
    Json results = Json::array();
    bool all = true;
    for (int id = 1; id <= kCheckCount; ++id) {
        const CheckResult r = run_check(id, scale, o.seed);
        all = all && r.passed;
        if (o.json) {
            Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
            if (o.timing) {
                j["seconds"] = r.seconds;
            }
            results.push_back(j);
        } else {
            out << format_result(r, o.timing) << '\n' << std::flush;
        }
    }
    if (o.json) {
        out << Json{{"seed", o.seed}, {"scale", scale_name}, {"passed", all}, {"checks", results}}.dump(2) << '\n';
    } else {
        out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? kExitOk : kExitInvariant;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact computations for dormant opers and Frobenius-destabilized bundles", "pfrob"};
    app.require_subcommand(1);

    CountOptions count;
    auto *count_cmd = app.add_subcommand("count", "rank-2 counting formula with hypothesis flags and oracle");
    count_cmd->add_option("--p", count.p, "odd prime")->required();
    count_cmd->add_option("--g", count.g, "genus")->required();
    count_cmd->add_option("--r", count.r, "number of marked points")->required();
    count_cmd->add_option("--pairs", count.pairs, "weight pair a1,a2 (one per marked point)");
    count_cmd->add_flag("--degL-odd", count.degL_odd, "determinant of odd degree");
    count_cmd->add_option("--precision", count.precision, "oracle precision in bits");
    count_cmd->add_flag("--json", count.json, "JSON output");

    LocalOptions local;
    std::string local_sub;
    auto *local_cmd = app.add_subcommand("local", "local pull-back, descent and determinant on the disc");
    local_cmd->add_option("operation", local_sub, "pullback | descent | roundtrip | det | monodromy")
        ->required()
        ->check(CLI::IsMember({"pullback", "descent", "roundtrip", "det", "monodromy"}));
    local_cmd->add_option("--data", local.data, "JSON datum inline");
    local_cmd->add_option("--input", local.input, "JSON datum file (- for stdin)");
    local_cmd->add_option("--p", local.p, "prime (monodromy)");
    local_cmd->add_option("--N", local.N, "level horizon (monodromy)");
    local_cmd->add_option("--d", local.d, "exponent (monodromy)");
    bool local_json = false;
    local_cmd->add_flag("--json", local_json, "JSON output (always on for local)");

    PolygonOptions polygon;
    auto *polygon_cmd = app.add_subcommand("polygon", "oper polygon and comparison with HN data");
    polygon_cmd->add_option("--n", polygon.n, "rank")->required();
    polygon_cmd->add_option("--a", polygon.a, "degree of the top filtration step")->required();
    polygon_cmd->add_option("--g", polygon.g, "genus")->required();
    polygon_cmd->add_option("--r", polygon.r, "number of marked points")->required();
    polygon_cmd->add_option("--hn", polygon.hn, "HN pieces rank:degree,... from the largest slope");
    polygon_cmd->add_flag("--json", polygon.json, "JSON output");

    SweepOptionsCli sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "tabulate counts over a grid");
    sweep_cmd->add_option("--config", sweep.config, "key = value config file")->required();
    sweep_cmd->add_option("--output", sweep.output, "output file (default stdout)");
    sweep_cmd->add_flag("--json", sweep.json, "JSON array instead of CSV");

    SelftestOptions selftest;
    std::string scale = "quick";
    auto *selftest_cmd = app.add_subcommand("selftest", "acceptance checks");
    selftest_cmd->add_option("scale", scale, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    selftest_cmd->add_option("--seed", selftest.seed, "seed for the random samples");
    selftest_cmd->add_flag("--timing", selftest.timing, "print elapsed time per check");
    selftest_cmd->add_flag("--json", selftest.json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (*count_cmd) {
            return cmd_count(count, out);
        }
        if (*local_cmd) {
            return cmd_local(local_sub, local, in, out);
        }
        if (*polygon_cmd) {
            return cmd_polygon(polygon, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep, out, err);
        }
        return cmd_selftest(scale, selftest, out);
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvariantViolation &e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const InsufficientPrecision &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace pfrob::cli
