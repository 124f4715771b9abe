#include <doctest.h>

#include <pfrob/errors.hpp>
#include <pfrob/sweep.hpp>

using namespace pfrob;

namespace
{

std::vector<SweepRow> collect(const SweepConfig &config, SweepSummary *summary = nullptr)
{
    CountEvaluator ev(config.precision);
    std::vector<SweepRow> rows;
    const auto s = run_sweep(config, ev, [&](const SweepRow &row) { rows.push_back(row); });
    if (summary) {
        *summary = s;
    }
    return rows;
}

} // namespace

TEST_SUITE("sweep")
{
    TEST_CASE("config parsing")
    {
        const auto c = parse_sweep_config_string("# grid\np = 5..13\ng = 2, 3\nr = 0..2  # marked points\n"
                                                 "weights = all\ndegL = odd\nprecision = 96\nmax_rows = 50\n");
        CHECK(c.primes == std::vector<std::uint32_t>{5, 7, 11, 13});
        CHECK(c.genera == std::vector<unsigned>{2, 3});
        CHECK(c.marked_points == std::vector<unsigned>{0, 1, 2});
        CHECK(c.policy == WeightPolicy::all);
        CHECK_FALSE(c.degL_even);
        CHECK(c.precision == 96);
        CHECK(c.max_rows == 50);

        const auto d = parse_sweep_config_string("p = 3");
        CHECK(d.policy == WeightPolicy::hypothesis);
        CHECK(d.degL_even);
        CHECK(d.precision == kDefaultOracleBits);
        CHECK(d.genera.empty());
    }

    TEST_CASE("config errors")
    {
        CHECK_THROWS_AS(parse_sweep_config_string("p = 4"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("p = 2"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("q = 5"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("p 5"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("g = x"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("g = -1"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("weights = some"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("degL = 2"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("precision = 32"), InputError);
        CHECK_THROWS_AS(parse_sweep_config_string("r = 0..99999999"), InputError);
    }

    TEST_CASE("genus-two grid without marked points")
    {
        SweepSummary summary;
        const auto rows = collect(parse_sweep_config_string("p = 5..13\ng = 2\nr = 0"), &summary);
        REQUIRE(rows.size() == 4);
        CHECK(summary.rows == 4);
        CHECK(summary.oracle_disagreements == 0);
        CHECK(summary.integrality_failures == 0);
        for (const auto &row : rows) {
            const Rational p(row.p);
            CHECK(row.count == 2 * p * (p * p - 1) / 3);
            CHECK(row.oracle_agrees);
            CHECK(row.hypotheses.all_ok());
            CHECK(is_integral(row.pgl));
        }
        CHECK(estimate_sweep_rows(parse_sweep_config_string("p = 5..13\ng = 2\nr = 0")) == 4);
    }

    TEST_CASE("empty grids")
    {
        CHECK(collect(parse_sweep_config_string("p = 5\ng = 0\nr = 0..2")).empty());
        CHECK(collect(parse_sweep_config_string("p = 24..28\ng = 2\nr = 0")).empty());
        CHECK(collect(parse_sweep_config_string("")).empty());
    }

    TEST_CASE("hypothesis policy prunes but the estimate is exact")
    {
        for (const char *text : {"p = 3..13\ng = 0..3\nr = 0..3", "p = 7, 11\ng = 1\nr = 1..2\nweights = all",
                                 "p = 17\ng = 0\nr = 3..5"}) {
            const auto config = parse_sweep_config_string(text);
            CHECK(estimate_sweep_rows(config) == Integer(static_cast<unsigned long>(collect(config).size())));
        }
        for (const auto &row : collect(parse_sweep_config_string("p = 3..13\ng = 0..3\nr = 0..3"))) {
            CHECK(row.hypotheses.parity);
            CHECK(row.hypotheses.gap);
            CHECK(row.hypotheses.prime_bound);
        }
    }

    TEST_CASE("cap refusal")
    {
        const auto config = parse_sweep_config_string("p = 11\ng = 1\nr = 4\nweights = all\nmax_rows = 1000");
        CountEvaluator ev;
        std::size_t emitted = 0;
        try {
            run_sweep(config, ev, [&](const SweepRow &) { ++emitted; });
            FAIL("expected CapExceeded");
        } catch (const CapExceeded &e) {
            // 55^4 weight vectors
            CHECK(e.estimate() == "9150625");
        }
        CHECK(emitted == 0);
    }

    TEST_CASE("output is deterministic")
    {
        const auto config = parse_sweep_config_string("p = 7, 11\ng = 1, 2\nr = 1, 2");
        const auto render = [&] {
            std::string out = csv_header() + "\n";
            for (const auto &row : collect(config)) {
                out += csv_row(row) + "\n" + to_json(row).dump() + "\n";
            }
            return out;
        };
        CHECK(render() == render());
    }

    TEST_CASE("row formatting")
    {
        const auto rows = collect(parse_sweep_config_string("p = 7\ng = 2\nr = 1"));
        REQUIRE_FALSE(rows.empty());
        const SweepRow &row = rows.front();
        CHECK(format_weights(row.pairs) == "0:1");
        CHECK(csv_row(row).rfind("7,2,1,0:1,true,true,true,true,224,14,", 0) == 0);
        const Json j = to_json(row);
        CHECK(j["count"] == 224);
        CHECK(j["pgl_count"] == 14);
        CHECK(j["weights"] == Json::array({Json::array({0, 1})}));
        CHECK(j["validated"] == true);
        CHECK(j["oracle_agrees"] == true);
        CHECK(format_weights({}).empty());
        CHECK(format_weights({{0, 2}, {1, 3}}) == "0:2;1:3");
        CHECK(summary_line(SweepSummary{3, 0, 0, 0}) == "rows 3, oracle disagreements 0");
    }

    TEST_CASE("tau cross-check inside the sweep")
    {
        CountEvaluator ev;
        const auto summary = run_sweep(parse_sweep_config_string("p = 5..11\ng = 0..2\nr = 0..3\nweights = all"), ev,
                                       [](const SweepRow &) {}, SweepOptions{true});
        CHECK(summary.rows > 0);
        CHECK(summary.tau_mismatches == 0);
        CHECK(summary.oracle_disagreements == 0);
        CHECK(summary.integrality_failures == 0);
    }
}
